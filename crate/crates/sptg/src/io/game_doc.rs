//! Game JSON: `{"horizon": "T", "states": [{"id", "owner", "rate",
//! "urgent"}], "edges": [{"from", "to", "cost"}]}` with rationals as strings.
//! A reduction document wraps a game with its query state and the two
//! expected values at time 0.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{Game, Owner, StateId};
use crate::rational::Rational;
use crate::reduce::ReductionOutput;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GameDoc {
    #[serde(default = "Rational::one")]
    horizon: Rational,
    states: Vec<StateDoc>,
    #[serde(default)]
    edges: Vec<EdgeDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateDoc {
    id: String,
    owner: String,
    #[serde(default)]
    rate: Rational,
    #[serde(default)]
    urgent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    from: String,
    to: String,
    cost: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReductionDoc {
    query: String,
    expected_true: Rational,
    expected_false: Rational,
    game: GameDoc,
}

/// A compiled instance read back from disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionDocument {
    pub game: Game,
    pub query: StateId,
    pub expected_true: Rational,
    pub expected_false: Rational,
}

impl ReductionDocument {
    pub fn midpoint(&self) -> Rational {
        (&self.expected_true + &self.expected_false) / Rational::from_integer(2)
    }
}

fn build(doc: GameDoc) -> Result<Game> {
    let mut g = Game::new(doc.horizon);
    for (k, s) in doc.states.iter().enumerate() {
        let owner: Owner = s.owner.parse().map_err(|e| Error::Parse(format!("states[{k}]: {e}")))?;
        let id = g.add_state(s.id.clone(), owner, s.rate.clone()).map_err(|e| Error::Parse(format!("states[{k}]: {e}")))?;
        g.set_urgent(id, s.urgent);
    }
    for (k, e) in doc.edges.iter().enumerate() {
        let from = g.lookup(&e.from).map_err(|err| Error::Parse(format!("edges[{k}].from: {err}")))?;
        let to = g.lookup(&e.to).map_err(|err| Error::Parse(format!("edges[{k}].to: {err}")))?;
        g.add_edge(from, to, e.cost.clone());
    }
    g.check()?;
    Ok(g)
}

fn document(game: &Game) -> GameDoc {
    GameDoc {
        horizon: game.horizon().clone(),
        states: game
            .states()
            .iter()
            .map(|s| StateDoc { id: s.id.clone(), owner: s.owner.as_str().into(), rate: s.rate.clone(), urgent: s.urgent })
            .collect(),
        edges: game
            .edges()
            .iter()
            .map(|e| EdgeDoc { from: game.id(e.from).into(), to: game.id(e.to).into(), cost: e.cost.clone() })
            .collect(),
    }
}

fn pretty<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("serializable");
    text.push('\n');
    text
}

/// Reads and validates a game document.
pub fn parse_game(text: &str) -> Result<Game> {
    let doc: GameDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    build(doc)
}

pub fn serialize_game(game: &Game) -> String {
    pretty(&document(game))
}

pub fn parse_reduction(text: &str) -> Result<ReductionDocument> {
    let doc: ReductionDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let game = build(doc.game)?;
    let query = game.lookup(&doc.query).map_err(|e| Error::Parse(format!("query: {e}")))?;
    Ok(ReductionDocument { game, query, expected_true: doc.expected_true, expected_false: doc.expected_false })
}

pub fn serialize_reduction(out: &ReductionOutput) -> String {
    pretty(&ReductionDoc {
        query: out.game.id(out.query).into(),
        expected_true: out.expected_true.clone(),
        expected_false: out.expected_false.clone(),
        game: document(&out.game),
    })
}

/// Either document kind; a plain game has no query.
pub fn parse_game_or_reduction(text: &str) -> Result<(Game, Option<ReductionDocument>)> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if value.get("game").is_some() {
        let doc = parse_reduction(text)?;
        Ok((doc.game.clone(), Some(doc)))
    } else {
        parse_game(text).map(|g| (g, None))
    }
}
