//! Time-positional strategies and the plays they induce.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::game::{EdgeId, Game, Owner, StateId};
use crate::rational::{ExtendedValue, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    Min,
    Max,
}

impl Player {
    pub fn owns(self, owner: Owner) -> bool {
        matches!((self, owner), (Player::Min, Owner::Min) | (Player::Max, Owner::Max))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Choice {
    Edge(EdgeId),
    /// Wait until the next change point.
    Delay,
}

/// Change points `0 = w_0 < … < w_k = T` and choice tables `S_0 … S_k`:
/// `S_j` applies on `[w_j, w_{j+1})` and `S_k` at `T` itself. States without
/// outgoing edges have no entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strategy {
    pub player: Player,
    pub change_points: Vec<Rational>,
    pub choices: Vec<BTreeMap<StateId, Choice>>,
}

impl Strategy {
    pub fn validate(&self, game: &Game) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidStrategy(m));
        let w = &self.change_points;
        if w.len() < 2 || !w[0].is_zero() || w.last() != Some(game.horizon()) {
            return bad("change points must run from 0 to the horizon".into());
        }
        if w.windows(2).any(|p| p[1] <= p[0]) {
            return bad("change points must be strictly increasing".into());
        }
        if self.choices.len() != w.len() {
            return bad(format!("{} choice tables for {} change points", self.choices.len(), w.len()));
        }
        for (j, table) in self.choices.iter().enumerate() {
            for s in game.state_ids() {
                if !self.player.owns(game.owner(s)) || game.out_edges(s).is_empty() {
                    continue;
                }
                match table.get(&s) {
                    None => return bad(format!("no choice for {:?} in table {j}", game.id(s))),
                    Some(Choice::Delay) if j + 1 == w.len() => {
                        return bad(format!("{:?} delays at the horizon", game.id(s)))
                    }
                    Some(Choice::Delay) if game.state(s).urgent => {
                        return bad(format!("urgent state {:?} delays", game.id(s)))
                    }
                    Some(Choice::Edge(e)) if game.edge(*e).from != s => {
                        return bad(format!("{:?} chooses an edge it does not own", game.id(s)))
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    /// Index `j` of the change-point interval containing `t`.
    fn interval(&self, t: &Rational) -> usize {
        self.change_points.partition_point(|w| w <= t) - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlayStep {
    pub state: StateId,
    pub arrival: Rational,
    pub delay: Rational,
    pub edge: Option<EdgeId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlayEnd {
    Goal,
    /// A state repeated at a fixed time, or a non-goal state without edges.
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Play {
    pub steps: Vec<PlayStep>,
    pub end: PlayEnd,
    pub outcome: ExtendedValue,
}

/// The play from `(s0, t0)` when both players follow their strategies.
pub fn play(
    game: &Game,
    strat_min: &Strategy,
    strat_max: &Strategy,
    s0: StateId,
    t0: &Rational,
) -> Result<Play> {
    if strat_min.player != Player::Min || strat_max.player != Player::Max {
        return Err(Error::InvalidStrategy("strategies passed for the wrong players".into()));
    }
    strat_min.validate(game)?;
    strat_max.validate(game)?;
    if t0.is_negative() || t0 > game.horizon() {
        return Err(Error::Precondition(format!("start time {t0} outside [0, {}]", game.horizon())));
    }
    let mut steps = Vec::new();
    let mut time = t0.clone();
    let mut state = s0;
    let mut total = Rational::zero();
    let mut seen_now: HashSet<StateId> = HashSet::new();
    loop {
        let strat = match game.owner(state) {
            Owner::Goal => {
                steps.push(PlayStep { state, arrival: time.clone(), delay: Rational::zero(), edge: None });
                return Ok(Play { steps, end: PlayEnd::Goal, outcome: ExtendedValue::Finite(total) });
            }
            Owner::Min => strat_min,
            Owner::Max => strat_max,
        };
        if game.out_edges(state).is_empty() || !seen_now.insert(state) {
            steps.push(PlayStep { state, arrival: time.clone(), delay: Rational::zero(), edge: None });
            return Ok(Play { steps, end: PlayEnd::Infinite, outcome: ExtendedValue::Infinite });
        }
        let j0 = strat.interval(&time);
        let mut j = j0;
        while strat.choices[j][&state] == Choice::Delay {
            j += 1;
        }
        let arrival = time.clone();
        let mut delay = Rational::zero();
        if j > j0 {
            delay = &strat.change_points[j] - &time;
            total += game.rate(state) * &delay;
            time = strat.change_points[j].clone();
            seen_now.clear();
            seen_now.insert(state);
        }
        let Choice::Edge(e) = strat.choices[j][&state] else { unreachable!() };
        total += &game.edge(e).cost;
        steps.push(PlayStep { state, arrival, delay, edge: Some(e) });
        state = game.edge(e).to;
    }
}

pub fn play_outcome(
    game: &Game,
    strat_min: &Strategy,
    strat_max: &Strategy,
    s0: StateId,
    t0: &Rational,
) -> Result<ExtendedValue> {
    play(game, strat_min, strat_max, s0, t0).map(|p| p.outcome)
}
