//! Optimal time-positional strategies read off an event-point run.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::game::{Game, Owner, StateId};
use crate::priced::{PricedChoice, PricedSolution};
use crate::rational::Rational;
use crate::strategy::{Choice, Player, Strategy};
use crate::values::ValueMap;

use super::epi::event_point_trace;

/// Optimal strategies for both players whose change points are event points.
/// Between consecutive event points a state either delays (its optimal pair
/// is the waiting option) or takes the edge realising its pair.
pub fn extract_optimal_strategies(game: &Game, vm: &ValueMap) -> Result<(Strategy, Strategy)> {
    vm.check_shape(game)?;
    let trace = event_point_trace(game)?;
    if trace.values != *vm {
        return Err(Error::InconsistentValues("value map differs from the solver's values".into()));
    }
    let mut points: Vec<Rational> = trace.steps.iter().rev().map(|s| s.lo.clone()).collect();
    points.push(game.horizon().clone());
    let mut sols: Vec<&PricedSolution> = trace.steps.iter().rev().map(|s| &s.solution).collect();
    sols.push(&trace.at_horizon);
    Ok((build(game, Player::Min, &points, &sols), build(game, Player::Max, &points, &sols)))
}

fn build(game: &Game, player: Player, points: &[Rational], sols: &[&PricedSolution]) -> Strategy {
    let infinite: Vec<bool> = sols.last().unwrap().values.iter().map(|v| v.is_none()).collect();
    let mut change_points: Vec<Rational> = Vec::new();
    let mut choices: Vec<BTreeMap<StateId, Choice>> = Vec::new();
    let last = sols.len() - 1;
    for (j, sol) in sols.iter().enumerate() {
        let table: BTreeMap<StateId, Choice> = game
            .state_ids()
            .filter(|&s| player.owns(game.owner(s)) && !game.out_edges(s).is_empty())
            .map(|s| (s, choice(game, sol, &infinite, s)))
            .collect();
        // merge equal neighbours, but the table at T always stays separate
        if j != last && j > 0 && choices.last() == Some(&table) {
            continue;
        }
        change_points.push(points[j].clone());
        choices.push(table);
    }
    Strategy { player, change_points, choices }
}

fn choice(game: &Game, sol: &PricedSolution, infinite: &[bool], s: StateId) -> Choice {
    match sol.choices[s.0] {
        Some(PricedChoice::Edge(e)) => Choice::Edge(e),
        Some(PricedChoice::Terminal) => Choice::Delay,
        Some(PricedChoice::Goal) => unreachable!("goal states own no choices"),
        None => {
            // +∞ state: the maximizer stays among +∞ states; any minimizer
            // edge already leads to one
            let edges = game.out_edges(s);
            let e = match game.owner(s) {
                Owner::Max => *edges.iter().find(|&&e| infinite[game.edge(e).to.0]).unwrap_or(&edges[0]),
                _ => edges[0],
            };
            Choice::Edge(e)
        }
    }
}
