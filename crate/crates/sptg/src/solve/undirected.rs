//! Games whose edges between non-goal states come in equal-cost pairs.
//!
//! Moving from a minimizer state to a maximizer state never helps the
//! minimizer, since the maximizer can send the play straight back at the
//! same cost. So the minimizer states form a one-player game on their own,
//! and each finite maximizer state is one envelope over its neighbours.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::game::{Game, Owner, StateId};
use crate::pwl::PwlFunction;
use crate::rational::Rational;
use crate::values::ValueMap;

use super::epi::event_point_iteration;
use super::query::infinite_states;
use super::vi::state_envelope;

pub fn check_symmetric(game: &Game) -> Result<()> {
    let mut pairs: HashMap<(usize, usize, Rational), usize> = HashMap::new();
    for e in game.edges() {
        if game.owner(e.from) != Owner::Goal && game.owner(e.to) != Owner::Goal {
            *pairs.entry((e.from.0, e.to.0, e.cost.clone())).or_default() += 1;
        }
    }
    for ((a, b, c), k) in &pairs {
        if pairs.get(&(*b, *a, c.clone())) != Some(k) {
            return Err(Error::Asymmetric(format!(
                "{} -> {} (cost {c})",
                game.id(StateId(*a)),
                game.id(StateId(*b))
            )));
        }
    }
    Ok(())
}

pub fn solve_undirected(game: &Game) -> Result<ValueMap> {
    game.check()?;
    check_symmetric(game)?;
    let h = game.horizon().clone();
    let mut infinite = vec![false; game.len()];
    for s in infinite_states(game)? {
        infinite[s.0] = true;
    }
    // ping-pong between two maximizer states never ends
    for e in game.edges() {
        if game.owner(e.from) == Owner::Max && game.owner(e.to) == Owner::Max {
            debug_assert!(infinite[e.from.0] && infinite[e.to.0]);
        }
    }

    // the minimizer + goal subgame
    let mut sub = Game::new(h.clone());
    let mut map: Vec<Option<StateId>> = vec![None; game.len()];
    for s in game.state_ids() {
        if game.owner(s) != Owner::Max {
            let id = sub.add_state(game.id(s), game.owner(s), game.rate(s).clone())?;
            sub.set_urgent(id, game.state(s).urgent);
            map[s.0] = Some(id);
        }
    }
    for e in game.edges() {
        if game.owner(e.from) != Owner::Min {
            continue;
        }
        if let (Some(a), Some(b)) = (map[e.from.0], map[e.to.0]) {
            sub.add_edge(a, b, e.cost.clone());
        }
    }
    let sub_values = event_point_iteration(&sub)?;

    let mut functions: Vec<PwlFunction> = game
        .state_ids()
        .map(|s| match map[s.0] {
            Some(id) => sub_values.get(id).clone(),
            None => PwlFunction::infinite(h.clone()),
        })
        .collect();
    for s in game.state_ids() {
        if game.owner(s) == Owner::Max && !infinite[s.0] {
            if let Some(env) = state_envelope(game, &functions, s)? {
                functions[s.0] = env.function;
            }
        }
    }
    Ok(ValueMap::new(h, functions))
}
