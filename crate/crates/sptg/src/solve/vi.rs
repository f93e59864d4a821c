//! Value iteration: `val(·,·,G^k)` computed round by round from envelopes.

use crate::error::{Error, Result};
use crate::game::{EdgeId, Game, Owner, StateId};
use crate::pwl::{envelope_tagged, PwlFunction, Segment, Side, TaggedEnvelope};
use crate::rational::Rational;
use crate::values::ValueMap;

/// Source of a candidate segment: leaving along `edge` now (`wait_until`
/// empty) or after waiting until the given breakpoint time.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Candidate {
    pub edge: EdgeId,
    pub wait_until: Option<Rational>,
}

/// `val(·,·,G^k)`: plays longer than `k` edges are worth +∞.
pub fn value_iteration(game: &Game, k: usize) -> Result<ValueMap> {
    game.check()?;
    let mut current = initial(game);
    for _ in 0..k {
        current = round(game, &current)?;
    }
    Ok(ValueMap::new(game.horizon().clone(), current))
}

/// Iterates until two consecutive rounds agree; returns the values and the
/// number of rounds taken.
pub fn value_iteration_fixpoint(game: &Game, max_rounds: usize) -> Result<(ValueMap, usize)> {
    game.check()?;
    let mut current = initial(game);
    for k in 1..=max_rounds {
        let next = round(game, &current)?;
        if next == current {
            return Ok((ValueMap::new(game.horizon().clone(), next), k - 1));
        }
        current = next;
    }
    Err(Error::NoFixpoint(max_rounds))
}

fn initial(game: &Game) -> Vec<PwlFunction> {
    let h = game.horizon();
    game.state_ids()
        .map(|s| match game.owner(s) {
            Owner::Goal => PwlFunction::constant(h.clone(), Rational::zero()),
            _ => PwlFunction::infinite(h.clone()),
        })
        .collect()
}

fn round(game: &Game, prev: &[PwlFunction]) -> Result<Vec<PwlFunction>> {
    game.state_ids()
        .map(|s| Ok(state_envelope(game, prev, s)?.map_or_else(|| PwlFunction::infinite(game.horizon().clone()), |e| e.function)))
        .collect()
}

/// One Bellman step at `s` against the successor functions `prev`; `None`
/// when the state is +∞. Goal states yield the constant 0.
pub fn state_envelope(
    game: &Game,
    prev: &[PwlFunction],
    s: StateId,
) -> Result<Option<TaggedEnvelope<Candidate>>> {
    let h = game.horizon();
    let side = match game.owner(s) {
        Owner::Goal => {
            let f = PwlFunction::constant(h.clone(), Rational::zero());
            return Ok(Some(TaggedEnvelope { pieces: Vec::new(), function: f }));
        }
        Owner::Min => Side::Lower,
        Owner::Max => Side::Upper,
    };
    let state = game.state(s);
    let mut segs: Vec<Segment<Candidate>> = Vec::new();
    for &e in game.out_edges(s) {
        let edge = game.edge(e);
        let f = &prev[edge.to.0];
        if f.is_infinite() {
            if side == Side::Upper {
                return Ok(None);
            }
            continue;
        }
        let g = f.shift(&edge.cost);
        segs.extend(g.to_segments(Candidate { edge: e, wait_until: None }));
        if !state.urgent {
            segs.extend(g.wait_extension_tagged(&state.rate, |x| Candidate {
                edge: e,
                wait_until: Some(x.clone()),
            }));
        }
    }
    if segs.is_empty() {
        return Ok(None);
    }
    Ok(Some(envelope_tagged(&segs, side, h)?))
}
