//! Literal gadgets: states whose value encodes `x_i` or `¬x_i`.
//!
//! A copy of the family on levels `0..=i+1` with doubled currency, cut down
//! to the time window where its top level oscillates once per assignment
//! interval of `x_1 … x_i`, is attached to `s_i`. `L` (value `2 − t/2`)
//! bounds the encoding from the non-excursion side, and `s*` combines them.

use crate::error::{Error, Result};
use crate::game::{Game, Owner, StateId};
use crate::rational::{q, Rational};
use crate::solve::{encoding_violation, event_point_iteration, EncodingKind, EncodingParams};

use super::family::add_levels;
use super::transform::{restrict_time, scale_currency};

/// Value `2 − t/2`: a rate-1/2 maximizer whose goal edge costs 3/2.
pub(crate) fn add_reference(g: &mut Game, prefix: &str) -> Result<StateId> {
    let l = g.add_state(format!("{prefix}L"), Owner::Max, q(1, 2))?;
    let goal = g.add_goal(format!("{prefix}L.goal"))?;
    g.add_edge(l, goal, q(3, 2));
    Ok(l)
}

/// Adds a gadget for the literal `x_i` (`positive`) or `¬x_i` into `g` with
/// ids under `prefix`; returns `s*`. The encoding has `v = 2` and offset
/// `2^{-i-2}` over `i` variables.
pub fn add_literal(g: &mut Game, prefix: &str, i: usize, positive: bool, kind: EncodingKind) -> Result<StateId> {
    assert!(i >= 1, "variables are numbered from 1");
    let e = i as i32;
    let (vl, vr) = add_levels(
        g,
        prefix,
        i + 1,
        |_| Rational::one() - Rational::pow2(-e - 1),
        |k| Rational::pow2(1 - k as i32),
        Rational::one(),
    )?;
    let si = g.add_state(format!("{prefix}s{i}"), Owner::Max, Rational::zero())?;
    if positive {
        g.add_edge(si, vr[i + 1], Rational::pow2(-e - 1));
    } else {
        g.add_edge(si, vl[i + 1], Rational::pow2(-e));
    }
    let l = add_reference(g, prefix)?;
    let star = match kind {
        EncodingKind::Straight => g.add_state(format!("{prefix}s*"), Owner::Max, Rational::zero())?,
        EncodingKind::Reverse => g.add_state(format!("{prefix}s*"), Owner::Min, Rational::one())?,
    };
    g.add_edge(star, l, Rational::zero());
    g.add_edge(star, si, Rational::zero());
    Ok(star)
}

/// A standalone literal gadget, checked against its claimed encoding. The
/// direct construction has `2i + 8` states; if it ever failed the check, the
/// restrict-and-scale pipeline is tried on both candidate windows.
pub fn gen_variable_gadget(i: usize, positive: bool, kind: EncodingKind) -> Result<(Game, StateId)> {
    let mut g = Game::default();
    let s = add_literal(&mut g, "", i, positive, kind)?;
    if literal_encodes(&g, s, i, positive, kind)? {
        return Ok((g, s));
    }
    for window in candidate_windows(i) {
        let (g, s) = variable_gadget_pipeline(i, positive, kind, &window)?;
        if literal_encodes(&g, s, i, positive, kind)? {
            return Ok((g, s));
        }
    }
    Err(Error::Construction(format!("no literal gadget for x{i} (positive: {positive}, {kind:?})")))
}

fn literal_encodes(g: &Game, s: StateId, i: usize, positive: bool, kind: EncodingKind) -> Result<bool> {
    let vm = event_point_iteration(g)?;
    let p = EncodingParams { v: q(2, 1), offset: Rational::pow2(-(i as i32) - 2), n: i, kind };
    Ok(encoding_violation(vm.get(s), |a| a.get(i) == positive, &p).is_none())
}

/// The two readings of where the family's top level spells out `x_i`:
/// `[2^{-i-2}, 2^{-i-2} + 1/2]` and `[1/2 − 2^{-i-1}, 1 − 2^{-i-1}]`.
pub fn candidate_windows(i: usize) -> [(Rational, Rational); 2] {
    let e = i as i32;
    let a1 = Rational::pow2(-e - 2);
    let a2 = q(1, 2) - Rational::pow2(-e - 1);
    [(a1.clone(), a1 + q(1, 2)), (a2.clone(), a2 + q(1, 2))]
}

/// The gadget assembled step by step: the family on levels `0..=i+1` with
/// the attachment `s_i`, restricted to `window`, currency doubled, then
/// bounded by `L` and combined in `s*`.
pub fn variable_gadget_pipeline(
    i: usize,
    positive: bool,
    kind: EncodingKind,
    window: &(Rational, Rational),
) -> Result<(Game, StateId)> {
    let e = i as i32;
    let mut base = Game::default();
    let (vl, vr) =
        add_levels(&mut base, "", i + 1, |_| Rational::zero(), |k| Rational::pow2(-(k as i32)), Rational::one())?;
    let si = base.add_state(format!("s{i}"), Owner::Max, Rational::zero())?;
    if positive {
        base.add_edge(si, vr[i + 1], Rational::pow2(-e - 2));
    } else {
        base.add_edge(si, vl[i + 1], Rational::pow2(-e - 1));
    }
    let restricted = restrict_time(&base, &window.0, &window.1)?;
    let mut g = scale_currency(&restricted, &q(2, 1))?;
    let l = add_reference(&mut g, "")?;
    let star = match kind {
        EncodingKind::Straight => g.add_state("s*", Owner::Max, Rational::zero())?,
        EncodingKind::Reverse => g.add_state("s*", Owner::Min, Rational::one())?,
    };
    g.add_edge(star, l, Rational::zero());
    g.add_edge(star, si, Rational::zero());
    Ok((g, star))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Formula;
    use crate::solve::witnessed_at_midpoints;

    #[test]
    fn literal_gadgets_encode() {
        for i in 1..=5 {
            for positive in [true, false] {
                for kind in [EncodingKind::Straight, EncodingKind::Reverse] {
                    let (g, s) = gen_variable_gadget(i, positive, kind).unwrap();
                    assert_eq!(g.len(), 2 * i + 8);
                    let vm = event_point_iteration(&g).unwrap();
                    let f = if positive { Formula::var(i) } else { Formula::not_var(i) };
                    let p = EncodingParams { v: q(2, 1), offset: Rational::pow2(-(i as i32) - 2), n: i, kind };
                    let pred = |a: &crate::Assignment| f.eval(a);
                    assert_eq!(encoding_violation(vm.get(s), pred, &p), None, "i={i} pos={positive} {kind:?}");
                    assert!(witnessed_at_midpoints(vm.get(s), pred, &p));
                }
            }
        }
    }

    #[test]
    fn reference_line() {
        let (g, _) = gen_variable_gadget(1, true, EncodingKind::Straight).unwrap();
        let vm = event_point_iteration(&g).unwrap();
        let l = vm.get(g.find("L").unwrap());
        assert_eq!(l.breakpoints(), &[(q(0, 1), q(2, 1)), (q(1, 1), q(3, 2))]);
    }

    #[test]
    fn pipeline_windows() {
        // which window reading makes the assembled gadget encode x_i
        for i in 1..=3 {
            for positive in [true, false] {
                let ok: Vec<bool> = candidate_windows(i)
                    .iter()
                    .map(|w| {
                        let (g, s) = variable_gadget_pipeline(i, positive, EncodingKind::Straight, w).unwrap();
                        literal_encodes(&g, s, i, positive, EncodingKind::Straight).unwrap()
                    })
                    .collect();
                assert_eq!(ok, vec![true, false], "i={i} positive={positive}");
            }
        }
    }
}
