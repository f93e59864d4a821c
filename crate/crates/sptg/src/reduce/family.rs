//! The game family whose value functions have exponentially many pieces.
//!
//! Level `k` holds `vl{k}` (minimizer, rate 1) and `vr{k}` (maximizer,
//! rate 0), each with an edge of cost `2^{-k}` to `vl{k-1}` and a free edge
//! to `vr{k-1}`. Level 0 is the goal `vl0` and `vr0` (maximizer, rate 1).

use crate::game::{Game, Owner, StateId};
use crate::pwl::PwlFunction;
use crate::rational::Rational;
use crate::values::ValueMap;

pub fn left(k: usize) -> String {
    format!("vl{k}")
}

pub fn right(k: usize) -> String {
    format!("vr{k}")
}

pub fn gen_exp_family(i: usize) -> Game {
    let mut g = Game::default();
    add_levels(&mut g, "", i, |_| Rational::zero(), |k| Rational::pow2(-(k as i32)), Rational::one())
        .expect("fresh ids");
    g
}

/// Adds levels `0..=top` under `prefix`; `bottom` is the cost of the
/// `vr0 → vl0` edge, `level_cost(k)` that of the `vl{k-1}` edges, `unit`
/// the nonzero holding rate. Returns `(vl, vr)` ids per level.
pub(crate) fn add_levels(
    g: &mut Game,
    prefix: &str,
    top: usize,
    bottom: impl Fn(usize) -> Rational,
    level_cost: impl Fn(usize) -> Rational,
    unit: Rational,
) -> crate::Result<(Vec<StateId>, Vec<StateId>)> {
    let mut vl = vec![g.add_goal(format!("{prefix}{}", left(0)))?];
    let mut vr = vec![g.add_state(format!("{prefix}{}", right(0)), Owner::Max, unit.clone())?];
    g.add_edge(vr[0], vl[0], bottom(top));
    for k in 1..=top {
        let l = g.add_state(format!("{prefix}{}", left(k)), Owner::Min, unit.clone())?;
        let r = g.add_state(format!("{prefix}{}", right(k)), Owner::Max, Rational::zero())?;
        for s in [l, r] {
            g.add_edge(s, vl[k - 1], level_cost(k));
            g.add_edge(s, vr[k - 1], Rational::zero());
        }
        vl.push(l);
        vr.push(r);
    }
    Ok((vl, vr))
}

/// `2^k` pieces of duration `2^{-k}` alternating between slope 0 and -1.
fn alternating(k: usize, start: Rational, flat_first: bool) -> PwlFunction {
    let pieces = 1usize << k;
    let width = Rational::pow2(-(k as i32));
    let mut pts = vec![(Rational::zero(), start)];
    for j in 0..pieces {
        let (t, v) = pts.last().unwrap().clone();
        let flat = (j % 2 == 0) == flat_first;
        let v = if flat { v } else { &v - &width };
        pts.push((&t + &width, v));
    }
    PwlFunction::new(Rational::one(), pts).expect("valid breakpoints")
}

/// The value functions of `gen_exp_family(i)` written out directly:
/// `vl{k}` starts at `1 - 2^{-k}` and is flat first, `vr{k}` starts at 1 and
/// falls first.
pub fn family_closed_form(i: usize) -> ValueMap {
    let mut functions = Vec::with_capacity(2 * (i + 1));
    for k in 0..=i {
        let l = if k == 0 {
            PwlFunction::constant(Rational::one(), Rational::zero())
        } else {
            alternating(k, Rational::one() - Rational::pow2(-(k as i32)), true)
        };
        functions.push(l);
        functions.push(alternating(k, Rational::one(), false));
    }
    ValueMap::new(Rational::one(), functions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::solve::{event_point_iteration, value_iteration};

    #[test]
    fn small_families_match_closed_form() {
        for i in 0..=6 {
            let g = gen_exp_family(i);
            assert_eq!(g.len(), 2 * (i + 1));
            assert_eq!(event_point_iteration(&g).unwrap(), family_closed_form(i), "i = {i}");
        }
    }

    #[test]
    fn value_iteration_agrees() {
        for i in 0..=3 {
            let g = gen_exp_family(i);
            let k = g.longest_path_length().unwrap();
            assert_eq!(value_iteration(&g, k).unwrap(), family_closed_form(i));
        }
    }

    #[test]
    fn closed_form_examples() {
        let f = family_closed_form(2);
        let g = gen_exp_family(2);
        let at = |id: &str, t| f.get(g.find(id).unwrap()).at(&t);
        assert_eq!(at("vl2", q(0, 1)), q(3, 4));
        assert_eq!(at("vr2", q(0, 1)), q(1, 1));
        assert_eq!(at("vl2", q(1, 1)), q(1, 4));
    }
}
