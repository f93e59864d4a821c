//! Seeded random game generators shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sptg::formula::Formula;
use sptg::{Game, Owner, Rational, StateId};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `q ≤ max_den` and value in `[0, max]`.
pub fn rational(rng: &mut impl Rng, max_den: i64, max: i64) -> Rational {
    let q = rng.gen_range(1..=max_den);
    Rational::new(rng.gen_range(0..=max * q), q)
}

/// A time in `[0, horizon]` on a grid of `1/64`-ths of the horizon.
pub fn time(rng: &mut impl Rng, horizon: &Rational) -> Rational {
    horizon * &Rational::new(rng.gen_range(0..=64), 64)
}

fn owner(rng: &mut impl Rng) -> Owner {
    if rng.gen_bool(0.5) {
        Owner::Min
    } else {
        Owner::Max
    }
}

/// Acyclic game on `n` states (`2 ≤ n`), edges only from lower to higher
/// index; the last state is a goal and a few others may be too. Rates and
/// costs are `p/q` with `q ≤ max_den`; `int_rates` makes rates integers.
pub fn random_dag(seed: u64, n: usize, max_den: i64, int_rates: bool) -> Game {
    let mut r = rng(seed);
    let mut g = Game::default();
    for i in 0..n {
        let goal = i == n - 1 || (i > 0 && r.gen_bool(0.1));
        if goal {
            g.add_goal(format!("s{i}")).unwrap();
        } else {
            let rate = if int_rates { Rational::from_integer(r.gen_range(0..=3)) } else { rational(&mut r, max_den, 3) };
            g.add_state(format!("s{i}"), owner(&mut r), rate).unwrap();
        }
    }
    for i in 0..n - 1 {
        let from = StateId(i);
        if g.owner(from) == Owner::Goal {
            continue;
        }
        let mut any = false;
        for j in i + 1..n {
            if r.gen_bool(0.45) || (!any && j == n - 1 && r.gen_bool(0.9)) {
                let cost = rational(&mut r, max_den, 3);
                g.add_edge(from, StateId(j), cost);
                any = true;
            }
        }
    }
    g
}

/// Random rooted tree on `n` states, edges from parents to children; leaves
/// are goals.
pub fn random_tree(seed: u64, n: usize) -> Game {
    let mut r = rng(seed);
    let mut parent = vec![usize::MAX; n];
    let mut has_child = vec![false; n];
    for (i, p) in parent.iter_mut().enumerate().skip(1) {
        *p = r.gen_range(0..i);
        has_child[*p] = true;
    }
    let mut g = Game::default();
    for (i, &inner) in has_child.iter().enumerate() {
        if inner {
            let rate = rational(&mut r, 4, 3);
            g.add_state(format!("t{i}"), owner(&mut r), rate).unwrap();
        } else {
            g.add_goal(format!("t{i}")).unwrap();
        }
    }
    for i in 1..n {
        let cost = rational(&mut r, 4, 3);
        g.add_edge(StateId(parent[i]), StateId(i), cost);
    }
    g
}

/// Game whose edges between non-goal states come in equal-cost pairs; goal
/// edges are one-way. `n` counts all states, one or two of them goals.
pub fn random_undirected(seed: u64, n: usize) -> Game {
    let mut r = rng(seed);
    let mut g = Game::default();
    let goals = if n > 3 && r.gen_bool(0.5) { 2 } else { 1 };
    for i in 0..n - goals {
        let rate = rational(&mut r, 4, 3);
        g.add_state(format!("u{i}"), owner(&mut r), rate).unwrap();
    }
    for i in 0..goals {
        g.add_goal(format!("g{i}")).unwrap();
    }
    let inner = n - goals;
    for a in 0..inner {
        for b in a + 1..inner {
            if r.gen_bool(0.4) {
                let c = rational(&mut r, 4, 2);
                g.add_edge(StateId(a), StateId(b), c.clone());
                g.add_edge(StateId(b), StateId(a), c);
            }
        }
        for k in 0..goals {
            if r.gen_bool(0.5) {
                let c = rational(&mut r, 4, 3);
                g.add_edge(StateId(a), StateId(inner + k), c);
            }
        }
    }
    g
}

/// Every NNF formula over `x1..xn` with at most `max_gates` binary gates, up
/// to swapping the two children of a gate.
pub fn all_formulas(n: usize, max_gates: usize) -> Vec<Formula> {
    let mut by_gates: Vec<Vec<Formula>> = Vec::new();
    by_gates.push((1..=n).flat_map(|v| [Formula::var(v), Formula::not_var(v)]).collect());
    for g in 1..=max_gates {
        let mut level = Vec::new();
        for a in 0..g {
            let b = g - 1 - a;
            if a > b {
                break;
            }
            for (i, x) in by_gates[a].iter().enumerate() {
                let start = if a == b { i } else { 0 };
                for y in &by_gates[b][start..] {
                    level.push(Formula::And(vec![x.clone(), y.clone()]));
                    level.push(Formula::Or(vec![x.clone(), y.clone()]));
                }
            }
        }
        by_gates.push(level);
    }
    by_gates.into_iter().flatten().collect()
}
