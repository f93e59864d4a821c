mod common;

use proptest::prelude::*;
use rand::Rng;
use sptg::reduce::gen_exp_family;
use sptg::{q, solve_priced, Game, LexPair, Owner, StateId};

/// Backward induction over `n` rounds with "+∞ if no goal yet". Every edge
/// adds a nonnegative cost, so a minimizer strategy that reaches a goal
/// within `n` moves exists whenever the value is finite, and `n` rounds
/// suffice.
fn brute_force(g: &Game, terminal: &[Option<LexPair>]) -> Vec<Option<LexPair>> {
    let n = g.len();
    let term = |s: usize| terminal.get(s).cloned().flatten();
    let mut val: Vec<Option<LexPair>> = g
        .state_ids()
        .map(|s| if g.owner(s) == Owner::Goal { Some(LexPair::zero()) } else { term(s.0) })
        .collect();
    // before any move only goals and terminal options count; a maximizer
    // with a move left may still refuse to stop, so start from +∞ for it
    for s in g.state_ids() {
        if g.owner(s) == Owner::Max && !g.out_edges(s).is_empty() {
            val[s.0] = None;
        }
    }
    let start = val.clone();
    let mut val = start.clone();
    for _ in 0..=n {
        let mut next = start.clone();
        for s in g.state_ids() {
            let opts = g.out_edges(s).iter().map(|&e| {
                let edge = g.edge(e);
                val[edge.to.0].as_ref().map(|p| p.plus_cost(&edge.cost))
            });
            let stop = term(s.0);
            next[s.0] = match g.owner(s) {
                Owner::Goal => Some(LexPair::zero()),
                // None is +∞: smallest finite option, else +∞
                Owner::Min => opts.chain([stop]).flatten().min(),
                // one move into +∞ makes a maximizer +∞
                Owner::Max if opts.clone().any(|o| o.is_none()) => None,
                Owner::Max => opts.chain([stop]).flatten().max(),
            };
        }
        val = next;
    }
    val
}

fn random_game(seed: u64) -> (Game, Vec<Option<LexPair>>) {
    let mut r = common::rng(seed);
    let n = r.gen_range(2..=7);
    let mut g = Game::default();
    for i in 0..n {
        match r.gen_range(0..5) {
            0 => g.add_goal(format!("g{i}")).unwrap(),
            1 | 2 => g.add_state(format!("s{i}"), Owner::Min, q(r.gen_range(0..3), 1)).unwrap(),
            _ => g.add_state(format!("s{i}"), Owner::Max, q(r.gen_range(0..3), 1)).unwrap(),
        };
    }
    for a in 0..n {
        for b in 0..n {
            if a != b && r.gen_bool(0.3) {
                g.add_edge(StateId(a), StateId(b), q(r.gen_range(0..4), r.gen_range(1..3)));
            }
        }
    }
    let terminal = if r.gen_bool(0.3) {
        Vec::new()
    } else {
        (0..n)
            .map(|_| r.gen_bool(0.4).then(|| LexPair::new(q(r.gen_range(0..5), 1), q(r.gen_range(-2..3), 1))))
            .collect()
    };
    (g, terminal)
}

#[test]
fn single_edge_to_goal() {
    let mut g = Game::default();
    let m = g.add_state("m", Owner::Max, q(0, 1)).unwrap();
    let goal = g.add_goal("g").unwrap();
    g.add_edge(m, goal, q(5, 1));
    assert_eq!(solve_priced(&g, &[]).value(m).unwrap().value, q(5, 1));
}

#[test]
fn family_at_the_horizon() {
    let g = gen_exp_family(2);
    let sol = solve_priced(&g, &[]);
    for (id, v) in [("vr0", q(0, 1)), ("vl1", q(0, 1)), ("vr1", q(1, 2)), ("vl2", q(1, 4)), ("vr2", q(1, 2))] {
        assert_eq!(sol.value(g.find(id).unwrap()).unwrap().value, v, "{id}");
    }
}

#[test]
fn maximizer_cycle_without_goal_is_infinite() {
    let mut g = Game::default();
    let a = g.add_state("a", Owner::Max, q(0, 1)).unwrap();
    let b = g.add_state("b", Owner::Max, q(0, 1)).unwrap();
    g.add_goal("g").unwrap();
    g.add_edge(a, b, q(1, 1));
    g.add_edge(b, a, q(1, 1));
    let sol = solve_priced(&g, &[]);
    assert!(sol.value(a).is_none() && sol.value(b).is_none());
}

#[test]
fn choices_realise_values() {
    for seed in 0..200 {
        let (g, terminal) = random_game(seed);
        let sol = solve_priced(&g, &terminal);
        for s in g.state_ids() {
            let (Some(v), Some(c)) = (sol.value(s), sol.choices[s.0]) else { continue };
            let realised = match c {
                sptg::PricedChoice::Goal => LexPair::zero(),
                sptg::PricedChoice::Terminal => terminal[s.0].clone().unwrap(),
                sptg::PricedChoice::Edge(e) => sol.value(g.edge(e).to).unwrap().plus_cost(&g.edge(e).cost),
            };
            assert_eq!(&realised, v, "seed {seed}, state {}", g.id(s));
        }
    }
}

proptest! {
    #[test]
    fn matches_backward_induction(seed in 0u64..100_000) {
        let (g, terminal) = random_game(seed);
        let sol = solve_priced(&g, &terminal);
        prop_assert_eq!(sol.values, brute_force(&g, &terminal));
    }
}
