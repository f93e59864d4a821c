//! Value-preserving (or value-rescaling) game transforms.

use crate::error::{Error, Result};
use crate::game::{Game, Owner, StateId};
use crate::rational::{q, Rational};
use crate::solve::{event_point_iteration, value_iteration_fixpoint};
use crate::values::ValueMap;

/// Values by event-point iteration, or by value iteration when some state is
/// urgent.
pub fn solve_any(game: &Game) -> Result<ValueMap> {
    if game.has_urgent() {
        value_iteration_fixpoint(game, game.len() + 2).map(|(vm, _)| vm)
    } else {
        event_point_iteration(game)
    }
}

fn copy_states(game: &Game, horizon: Rational, rate: impl Fn(&Rational) -> Rational) -> Result<Game> {
    let mut g = Game::new(horizon);
    for s in game.states() {
        let id = g.add_state(s.id.clone(), s.owner, rate(&s.rate))?;
        g.set_urgent(id, s.urgent);
    }
    Ok(g)
}

/// The game over `[0, 1]` with `val'(v, t) = val(v, a + (b − a)t)`.
///
/// Time is stretched by scaling rates with `b − a`. At the right end every
/// finite state may stop at its original value at `b`: a maximizer through a
/// goal edge of that cost, a minimizer through a fresh maximizer that charges
/// the largest rate while waiting, so stopping never pays off earlier.
pub fn restrict_time(game: &Game, a: &Rational, b: &Rational) -> Result<Game> {
    if a.is_negative() || a >= b || b > game.horizon() {
        return Err(Error::Precondition(format!("window [{a}, {b}] not inside [0, {}]", game.horizon())));
    }
    let vm = solve_any(game)?;
    let width = b - a;
    let mut g = copy_states(game, Rational::one(), |r| r * &width)?;
    for e in game.edges() {
        g.add_edge(e.from, e.to, e.cost.clone());
    }
    let top = &game.max_rate() * &width;
    for s in game.state_ids() {
        let Some(exit) = vm.value(s, b)?.finite().cloned() else { continue };
        let id = game.id(s);
        match game.owner(s) {
            Owner::Goal => {}
            Owner::Max => {
                let goal = g.add_goal(format!("{id}@exit"))?;
                g.add_edge(s, goal, exit);
            }
            Owner::Min => {
                let hold = g.add_state(format!("{id}@hold"), Owner::Max, top.clone())?;
                let goal = g.add_goal(format!("{id}@exit"))?;
                g.add_edge(s, hold, Rational::zero());
                g.add_edge(hold, goal, exit);
            }
        }
    }
    Ok(g)
}

/// Multiplies every cost and rate (hence every value) by `factor`.
pub fn scale_currency(game: &Game, factor: &Rational) -> Result<Game> {
    if !factor.is_positive() {
        return Err(Error::Precondition(format!("currency factor {factor} is not positive")));
    }
    let mut g = copy_states(game, game.horizon().clone(), |r| r * factor)?;
    for e in game.edges() {
        g.add_edge(e.from, e.to, &e.cost * factor);
    }
    Ok(g)
}

/// Measures time in units of `2^{-i}`: horizon and costs grow by `2^i`, rates
/// stay, and `val'(v, 2^i t) = 2^i val(v, t)`. Every cost must become an
/// integer.
pub fn rescale_integer(game: &Game, i: u32) -> Result<Game> {
    let unit = Rational::pow2(i as i32);
    let mut g = copy_states(game, game.horizon() * &unit, Rational::clone)?;
    for e in game.edges() {
        let cost = &e.cost * &unit;
        if !cost.is_integer() {
            return Err(Error::Precondition(format!(
                "cost {} of {} -> {} is not a multiple of 2^-{i}",
                e.cost,
                game.id(e.from),
                game.id(e.to)
            )));
        }
        g.add_edge(e.from, e.to, cost);
    }
    Ok(g)
}

/// Gives every state total degree at most 3. A state with in-degree `d ≥ 2`
/// receives a chain of `d − 1` maximizer companions `s'`, `s''`, … (rate 0,
/// cost-0 edge towards `s`), each taking one incoming edge and the last
/// taking two. Waiting at a rate-0 maximizer never pays since values are
/// nonincreasing, so original values are unchanged.
pub fn to_degree3(game: &Game) -> Result<Game> {
    let n = game.len();
    let mut incoming: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, e) in game.edges().iter().enumerate() {
        incoming[e.to.0].push(k);
    }
    for s in game.state_ids() {
        if game.out_edges(s).len() > 2 {
            return Err(Error::Precondition(format!("{} has out-degree above 2", game.id(s))));
        }
    }
    let mut g = copy_states(game, game.horizon().clone(), Rational::clone)?;
    let mut target: Vec<StateId> = game.edges().iter().map(|e| e.to).collect();
    for s in game.state_ids() {
        let ins = &incoming[s.0];
        if ins.len() < 2 {
            continue;
        }
        let mut next = s;
        let mut name = game.id(s).to_string();
        for (j, &k) in ins.iter().enumerate().take(ins.len() - 1) {
            name.push('\'');
            let c = g.add_state(name.clone(), Owner::Max, Rational::zero())?;
            g.add_edge(c, next, Rational::zero());
            target[k] = c;
            if j == ins.len() - 2 {
                target[ins[j + 1]] = c;
            }
            next = c;
        }
    }
    for (k, e) in game.edges().iter().enumerate() {
        g.add_edge(e.from, target[k], e.cost.clone());
    }
    Ok(g)
}

pub fn make_urgent(game: &Game, states: &[StateId]) -> Result<Game> {
    let mut g = game.clone();
    for &s in states {
        if game.owner(s) == Owner::Goal {
            return Err(Error::Precondition(format!("goal state {} cannot be urgent", game.id(s))));
        }
        g.set_urgent(s, true);
    }
    Ok(g)
}

/// Under the promise `val(v, 0) ∈ {c, c'}` with `c > c'`, adds a minimizer
/// `v'` with `val(v', 0) = c'` iff `val(v, 0) = c'`: it may move to `v` or
/// leave for `(c + c')/2`, and its rate exceeds every other so it never
/// waits.
pub fn promise_to_strategy(game: &Game, v: StateId, c: &Rational, c2: &Rational) -> Result<(Game, StateId)> {
    if c <= c2 {
        return Err(Error::Precondition(format!("promise values {c} and {c2} are not decreasing")));
    }
    let mut g = game.clone();
    let rate = &game.max_rate() + &Rational::one();
    let vp = g.add_state(format!("{}'", game.id(v)), Owner::Min, rate)?;
    let goal = g.add_goal(format!("{}'.goal", game.id(v)))?;
    g.add_edge(vp, v, Rational::zero());
    g.add_edge(vp, goal, (c + c2) / q(2, 1));
    Ok((g, vp))
}
