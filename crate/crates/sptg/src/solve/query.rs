use crate::error::{Error, Result};
use crate::game::{Game, StateId};
use crate::priced::solve_priced;
use crate::rational::{ExtendedValue, Rational};

use super::epi::{event_point_iteration, EventPoints};

fn check_time(game: &Game, t: &Rational) -> Result<()> {
    if t.is_negative() || t > game.horizon() {
        return Err(Error::Precondition(format!("time {t} outside [0, {}]", game.horizon())));
    }
    Ok(())
}

pub fn value_at(game: &Game, s: StateId, t: &Rational) -> Result<ExtendedValue> {
    check_time(game, t)?;
    if s.0 >= game.len() {
        return Err(Error::UnknownState(s.to_string()));
    }
    event_point_iteration(game)?.value(s, t)
}

/// Is `val(s, t) ≥ c`?
pub fn decide(game: &Game, s: StateId, t: &Rational, c: &Rational) -> Result<bool> {
    Ok(value_at(game, s, t)? >= ExtendedValue::Finite(c.clone()))
}

/// States whose value is +∞ (at every time, so `t = T` suffices).
pub fn infinite_states(game: &Game) -> Result<Vec<StateId>> {
    game.check()?;
    let sol = solve_priced(game, &[]);
    Ok(game.state_ids().filter(|&s| sol.value(s).is_none()).collect())
}

/// `val(s, t)` on an acyclic game without storing any breakpoints: the walk
/// back from `T` stops at the interval containing `t`.
pub fn solve_dag_streaming(game: &Game, s: StateId, t: &Rational) -> Result<ExtendedValue> {
    game.topological_order()?;
    check_time(game, t)?;
    if s.0 >= game.len() {
        return Err(Error::UnknownState(s.to_string()));
    }
    let mut it = EventPoints::new(game)?;
    let Some(at_t) = it.at_horizon().value(s).map(|p| p.value.clone()) else {
        return Ok(ExtendedValue::Infinite);
    };
    if t == game.horizon() {
        return Ok(ExtendedValue::Finite(at_t));
    }
    for step in &mut it {
        let step = step?;
        if &step.lo <= t {
            let p = step.solution.value(s).expect("finiteness is time-invariant");
            return Ok(ExtendedValue::Finite(&p.value + &(&p.slope * &(&step.hi - t))));
        }
    }
    unreachable!("the walk always reaches time 0")
}
