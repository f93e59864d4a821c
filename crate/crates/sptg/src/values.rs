use crate::error::{Error, Result};
use crate::game::{Game, StateId};
use crate::pwl::PwlFunction;
use crate::rational::{ExtendedValue, Rational};

/// One value function per state, indexed by [`StateId`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueMap {
    horizon: Rational,
    functions: Vec<PwlFunction>,
}

impl ValueMap {
    pub fn new(horizon: Rational, functions: Vec<PwlFunction>) -> Self {
        debug_assert!(functions.iter().all(|f| *f.horizon() == horizon));
        ValueMap { horizon, functions }
    }

    pub fn horizon(&self) -> &Rational {
        &self.horizon
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    pub fn get(&self, s: StateId) -> &PwlFunction {
        &self.functions[s.0]
    }

    pub fn functions(&self) -> &[PwlFunction] {
        &self.functions
    }

    pub fn value(&self, s: StateId, t: &Rational) -> Result<ExtendedValue> {
        Ok(self.get(s).evaluate(t)?)
    }

    pub fn infinite_states(&self) -> Vec<StateId> {
        (0..self.len()).map(StateId).filter(|&s| self.get(s).is_infinite()).collect()
    }

    /// Event points: the times at which a new linear piece of some value
    /// function begins. Time 0 always counts; the horizon never does.
    pub fn event_points(&self) -> Vec<Rational> {
        let mut times: Vec<Rational> = vec![Rational::zero()];
        for f in &self.functions {
            let bps = f.breakpoints();
            if bps.len() > 2 {
                times.extend(bps[1..bps.len() - 1].iter().map(|(t, _)| t.clone()));
            }
        }
        times.sort();
        times.dedup();
        times
    }

    /// Checks that `self` has one function per state of `game` over its horizon.
    pub fn check_shape(&self, game: &Game) -> Result<()> {
        if self.len() != game.len() || self.horizon != *game.horizon() {
            return Err(Error::InconsistentValues(format!(
                "{} functions over [0, {}] for {} states over [0, {}]",
                self.len(),
                self.horizon,
                game.len(),
                game.horizon()
            )));
        }
        Ok(())
    }
}
