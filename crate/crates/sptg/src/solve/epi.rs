//! Event-point iteration: walks backwards from `T`, solving one priced game
//! per event point.

use crate::error::{Error, Result};
use crate::game::{Game, Owner, StateId};
use crate::priced::{LexPair, PricedSolution, PricedSolver};
use crate::pwl::PwlFunction;
use crate::rational::Rational;
use crate::values::ValueMap;

/// One interval `[lo, hi]` between consecutive event points. On it every
/// finite state `v` with pair `(x, y)` has value `x + y·(hi − t)`.
#[derive(Debug, Clone)]
pub struct Step {
    pub hi: Rational,
    pub lo: Rational,
    pub solution: PricedSolution,
}

/// Iterator over the intervals, latest first. Holds only the current time and
/// one pair per state.
pub struct EventPoints<'g> {
    game: &'g Game,
    solver: PricedSolver<'g>,
    t: Rational,
    terminal: Vec<Option<LexPair>>,
    at_horizon: PricedSolution,
    failed: bool,
}

impl<'g> EventPoints<'g> {
    pub fn new(game: &'g Game) -> Result<Self> {
        game.check()?;
        if let Some(s) = game.states().iter().find(|s| s.urgent) {
            return Err(Error::UrgentUnsupported(s.id.clone()));
        }
        let solver = PricedSolver::new(game);
        let at_horizon = solver.solve(&[]);
        let terminal = pairs_with_rates(game, &at_horizon, None);
        Ok(EventPoints { game, solver, t: game.horizon().clone(), terminal, at_horizon, failed: false })
    }

    /// `PG(G, ∅)`: values and (edge-only) choices at `t = T`.
    pub fn at_horizon(&self) -> &PricedSolution {
        &self.at_horizon
    }

    /// Current time `t*`.
    pub fn time(&self) -> &Rational {
        &self.t
    }

    fn step(&mut self) -> Result<Step> {
        let game = self.game;
        let sol = self.solver.solve(&self.terminal);
        for (v, f) in self.terminal.iter().enumerate() {
            if let Some(f) = f {
                let x = sol.values[v].as_ref().map(|p| &p.value);
                if x != Some(&f.value) {
                    return Err(Error::InconsistentValues(format!(
                        "priced game moved the value of {:?} at t = {}",
                        game.id(StateId(v)),
                        self.t
                    )));
                }
            }
        }
        let mut d = self.t.clone();
        for e in game.edges() {
            let owner = game.owner(e.from);
            if owner == Owner::Goal {
                continue;
            }
            let (Some(p), Some(q)) = (&sol.values[e.from.0], &sol.values[e.to.0]) else { continue };
            let x2 = &q.value + &e.cost;
            // the edge becomes the better option once the values cross
            let crossing = match owner {
                Owner::Min if q.slope < p.slope && x2 > p.value => {
                    Some((&x2 - &p.value) / (&p.slope - &q.slope))
                }
                Owner::Max if q.slope > p.slope && x2 < p.value => {
                    Some((&p.value - &x2) / (&q.slope - &p.slope))
                }
                _ => None,
            };
            if let Some(c) = crossing {
                if c < d {
                    d = c;
                }
            }
        }
        if !d.is_positive() {
            self.failed = true;
            return Err(Error::NoProgress(self.t.clone()));
        }
        let lo = &self.t - &d;
        self.terminal = pairs_with_rates(game, &sol, Some(&d));
        let hi = std::mem::replace(&mut self.t, lo.clone());
        Ok(Step { hi, lo, solution: sol })
    }
}

impl Iterator for EventPoints<'_> {
    type Item = Result<Step>;

    fn next(&mut self) -> Option<Result<Step>> {
        if self.failed || !self.t.is_positive() {
            return None;
        }
        Some(self.step())
    }
}

/// `f(v) = (x + y·d, r(v))` for every finite non-goal state.
fn pairs_with_rates(game: &Game, sol: &PricedSolution, d: Option<&Rational>) -> Vec<Option<LexPair>> {
    game.state_ids()
        .map(|s| {
            if game.owner(s) == Owner::Goal {
                return None;
            }
            sol.value(s).map(|p| {
                let x = match d {
                    Some(d) => &p.value + &(&p.slope * d),
                    None => p.value.clone(),
                };
                LexPair::new(x, game.rate(s).clone())
            })
        })
        .collect()
}

/// The full run: value functions plus every interval's priced solution
/// (latest first), which strategy extraction reads its choices from.
pub struct Trace {
    pub values: ValueMap,
    pub at_horizon: PricedSolution,
    pub steps: Vec<Step>,
}

pub fn event_point_iteration(game: &Game) -> Result<ValueMap> {
    run(game, false).map(|t| t.values)
}

pub fn event_point_trace(game: &Game) -> Result<Trace> {
    run(game, true)
}

fn run(game: &Game, keep_steps: bool) -> Result<Trace> {
    let mut it = EventPoints::new(game)?;
    let h = game.horizon().clone();
    let n = game.len();
    let mut points: Vec<Option<Vec<(Rational, Rational)>>> = (0..n)
        .map(|v| it.at_horizon().values[v].as_ref().map(|p| vec![(h.clone(), p.value.clone())]))
        .collect();
    let mut steps = Vec::new();
    while let Some(step) = it.next() {
        let step = step?;
        let d = &step.hi - &step.lo;
        for (v, pts) in points.iter_mut().enumerate() {
            if let Some(pts) = pts {
                let p = step.solution.values[v].as_ref().expect("finiteness is time-invariant");
                pts.push((step.lo.clone(), &p.value + &(&p.slope * &d)));
            }
        }
        if keep_steps {
            steps.push(step);
        }
    }
    let at_horizon = it.at_horizon.clone();
    let functions = points
        .into_iter()
        .map(|pts| match pts {
            None => Ok(PwlFunction::infinite(h.clone())),
            Some(mut pts) => {
                pts.reverse();
                PwlFunction::new(h.clone(), pts)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Trace { values: ValueMap::new(h, functions), at_horizon, steps })
}
