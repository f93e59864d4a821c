//! The SPTG data model: states owned by the minimizer, the maximizer or the
//! goal, edges with nonnegative costs, per-state holding rates, and a time
//! horizon `T`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

impl fmt::Display for StateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Owner {
    Min,
    Max,
    Goal,
}

impl Owner {
    pub fn as_str(self) -> &'static str {
        match self {
            Owner::Min => "min",
            Owner::Max => "max",
            Owner::Goal => "goal",
        }
    }
}

impl std::str::FromStr for Owner {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "min" => Ok(Owner::Min),
            "max" => Ok(Owner::Max),
            "goal" => Ok(Owner::Goal),
            _ => Err(format!("unknown owner {s:?} (expected min, max or goal)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct State {
    pub id: String,
    pub owner: Owner,
    pub rate: Rational,
    pub urgent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: StateId,
    pub to: StateId,
    pub cost: Rational,
}

/// A simple priced timed game.
///
/// The builder methods do not enforce the numeric invariants (nonnegative
/// costs and rates, goal states without rate); [`Game::validate`] reports
/// them and every solver calls [`Game::check`] first.
#[derive(Debug, Clone)]
pub struct Game {
    horizon: Rational,
    states: Vec<State>,
    edges: Vec<Edge>,
    index: HashMap<String, StateId>,
    out: Vec<Vec<EdgeId>>,
}

impl PartialEq for Game {
    fn eq(&self, other: &Self) -> bool {
        self.horizon == other.horizon && self.states == other.states && self.edges == other.edges
    }
}

impl Eq for Game {}

impl Default for Game {
    fn default() -> Self {
        Game::new(Rational::one())
    }
}

impl Game {
    pub fn new(horizon: Rational) -> Self {
        Game {
            horizon,
            states: Vec::new(),
            edges: Vec::new(),
            index: HashMap::new(),
            out: Vec::new(),
        }
    }

    pub fn add_state(&mut self, id: impl Into<String>, owner: Owner, rate: Rational) -> Result<StateId> {
        let id = id.into();
        if self.index.contains_key(&id) {
            return Err(Error::DuplicateState(id));
        }
        let sid = StateId(self.states.len());
        self.index.insert(id.clone(), sid);
        self.states.push(State { id, owner, rate, urgent: false });
        self.out.push(Vec::new());
        Ok(sid)
    }

    pub fn add_goal(&mut self, id: impl Into<String>) -> Result<StateId> {
        self.add_state(id, Owner::Goal, Rational::zero())
    }

    pub fn add_edge(&mut self, from: StateId, to: StateId, cost: Rational) -> EdgeId {
        assert!(from.0 < self.states.len() && to.0 < self.states.len(), "edge endpoint out of range");
        let eid = EdgeId(self.edges.len());
        self.edges.push(Edge { from, to, cost });
        self.out[from.0].push(eid);
        eid
    }

    pub fn set_urgent(&mut self, s: StateId, urgent: bool) {
        self.states[s.0].urgent = urgent;
    }

    pub fn set_horizon(&mut self, horizon: Rational) {
        self.horizon = horizon;
    }

    pub fn horizon(&self) -> &Rational {
        &self.horizon
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn state_ids(&self) -> impl Iterator<Item = StateId> {
        (0..self.states.len()).map(StateId)
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn state(&self, s: StateId) -> &State {
        &self.states[s.0]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn out_edges(&self, s: StateId) -> &[EdgeId] {
        &self.out[s.0]
    }

    pub fn find(&self, id: &str) -> Option<StateId> {
        self.index.get(id).copied()
    }

    pub fn lookup(&self, id: &str) -> Result<StateId> {
        self.find(id).ok_or_else(|| Error::UnknownState(id.to_string()))
    }

    pub fn id(&self, s: StateId) -> &str {
        &self.states[s.0].id
    }

    pub fn owner(&self, s: StateId) -> Owner {
        self.states[s.0].owner
    }

    pub fn rate(&self, s: StateId) -> &Rational {
        &self.states[s.0].rate
    }

    pub fn max_rate(&self) -> Rational {
        self.states.iter().map(|s| s.rate.clone()).max().unwrap_or_else(Rational::zero)
    }

    pub fn has_urgent(&self) -> bool {
        self.states.iter().any(|s| s.urgent)
    }

    /// Itemized invariant violations; empty iff the game is well formed.
    pub fn validate(&self) -> Vec<String> {
        let mut report = Vec::new();
        if !self.horizon.is_positive() {
            report.push(format!("horizon {} is not positive", self.horizon));
        }
        for s in &self.states {
            if s.rate.is_negative() {
                report.push(format!("state {:?}: negative rate {}", s.id, s.rate));
            }
            if s.owner == Owner::Goal {
                if !s.rate.is_zero() {
                    report.push(format!("goal state {:?}: rate {} (must be 0)", s.id, s.rate));
                }
                if s.urgent {
                    report.push(format!("goal state {:?} is marked urgent", s.id));
                }
            }
        }
        for e in &self.edges {
            if e.cost.is_negative() {
                report.push(format!(
                    "edge {:?} -> {:?}: negative cost {}",
                    self.id(e.from),
                    self.id(e.to),
                    e.cost
                ));
            }
        }
        report
    }

    pub fn check(&self) -> Result<()> {
        let report = self.validate();
        if report.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidGame(report))
        }
    }

    /// States in an order where every edge goes from an earlier to a later
    /// state, or the id of a state on a cycle. Edges leaving goal states are
    /// ignored since plays stop there.
    pub fn topological_order(&self) -> Result<Vec<StateId>> {
        let n = self.len();
        let mut indeg = vec![0usize; n];
        for e in &self.edges {
            if self.owner(e.from) != Owner::Goal {
                indeg[e.to.0] += 1;
            }
        }
        let mut stack: Vec<StateId> = (0..n).rev().filter(|&i| indeg[i] == 0).map(StateId).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(s) = stack.pop() {
            order.push(s);
            if self.owner(s) == Owner::Goal {
                continue;
            }
            for &e in self.out_edges(s).iter().rev() {
                let t = self.edge(e).to;
                indeg[t.0] -= 1;
                if indeg[t.0] == 0 {
                    stack.push(t);
                }
            }
        }
        if order.len() < n {
            let on_cycle = (0..n).find(|&i| indeg[i] > 0).unwrap();
            return Err(Error::Cyclic(self.states[on_cycle].id.clone()));
        }
        Ok(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_ok()
    }

    /// Number of edges on the longest path (acyclic games only).
    pub fn longest_path_length(&self) -> Result<usize> {
        let order = self.topological_order()?;
        let mut height = vec![0usize; self.len()];
        for &s in order.iter().rev() {
            if self.owner(s) == Owner::Goal {
                continue;
            }
            for &e in self.out_edges(s) {
                height[s.0] = height[s.0].max(height[self.edge(e).to.0] + 1);
            }
        }
        Ok(height.into_iter().max().unwrap_or(0))
    }

    /// Height of each state: the longest edge count to a sink (acyclic only).
    pub fn heights(&self) -> Result<Vec<usize>> {
        let order = self.topological_order()?;
        let mut height = vec![0usize; self.len()];
        for &s in order.iter().rev() {
            if self.owner(s) == Owner::Goal {
                continue;
            }
            for &e in self.out_edges(s) {
                height[s.0] = height[s.0].max(height[self.edge(e).to.0] + 1);
            }
        }
        Ok(height)
    }

    pub fn in_degree(&self, s: StateId) -> usize {
        self.edges.iter().filter(|e| e.to == s).count()
    }

    /// Copies every state of `other` (ids prefixed by `prefix`) and its edges
    /// into `self`; returns the mapping from `other`'s ids.
    pub fn embed(&mut self, other: &Game, prefix: &str) -> Result<Vec<StateId>> {
        let mut map = Vec::with_capacity(other.len());
        for s in other.states() {
            let id = self.add_state(format!("{prefix}{}", s.id), s.owner, s.rate.clone())?;
            self.set_urgent(id, s.urgent);
            map.push(id);
        }
        for e in other.edges() {
            self.add_edge(map[e.from.0], map[e.to.0], e.cost.clone());
        }
        Ok(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn report_lists_violations() {
        let mut g = Game::default();
        let a = g.add_state("a", Owner::Min, q(1, 1)).unwrap();
        let b = g.add_state("b", Owner::Goal, q(2, 1)).unwrap();
        g.add_edge(a, b, q(-1, 1));
        let r = g.validate();
        assert_eq!(r.len(), 2);
        assert!(r.iter().any(|m| m.contains("negative cost")));
        assert!(r.iter().any(|m| m.contains("goal state \"b\"")));
        assert!(g.add_goal("a").is_err());
    }

    #[test]
    fn cycles_and_heights() {
        let mut g = Game::default();
        let a = g.add_state("a", Owner::Max, q(0, 1)).unwrap();
        let b = g.add_state("b", Owner::Min, q(0, 1)).unwrap();
        let c = g.add_goal("c").unwrap();
        g.add_edge(a, b, q(0, 1));
        g.add_edge(b, c, q(0, 1));
        g.add_edge(a, c, q(0, 1));
        assert_eq!(g.longest_path_length().unwrap(), 2);
        assert_eq!(g.heights().unwrap(), vec![2, 1, 0]);
        g.add_edge(b, a, q(0, 1));
        assert!(!g.is_acyclic());
    }
}
