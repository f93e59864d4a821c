//! The untimed priced game `PG(G, f)` with lexicographic `(value, slope)`
//! costs, solved by a two-player Dijkstra (or a single backwards pass when
//! the game is acyclic).

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::game::{EdgeId, Game, Owner, StateId};
use crate::rational::Rational;

/// A `(value, slope)` pair ordered lexicographically. Taking an edge of cost
/// `c` maps `(x, y)` to `(x + c, y)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LexPair {
    pub value: Rational,
    pub slope: Rational,
}

impl LexPair {
    pub fn new(value: Rational, slope: Rational) -> Self {
        LexPair { value, slope }
    }

    pub fn zero() -> Self {
        LexPair::new(Rational::zero(), Rational::zero())
    }

    pub fn plus_cost(&self, c: &Rational) -> Self {
        LexPair::new(&self.value + c, self.slope.clone())
    }
}

/// What an optimal state does in the priced game.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PricedChoice {
    Goal,
    Edge(EdgeId),
    Terminal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PricedSolution {
    /// `None` is +∞.
    pub values: Vec<Option<LexPair>>,
    /// The realising option of each finite state. Following `Edge` choices
    /// always leads to states finalised earlier, so the choices never cycle.
    pub choices: Vec<Option<PricedChoice>>,
}

impl PricedSolution {
    pub fn value(&self, s: StateId) -> Option<&LexPair> {
        self.values[s.0].as_ref()
    }
}

/// Solves `PG(game, terminal)`. `terminal` is indexed by state (or empty for
/// no terminal options); a present pair is an extra option "stop here".
pub fn solve_priced(game: &Game, terminal: &[Option<LexPair>]) -> PricedSolution {
    PricedSolver::new(game).solve(terminal)
}

/// Reusable solver for repeated `PG(G, f)` queries on one game.
pub struct PricedSolver<'g> {
    game: &'g Game,
    incoming: Vec<Vec<EdgeId>>,
    /// Sinks first; present when the game is acyclic.
    order: Option<Vec<StateId>>,
}

impl<'g> PricedSolver<'g> {
    pub fn new(game: &'g Game) -> Self {
        let mut incoming: Vec<Vec<EdgeId>> = vec![Vec::new(); game.len()];
        for (i, e) in game.edges().iter().enumerate() {
            if game.owner(e.from) != Owner::Goal {
                incoming[e.to.0].push(EdgeId(i));
            }
        }
        let order = game.topological_order().ok().map(|mut o| {
            o.reverse();
            o
        });
        PricedSolver { game, incoming, order }
    }

    pub fn solve(&self, terminal: &[Option<LexPair>]) -> PricedSolution {
        let n = self.game.len();
        assert!(terminal.is_empty() || terminal.len() == n, "terminal map must cover every state");
        match &self.order {
            Some(order) => self.solve_acyclic(order, terminal),
            None => self.solve_dijkstra(terminal),
        }
    }

    /// One pass over an acyclic game, successors before predecessors. Ties
    /// resolve as in the Dijkstra version: an option replaces the current
    /// one only if strictly better.
    fn solve_acyclic(&self, order: &[StateId], terminal: &[Option<LexPair>]) -> PricedSolution {
        let game = self.game;
        let n = game.len();
        let mut values: Vec<Option<LexPair>> = vec![None; n];
        let mut choices: Vec<Option<PricedChoice>> = vec![None; n];
        for &sid in order {
            let s = sid.0;
            let owner = game.owner(sid);
            if owner == Owner::Goal {
                values[s] = Some(LexPair::zero());
                choices[s] = Some(PricedChoice::Goal);
                continue;
            }
            let mut best: Option<LexPair> = terminal.get(s).and_then(|t| t.clone());
            let mut choice = best.as_ref().map(|_| PricedChoice::Terminal);
            let mut stuck = false;
            for &e in game.out_edges(sid) {
                let edge = game.edge(e);
                let Some(next) = &values[edge.to.0] else {
                    stuck = true;
                    continue;
                };
                let opt = next.plus_cost(&edge.cost);
                let better = match &best {
                    None => true,
                    Some(b) if owner == Owner::Min => opt < *b,
                    Some(b) => opt > *b,
                };
                if better {
                    best = Some(opt);
                    choice = Some(PricedChoice::Edge(e));
                }
            }
            // a maximizer with a +∞ successor is +∞ itself
            if owner == Owner::Max && stuck {
                continue;
            }
            values[s] = best;
            choices[s] = choice;
        }
        PricedSolution { values, choices }
    }

    fn solve_dijkstra(&self, terminal: &[Option<LexPair>]) -> PricedSolution {
        let game = self.game;
        let n = game.len();
        let term = |s: usize| terminal.get(s).and_then(|t| t.as_ref());

        let mut values: Vec<Option<LexPair>> = vec![None; n];
        let mut choices: Vec<Option<PricedChoice>> = vec![None; n];
        let mut candidate: Vec<Option<LexPair>> = vec![None; n];
        let mut pending = vec![0usize; n];
        let mut done = vec![false; n];
        let mut heap: BinaryHeap<Reverse<(LexPair, usize)>> = BinaryHeap::new();

        for s in 0..n {
            let sid = StateId(s);
            match game.owner(sid) {
                Owner::Goal => {
                    candidate[s] = Some(LexPair::zero());
                    choices[s] = Some(PricedChoice::Goal);
                    heap.push(Reverse((LexPair::zero(), s)));
                }
                Owner::Min => {
                    if let Some(t) = term(s) {
                        candidate[s] = Some(t.clone());
                        choices[s] = Some(PricedChoice::Terminal);
                        heap.push(Reverse((t.clone(), s)));
                    }
                }
                Owner::Max => {
                    pending[s] = game.out_edges(sid).len();
                    if let Some(t) = term(s) {
                        candidate[s] = Some(t.clone());
                        choices[s] = Some(PricedChoice::Terminal);
                        if pending[s] == 0 {
                            heap.push(Reverse((t.clone(), s)));
                        }
                    }
                }
            }
        }

        while let Some(Reverse((pair, s))) = heap.pop() {
            if done[s] || candidate[s].as_ref() != Some(&pair) {
                continue;
            }
            done[s] = true;
            for &e in &self.incoming[s] {
                let edge = game.edge(e);
                let v = edge.from.0;
                if done[v] {
                    continue;
                }
                let opt = pair.plus_cost(&edge.cost);
                match game.owner(edge.from) {
                    Owner::Min => {
                        if candidate[v].as_ref().is_none_or(|c| opt < *c) {
                            candidate[v] = Some(opt.clone());
                            choices[v] = Some(PricedChoice::Edge(e));
                            heap.push(Reverse((opt, v)));
                        }
                    }
                    Owner::Max => {
                        pending[v] -= 1;
                        if candidate[v].as_ref().is_none_or(|c| opt > *c) {
                            candidate[v] = Some(opt);
                            choices[v] = Some(PricedChoice::Edge(e));
                        }
                        if pending[v] == 0 {
                            heap.push(Reverse((candidate[v].clone().unwrap(), v)));
                        }
                    }
                    Owner::Goal => unreachable!(),
                }
            }
            values[s] = Some(pair);
        }

        for s in 0..n {
            if !done[s] {
                choices[s] = None;
            }
        }
        PricedSolution { values, choices }
    }
}
