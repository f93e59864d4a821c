//! Compilers from formulas to games: gate networks over literal gadgets, the
//! SAT/DNF reductions and the chain for quantifier alternations.

use crate::assignment::Assignment;
use crate::error::{Error, Result};
use crate::formula::{Formula, Quantifier, Qbf};
use crate::game::{Game, Owner, StateId};
use crate::rational::{q, Rational};
use crate::solve::{EncodingKind, EncodingParams};

use super::gadget::add_literal;

/// A compiled game with its query state and what the query's value at time 0
/// should be when the encoded statement is true or false.
#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub game: Game,
    pub query: StateId,
    pub params: EncodingParams,
    pub expected_true: Rational,
    pub expected_false: Rational,
    /// Intermediate encodings, innermost first.
    pub stages: Vec<Stage>,
}

impl ReductionOutput {
    /// Threshold separating the two expected values.
    pub fn midpoint(&self) -> Rational {
        (&self.expected_true + &self.expected_false) / q(2, 1)
    }
}

/// A state whose value encodes `formula` with blocks `from_block..`
/// quantified and the remaining variables free.
#[derive(Debug, Clone)]
pub struct Stage {
    pub state: StateId,
    pub params: EncodingParams,
    pub formula: Qbf,
    pub from_block: usize,
}

impl Stage {
    pub fn holds(&self, a: &Assignment) -> bool {
        self.formula.eval_from(self.from_block, a)
    }
}

fn add_gates(g: &mut Game, path: &str, f: &Formula, kind: EncodingKind) -> Result<StateId> {
    match f {
        Formula::Lit { var, positive } => add_literal(g, &format!("{path}."), *var, *positive, kind),
        Formula::And(cs) | Formula::Or(cs) => {
            // AND keeps the lowest child, OR the highest; neither gains by waiting
            let s = match f {
                Formula::And(_) => g.add_state(path, Owner::Min, Rational::one())?,
                _ => g.add_state(path, Owner::Max, Rational::zero())?,
            };
            for (k, c) in cs.iter().enumerate() {
                let child = add_gates(g, &format!("{path}.{k}"), c, kind)?;
                g.add_edge(s, child, Rational::zero());
            }
            Ok(s)
        }
    }
}

/// Adds a state encoding `f` over `n` variables with `v = 2` and offset
/// `2^{-n-2}`, cutting each excursion at the boundaries of the `n`-variable
/// assignment intervals.
pub(crate) fn add_formula(
    g: &mut Game,
    prefix: &str,
    f: &Formula,
    n: usize,
    kind: EncodingKind,
) -> Result<(StateId, EncodingParams)> {
    f.check()?;
    if n == 0 || f.max_var() > n {
        return Err(Error::Precondition(format!("formula over x{} compiled with n = {n}", f.max_var())));
    }
    let both = vec![Formula::var(n), Formula::not_var(n)];
    let detected = match kind {
        EncodingKind::Straight => Formula::And(vec![f.clone(), Formula::Or(both)]),
        EncodingKind::Reverse => Formula::Or(vec![f.clone(), Formula::And(both)]),
    };
    let s = add_gates(g, &format!("{prefix}F"), &detected, kind)?;
    let params = EncodingParams { v: q(2, 1), offset: Rational::pow2(-(n as i32) - 2), n, kind };
    Ok((s, params))
}

pub fn compile_formula(f: &Formula, n: usize, kind: EncodingKind) -> Result<(Game, StateId, EncodingParams)> {
    let mut g = Game::default();
    let (s, p) = add_formula(&mut g, "", f, n, kind)?;
    Ok((g, s, p))
}

/// A state worth `val(s) + c` (a rate-0 maximizer gains nothing by waiting on
/// a non-increasing function).
fn add_shift(g: &mut Game, id: String, s: StateId, c: Rational) -> Result<StateId> {
    let x = g.add_state(id, Owner::Max, Rational::zero())?;
    g.add_edge(x, s, c);
    Ok(x)
}

/// `val(x, 0)` is the best value reachable along the encoding: a rate-1/2
/// extender makes the reference line `v − t/2` flat.
fn add_extender(g: &mut Game, id: String, s: StateId, kind: EncodingKind, rate: Rational) -> Result<StateId> {
    let owner = if kind == EncodingKind::Straight { Owner::Max } else { Owner::Min };
    let x = g.add_state(id, owner, rate)?;
    g.add_edge(x, s, Rational::zero());
    Ok(x)
}

/// SAT: `val(query, 0) = 2 + 2^{-n-2}` iff `f` is satisfiable, else 2.
pub fn compile_np(f: &Formula, n: usize) -> Result<ReductionOutput> {
    let vars: Vec<usize> = (1..=n).collect();
    compile_qbf(&Qbf::new(vec![(Quantifier::Exists, vars)], f.clone())?, OuterMode::Horizontal)
}

/// Tautology: `val(query, 0) = 2` iff `f` holds everywhere, else
/// `2 − 2^{-n-2}`.
pub fn compile_conp(f: &Formula, n: usize) -> Result<ReductionOutput> {
    let vars: Vec<usize> = (1..=n).collect();
    compile_qbf(&Qbf::new(vec![(Quantifier::Forall, vars)], f.clone())?, OuterMode::Horizontal)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OuterMode {
    /// Rate-1/2 outer extender: the two outcomes are exactly `v ± v'` and `v`.
    #[default]
    Horizontal,
    /// The decaying alternation extender at the top level.
    Decaying,
}

/// Spaces the blocks apart: block `j`'s `i`-th variable becomes
/// `Σ_{k<j}(n_k + 2) + i`, leaving two unused variables between blocks.
pub fn spread_variables(qbf: &Qbf) -> Qbf {
    let blocks = qbf.merged_blocks();
    let mut map = std::collections::HashMap::new();
    let mut base = 0;
    let mut out = Vec::new();
    for (quant, vars) in &blocks {
        let mapped: Vec<usize> = (1..=vars.len()).map(|i| base + i).collect();
        for (v, m) in vars.iter().zip(&mapped) {
            map.insert(*v, *m);
        }
        out.push((*quant, mapped));
        base += vars.len() + 2;
    }
    Qbf { blocks: out, matrix: qbf.matrix.rename(&|v| map[&v]) }
}

/// Compiles `qbf`; the query's value at 0 is `expected_true` iff it holds.
pub fn compile_qbf(qbf: &Qbf, mode: OuterMode) -> Result<ReductionOutput> {
    qbf.check()?;
    if qbf.blocks.is_empty() {
        return Err(Error::Precondition("no quantifier blocks".into()));
    }
    let spread = spread_variables(qbf);
    let m = spread.blocks.len();
    let total = *spread.blocks[m - 1].1.last().unwrap();
    let kind = match spread.blocks[m - 1].0 {
        Quantifier::Exists => EncodingKind::Straight,
        Quantifier::Forall => EncodingKind::Reverse,
    };
    let mut g = Game::default();
    let (mut s, mut p) = add_formula(&mut g, "base.", &spread.matrix, total, kind)?;
    let mut stages = vec![Stage { state: s, params: p.clone(), formula: spread.clone(), from_block: m }];

    for j in (1..m).rev() {
        let first = spread.blocks[j].1[0];
        (s, p) = add_alternation(&mut g, &format!("q{j}."), s, &p, first)?;
        stages.push(Stage { state: s, params: p.clone(), formula: spread.clone(), from_block: j });
    }

    let straight = p.kind == EncodingKind::Straight;
    let (rate, gain) = match mode {
        OuterMode::Horizontal => (q(1, 2), p.offset.clone()),
        OuterMode::Decaying => {
            let kappa = decay(&p.offset, 1);
            let rate = if straight { &q(1, 2) - &kappa } else { &q(1, 2) + &kappa };
            (rate, &p.offset * &q(3, 5))
        }
    };
    let query = add_extender(&mut g, "query".into(), s, p.kind, rate)?;
    let (expected_true, expected_false) =
        if straight { (&p.v + &gain, p.v.clone()) } else { (p.v.clone(), &p.v - &gain) };
    Ok(ReductionOutput { game: g, query, params: p, expected_true, expected_false, stages })
}

/// `κ = 8v' / (5·2^{3−S})`: the extender's slope relative to the reference
/// line, so that an excursion fades by `v'/2` over `5/16` of a window of
/// length `2^{3−S}`.
fn decay(offset: &Rational, first: usize) -> Rational {
    offset * &q(8, 5) / Rational::pow2(3 - first as i32)
}

/// Quantifies away the block starting at variable `first` (whose two
/// predecessors are unused spacers). Straight in, reverse out for ∃; the
/// mirror image for ∀. The output encodes over `first − 3` variables.
fn add_alternation(
    g: &mut Game,
    prefix: &str,
    s: StateId,
    p: &EncodingParams,
    first: usize,
) -> Result<(StateId, EncodingParams)> {
    assert!(first >= 4, "inner blocks start after an outer block and two spacers");
    let exists = p.kind == EncodingKind::Straight;
    let (mut s, mut v) = (s, p.v.clone());
    let floor = &q(2, 1) + &p.offset;
    if v < floor {
        s = add_shift(g, format!("{prefix}lift"), s, &floor - &v)?;
        v = floor;
    }
    let half = &p.offset / &q(2, 1);
    let kappa = decay(&p.offset, first);

    // keep excursions only where both spacers are set (∃) / clear (∀)
    let c = if exists {
        g.add_state(format!("{prefix}c"), Owner::Min, Rational::one())?
    } else {
        g.add_state(format!("{prefix}c"), Owner::Max, Rational::zero())?
    };
    g.add_edge(c, s, Rational::zero());
    for k in [first - 1, first - 2] {
        let lit = add_literal(g, &format!("{prefix}c.x{k}."), k, exists, p.kind)?;
        g.add_edge(c, lit, &v - &q(2, 1));
    }

    // carry each excursion back across its window, fading at rate κ
    let x = if exists {
        g.add_state(format!("{prefix}x"), Owner::Max, &q(1, 2) - &kappa)?
    } else {
        g.add_state(format!("{prefix}x"), Owner::Min, &q(1, 2) + &kappa)?
    };
    g.add_edge(x, c, Rational::zero());

    // cap the carried excursion at half height
    let vi = if exists { &v + &half } else { &v - &half };
    let bound = g.add_state(format!("{prefix}bound"), Owner::Max, q(1, 2))?;
    let goal = g.add_goal(format!("{prefix}bound.goal"))?;
    g.add_edge(bound, goal, &vi - &q(1, 2));
    let limiter = if exists {
        g.add_state(format!("{prefix}limit"), Owner::Min, Rational::one())?
    } else {
        g.add_state(format!("{prefix}limit"), Owner::Max, Rational::zero())?
    };
    g.add_edge(limiter, x, Rational::zero());
    g.add_edge(limiter, bound, Rational::zero());

    // a probe that reads the carried value at one spot per window
    let (a, b, c1, d) = (first + 1, first, first - 1, first - 2);
    let probe = if exists {
        Formula::Or(vec![Formula::not_var(a), Formula::not_var(b), Formula::var(c1), Formula::not_var(d)])
    } else {
        Formula::And(vec![Formula::var(a), Formula::var(b), Formula::not_var(c1), Formula::var(d)])
    };
    let out_kind = p.kind.flip();
    let (r, _) = add_formula(g, &format!("{prefix}r."), &probe, first + 1, out_kind)?;
    let r = add_shift(g, format!("{prefix}r.shift"), r, &vi - &q(2, 1))?;

    let out = if exists {
        g.add_state(format!("{prefix}out"), Owner::Max, Rational::zero())?
    } else {
        g.add_state(format!("{prefix}out"), Owner::Min, Rational::one())?
    };
    g.add_edge(out, limiter, Rational::zero());
    g.add_edge(out, r, Rational::zero());
    let params = EncodingParams { v: vi, offset: half, n: first - 3, kind: out_kind };
    Ok((out, params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::{encoding_violation, event_point_iteration, witnessed_at_midpoints};

    fn check_formula(text: &str, n: usize) {
        let f = Formula::parse(text).unwrap();
        for kind in [EncodingKind::Straight, EncodingKind::Reverse] {
            let (g, s, p) = compile_formula(&f, n, kind).unwrap();
            let vm = event_point_iteration(&g).unwrap();
            let pred = |a: &Assignment| f.eval(a);
            assert_eq!(encoding_violation(vm.get(s), pred, &p), None, "{text} {kind:?}");
            assert!(witnessed_at_midpoints(vm.get(s), pred, &p), "{text} {kind:?}");
        }
    }

    #[test]
    fn formulas_encode() {
        check_formula("x1", 1);
        check_formula("x1", 2);
        check_formula("(not x2)", 3);
        check_formula("(and x1 (not x2))", 2);
        check_formula("(or (and x1 x2) (and (not x1) x3))", 3);
        check_formula("(and x1 (not x1))", 2);
        check_formula("(or x1 (not x1))", 2);
    }

    fn query_value(out: &ReductionOutput) -> Rational {
        event_point_iteration(&out.game).unwrap().get(out.query).at(&Rational::zero())
    }

    fn check_stages(out: &ReductionOutput) {
        let vm = event_point_iteration(&out.game).unwrap();
        for st in &out.stages {
            let v = encoding_violation(vm.get(st.state), |a| st.holds(a), &st.params);
            assert_eq!(v, None, "stage from block {} of {}", st.from_block, st.formula);
        }
    }

    #[test]
    fn np_and_conp_values() {
        let out = compile_np(&Formula::parse("(or x1 x2)").unwrap(), 2).unwrap();
        assert_eq!(query_value(&out), q(33, 16));
        let out = compile_np(&Formula::parse("(and x1 (not x1))").unwrap(), 1).unwrap();
        assert_eq!(query_value(&out), q(2, 1));
        let out = compile_conp(&Formula::var(1), 1).unwrap();
        assert_eq!(query_value(&out), q(15, 8));
        let out = compile_conp(&Formula::parse("(or x1 (not x1))").unwrap(), 1).unwrap();
        assert_eq!(query_value(&out), q(2, 1));
    }

    #[test]
    fn one_alternation() {
        for text in [
            "(forall (x1) (exists (x2) (or (and x1 x2) (and (not x1) (not x2)))))",
            "(exists (x2) (forall (x1) (or (and x1 x2) (and (not x1) (not x2)))))",
            "(exists (x1) (forall (x2) (or x1 x2)))",
            "(forall (x1) (exists (x2) (and x1 x2)))",
        ] {
            let qbf = Qbf::parse(text).unwrap();
            let out = compile_qbf(&qbf, OuterMode::Horizontal).unwrap();
            check_stages(&out);
            let v = query_value(&out);
            let truth = crate::formula::brute_force_qbf(&qbf);
            let expected = if truth { &out.expected_true } else { &out.expected_false };
            assert_eq!(&v, expected, "{text}");
        }
    }

    #[test]
    fn two_alternations_and_decaying_outer() {
        for text in [
            "(exists (x1) (forall (x2) (exists (x3) (and (or x1 x2) (or (not x2) x3)))))",
            "(forall (x1) (exists (x2) (forall (x3) (or x1 (and x2 x3) (not x3)))))",
            "(exists (x1 x2) (forall (x3) (or (and x1 x3) (and x2 (not x3)))))",
        ] {
            let qbf = Qbf::parse(text).unwrap();
            let truth = crate::formula::brute_force_qbf(&qbf);
            for mode in [OuterMode::Horizontal, OuterMode::Decaying] {
                let out = compile_qbf(&qbf, mode).unwrap();
                check_stages(&out);
                let v = query_value(&out);
                assert_eq!(v >= out.midpoint(), truth, "{text} {mode:?}");
                if mode == OuterMode::Horizontal {
                    assert_eq!(v, if truth { out.expected_true.clone() } else { out.expected_false.clone() });
                }
            }
        }
    }
}
