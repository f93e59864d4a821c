//! Boolean formulas in negation normal form, quantified formulas, and their
//! textual forms: s-expressions (`x3`, `(not x3)`, `(and e…)`, `(or e…)`,
//! `(forall (x1) (exists (x2 x3) body))`) and DIMACS CNF.

use std::fmt;

use crate::assignment::Assignment;
use crate::error::{Error, Result};

/// NNF formula over variables `x1, x2, …`; negations sit on variables only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Lit { var: usize, positive: bool },
    And(Vec<Formula>),
    Or(Vec<Formula>),
}

impl Formula {
    pub fn var(i: usize) -> Self {
        Formula::Lit { var: i, positive: true }
    }

    pub fn not_var(i: usize) -> Self {
        Formula::Lit { var: i, positive: false }
    }

    /// Conjunction; a single child is returned as is.
    pub fn and(mut children: Vec<Formula>) -> Self {
        if children.len() == 1 {
            children.pop().unwrap()
        } else {
            Formula::And(children)
        }
    }

    pub fn or(mut children: Vec<Formula>) -> Self {
        if children.len() == 1 {
            children.pop().unwrap()
        } else {
            Formula::Or(children)
        }
    }

    /// The negation, pushed down to the variables.
    pub fn negate(&self) -> Self {
        match self {
            Formula::Lit { var, positive } => Formula::Lit { var: *var, positive: !positive },
            Formula::And(cs) => Formula::Or(cs.iter().map(Formula::negate).collect()),
            Formula::Or(cs) => Formula::And(cs.iter().map(Formula::negate).collect()),
        }
    }

    /// Largest variable index (0 for none).
    pub fn max_var(&self) -> usize {
        match self {
            Formula::Lit { var, .. } => *var,
            Formula::And(cs) | Formula::Or(cs) => cs.iter().map(Formula::max_var).max().unwrap_or(0),
        }
    }

    pub fn gate_count(&self) -> usize {
        match self {
            Formula::Lit { .. } => 0,
            Formula::And(cs) | Formula::Or(cs) => 1 + cs.iter().map(Formula::gate_count).sum::<usize>(),
        }
    }

    pub fn literal_count(&self) -> usize {
        match self {
            Formula::Lit { .. } => 1,
            Formula::And(cs) | Formula::Or(cs) => cs.iter().map(Formula::literal_count).sum(),
        }
    }

    /// Checks the NNF shape: variables ≥ 1 and gates with ≥ 2 children.
    pub fn check(&self) -> Result<()> {
        match self {
            Formula::Lit { var: 0, .. } => Err(Error::Parse("variables are numbered from 1".into())),
            Formula::Lit { .. } => Ok(()),
            Formula::And(cs) | Formula::Or(cs) => {
                if cs.len() < 2 {
                    return Err(Error::Parse(format!("gate with {} children in {self}", cs.len())));
                }
                cs.iter().try_for_each(Formula::check)
            }
        }
    }

    pub fn eval(&self, a: &Assignment) -> bool {
        match self {
            Formula::Lit { var, positive } => a.get(*var) == *positive,
            Formula::And(cs) => cs.iter().all(|c| c.eval(a)),
            Formula::Or(cs) => cs.iter().any(|c| c.eval(a)),
        }
    }

    /// Renames variable `i` to `map(i)`.
    pub fn rename(&self, map: &impl Fn(usize) -> usize) -> Self {
        match self {
            Formula::Lit { var, positive } => Formula::Lit { var: map(*var), positive: *positive },
            Formula::And(cs) => Formula::And(cs.iter().map(|c| c.rename(map)).collect()),
            Formula::Or(cs) => Formula::Or(cs.iter().map(|c| c.rename(map)).collect()),
        }
    }

    pub fn is_satisfiable(&self, n: usize) -> bool {
        Assignment::all(n).any(|a| self.eval(&a))
    }

    pub fn is_tautology(&self, n: usize) -> bool {
        Assignment::all(n).all(|a| self.eval(&a))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let sexp = Sexp::parse(text)?;
        let f = Formula::from_sexp(&sexp)?;
        f.check()?;
        Ok(f)
    }

    fn from_sexp(s: &Sexp) -> Result<Self> {
        match s {
            Sexp::Atom(a) => Ok(Formula::var(parse_var(a)?)),
            Sexp::List(items) => {
                let (head, rest) = match items.split_first() {
                    Some((Sexp::Atom(h), rest)) => (h.as_str(), rest),
                    _ => return Err(Error::Parse(format!("expected an operator in {s}"))),
                };
                let children = rest.iter().map(Formula::from_sexp).collect::<Result<Vec<_>>>()?;
                match head {
                    "not" if children.len() == 1 => Ok(children[0].negate()),
                    "not" => Err(Error::Parse(format!("`not` takes one argument in {s}"))),
                    "and" => Ok(Formula::And(children)),
                    "or" => Ok(Formula::Or(children)),
                    _ => Err(Error::Parse(format!("unknown operator {head:?}"))),
                }
            }
        }
    }

    /// DIMACS CNF (`p cnf <vars> <clauses>` then zero-terminated clauses) as
    /// an NNF formula; also returns the declared variable count.
    pub fn from_dimacs(text: &str) -> Result<(Self, usize)> {
        let mut n = None;
        let mut clauses: Vec<Formula> = Vec::new();
        let mut clause: Vec<Formula> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if let Some(header) = line.strip_prefix('p') {
                let parts: Vec<&str> = header.split_whitespace().collect();
                if parts.len() != 3 || parts[0] != "cnf" {
                    return Err(Error::Parse(format!("bad DIMACS header {line:?}")));
                }
                n = Some(parts[1].parse::<usize>().map_err(|e| Error::Parse(e.to_string()))?);
                continue;
            }
            for tok in line.split_whitespace() {
                let lit: i64 = tok.parse().map_err(|_| Error::Parse(format!("bad literal {tok:?}")))?;
                if lit == 0 {
                    if clause.is_empty() {
                        return Err(Error::Parse("empty clause".into()));
                    }
                    clauses.push(Formula::or(std::mem::take(&mut clause)));
                } else {
                    let var = lit.unsigned_abs() as usize;
                    clause.push(Formula::Lit { var, positive: lit > 0 });
                }
            }
        }
        if !clause.is_empty() {
            clauses.push(Formula::or(clause));
        }
        let n = n.ok_or_else(|| Error::Parse("missing `p cnf` header".into()))?;
        if clauses.is_empty() {
            return Err(Error::Parse("no clauses".into()));
        }
        let f = Formula::and(clauses);
        if f.max_var() > n {
            return Err(Error::Parse(format!("variable x{} exceeds the declared {n}", f.max_var())));
        }
        Ok((f, n))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Lit { var, positive: true } => write!(f, "x{var}"),
            Formula::Lit { var, positive: false } => write!(f, "(not x{var})"),
            Formula::And(cs) | Formula::Or(cs) => {
                write!(f, "({}", if matches!(self, Formula::And(_)) { "and" } else { "or" })?;
                for c in cs {
                    write!(f, " {c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

fn parse_var(a: &str) -> Result<usize> {
    a.strip_prefix('x')
        .and_then(|d| d.parse::<usize>().ok())
        .filter(|&i| i >= 1)
        .ok_or_else(|| Error::Parse(format!("expected a variable like x1, found {a:?}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Exists,
    Forall,
}

/// Quantifier blocks, outermost first, over an NNF matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Qbf {
    pub blocks: Vec<(Quantifier, Vec<usize>)>,
    pub matrix: Formula,
}

impl Qbf {
    pub fn new(blocks: Vec<(Quantifier, Vec<usize>)>, matrix: Formula) -> Result<Self> {
        let q = Qbf { blocks, matrix };
        q.check()?;
        Ok(q)
    }

    pub fn check(&self) -> Result<()> {
        self.matrix.check()?;
        let mut seen = std::collections::BTreeSet::new();
        for (_, vars) in &self.blocks {
            if vars.is_empty() {
                return Err(Error::Parse("empty quantifier block".into()));
            }
            for &v in vars {
                if v == 0 || !seen.insert(v) {
                    return Err(Error::Parse(format!("variable x{v} bound twice or invalid")));
                }
            }
        }
        for v in 1..=self.matrix.max_var() {
            if !seen.contains(&v) && mentions(&self.matrix, v) {
                return Err(Error::Parse(format!("x{v} is not bound by any quantifier")));
            }
        }
        Ok(())
    }

    /// Blocks with neighbouring equal quantifiers merged.
    pub fn merged_blocks(&self) -> Vec<(Quantifier, Vec<usize>)> {
        let mut out: Vec<(Quantifier, Vec<usize>)> = Vec::new();
        for (q, vars) in &self.blocks {
            match out.last_mut() {
                Some((last, vs)) if last == q => vs.extend(vars),
                _ => out.push((*q, vars.clone())),
            }
        }
        out
    }

    /// `(forall (x1) (exists (x2 x3) body))`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut sexp = Sexp::parse(text)?;
        let mut blocks = Vec::new();
        loop {
            let Sexp::List(items) = &sexp else { break };
            let quant = match items.first() {
                Some(Sexp::Atom(h)) if h == "forall" => Quantifier::Forall,
                Some(Sexp::Atom(h)) if h == "exists" => Quantifier::Exists,
                _ => break,
            };
            let [_, Sexp::List(vars), body] = items.as_slice() else {
                return Err(Error::Parse(format!("expected ({} (vars…) body)", items[0])));
            };
            let vars = vars
                .iter()
                .map(|v| match v {
                    Sexp::Atom(a) => parse_var(a),
                    _ => Err(Error::Parse("quantified variables must be atoms".into())),
                })
                .collect::<Result<Vec<_>>>()?;
            blocks.push((quant, vars));
            sexp = body.clone();
        }
        let matrix = Formula::from_sexp(&sexp)?;
        Qbf::new(blocks, matrix)
    }
}

fn mentions(f: &Formula, v: usize) -> bool {
    match f {
        Formula::Lit { var, .. } => *var == v,
        Formula::And(cs) | Formula::Or(cs) => cs.iter().any(|c| mentions(c, v)),
    }
}

impl fmt::Display for Qbf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (q, vars) in &self.blocks {
            let name = if *q == Quantifier::Exists { "exists" } else { "forall" };
            let vs: Vec<String> = vars.iter().map(|v| format!("x{v}")).collect();
            write!(f, "({name} ({}) ", vs.join(" "))?;
        }
        write!(f, "{}", self.matrix)?;
        for _ in &self.blocks {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl Qbf {
    /// Truth of the formula with blocks `from..` still quantified and every
    /// other variable read from `a` (variables beyond `a.n()` count as false).
    pub fn eval_from(&self, from: usize, a: &Assignment) -> bool {
        let n = self.max_var().max(a.n());
        let mut bits = vec![false; n];
        bits[..a.n()].copy_from_slice(a.bits());
        let order: Vec<(Quantifier, usize)> =
            self.blocks[from..].iter().flat_map(|(qt, vs)| vs.iter().map(move |&v| (*qt, v))).collect();
        expand(&self.matrix, &order, &mut bits)
    }

    pub fn max_var(&self) -> usize {
        self.blocks.iter().flat_map(|(_, vs)| vs.iter().copied()).chain([self.matrix.max_var()]).max().unwrap_or(0)
    }
}

/// Truth of `q` by expanding every quantifier.
pub fn brute_force_qbf(q: &Qbf) -> bool {
    q.eval_from(0, &Assignment::new(Vec::new()))
}

fn expand(f: &Formula, order: &[(Quantifier, usize)], bits: &mut Vec<bool>) -> bool {
    let Some(((quant, v), rest)) = order.split_first() else {
        return f.eval(&Assignment::new(bits.clone()));
    };
    let mut results = [false, true].into_iter().map(|b| {
        bits[v - 1] = b;
        expand(f, rest, bits)
    });
    match quant {
        Quantifier::Exists => results.any(|r| r),
        Quantifier::Forall => results.all(|r| r),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Sexp {
    Atom(String),
    List(Vec<Sexp>),
}

impl fmt::Display for Sexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sexp::Atom(a) => write!(f, "{a}"),
            Sexp::List(items) => {
                let parts: Vec<String> = items.iter().map(|i| i.to_string()).collect();
                write!(f, "({})", parts.join(" "))
            }
        }
    }
}

impl Sexp {
    fn parse(text: &str) -> Result<Sexp> {
        let spaced = text.replace('(', " ( ").replace(')', " ) ");
        let mut tokens = spaced.split_whitespace().peekable();
        let s = Sexp::read(&mut tokens)?;
        if let Some(t) = tokens.next() {
            return Err(Error::Parse(format!("unexpected trailing {t:?}")));
        }
        Ok(s)
    }

    fn read<'a>(tokens: &mut std::iter::Peekable<impl Iterator<Item = &'a str>>) -> Result<Sexp> {
        match tokens.next() {
            None => Err(Error::Parse("unexpected end of input".into())),
            Some(")") => Err(Error::Parse("unexpected `)`".into())),
            Some("(") => {
                let mut items = Vec::new();
                loop {
                    match tokens.peek() {
                        None => return Err(Error::Parse("missing `)`".into())),
                        Some(&")") => {
                            tokens.next();
                            return Ok(Sexp::List(items));
                        }
                        _ => items.push(Sexp::read(tokens)?),
                    }
                }
            }
            Some(atom) => Ok(Sexp::Atom(atom.to_string())),
        }
    }
}
