//! Checks that a value function encodes a boolean function over the
//! assignment intervals of `[0, 1]`.

use crate::assignment::Assignment;
use crate::formula::Formula;
use crate::game::StateId;
use crate::pwl::PwlFunction;
use crate::rational::{q, Rational};
use crate::values::ValueMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EncodingKind {
    /// Pinned to `v − t/2` on false assignments, peaking at `+v'` on true.
    Straight,
    /// Pinned to `v − t/2` on true assignments, dipping to `−v'` on false.
    Reverse,
}

impl EncodingKind {
    pub fn flip(self) -> Self {
        match self {
            EncodingKind::Straight => EncodingKind::Reverse,
            EncodingKind::Reverse => EncodingKind::Straight,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodingParams {
    pub v: Rational,
    pub offset: Rational,
    pub n: usize,
    pub kind: EncodingKind,
}

/// Why an encoding check failed, for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EncodingViolation {
    NotUnitHorizon,
    Infinite,
    OutOfBand { t: Rational },
    NotPinned { assignment: Vec<bool> },
    NoExcursion { assignment: Vec<bool> },
}

pub fn encoding_check(vm: &ValueMap, s: StateId, f: &Formula, p: &EncodingParams) -> bool {
    encoding_violation(vm.get(s), |a| f.eval(a), p).is_none()
}

/// The first violated condition, or `None` if `f` encodes `pred` under `p`.
pub fn encoding_violation(
    f: &PwlFunction,
    pred: impl Fn(&Assignment) -> bool,
    p: &EncodingParams,
) -> Option<EncodingViolation> {
    if *f.horizon() != Rational::one() {
        return Some(EncodingViolation::NotUnitHorizon);
    }
    if f.is_infinite() {
        return Some(EncodingViolation::Infinite);
    }
    // the value relative to the reference line v − t/2, sign-normalised so
    // that excursions are upward in both kinds
    let rel = f.relative(&q(-1, 2)).shift(&-&p.v);
    let rel = match p.kind {
        EncodingKind::Straight => rel,
        EncodingKind::Reverse => rel.scale_values(&q(-1, 1)),
    };
    let zero = Rational::zero();
    for (t, y) in rel.breakpoints() {
        if *y < zero || *y > p.offset {
            return Some(EncodingViolation::OutOfBand { t: t.clone() });
        }
    }
    for a in Assignment::all(p.n) {
        let (ts, _, te) = a.times();
        let excursion = pred(&a) == (p.kind == EncodingKind::Straight);
        let top = rel.max_on(&ts, &te);
        if excursion {
            if !rel.at(&ts).is_zero() || !rel.at(&te).is_zero() {
                return Some(EncodingViolation::NotPinned { assignment: a.bits().to_vec() });
            }
            if top != p.offset {
                return Some(EncodingViolation::NoExcursion { assignment: a.bits().to_vec() });
            }
        } else if !top.is_zero() {
            return Some(EncodingViolation::NotPinned { assignment: a.bits().to_vec() });
        }
    }
    None
}

/// Whether every excursion reaches the far band edge at the interval's
/// midpoint witness `t_m`.
pub fn witnessed_at_midpoints(
    f: &PwlFunction,
    pred: impl Fn(&Assignment) -> bool,
    p: &EncodingParams,
) -> bool {
    let sign = if p.kind == EncodingKind::Straight { Rational::one() } else { q(-1, 1) };
    Assignment::all(p.n).all(|a| {
        let (_, tm, _) = a.times();
        let excursion = pred(&a) == (p.kind == EncodingKind::Straight);
        !excursion || f.at(&tm) == &p.v - &(&tm / &q(2, 1)) + &sign * &p.offset
    })
}
