//! Continuous piecewise-linear functions over `[0, T]` with exact breakpoints,
//! plus lower/upper envelopes of line segments.

use std::fmt;

use crate::rational::{ExtendedValue, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PwlError {
    #[error("horizon must be positive, got {0}")]
    BadHorizon(Rational),
    #[error("breakpoints must start at 0 and end at the horizon {0}")]
    DomainEnds(Rational),
    #[error("breakpoint times must be strictly increasing (at t = {0})")]
    NotIncreasing(Rational),
    #[error("time {0} lies outside the domain [0, {1}]")]
    OutOfDomain(Rational, Rational),
    #[error("segment has t0 > t1 ({0} > {1})")]
    ReversedSegment(Rational, Rational),
    #[error("segments leave ({0}, {1}) uncovered")]
    Coverage(Rational, Rational),
    #[error("envelope is discontinuous at t = {0}")]
    Discontinuous(Rational),
    #[error("no segments given")]
    Empty,
}

/// A line segment from `(t0, v0)` to `(t1, v1)` carrying a source label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment<T = ()> {
    pub t0: Rational,
    pub v0: Rational,
    pub t1: Rational,
    pub v1: Rational,
    pub tag: T,
}

impl<T> Segment<T> {
    pub fn new(t0: Rational, v0: Rational, t1: Rational, v1: Rational, tag: T) -> Self {
        Segment { t0, v0, t1, v1, tag }
    }

    pub fn is_point(&self) -> bool {
        self.t0 == self.t1
    }

    fn slope(&self) -> Rational {
        (&self.v1 - &self.v0) / (&self.t1 - &self.t0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

/// A continuous piecewise-linear map `[0, T] → ℚ`, or the constant +∞.
///
/// Finite functions are kept canonical: times strictly increase from `0` to
/// `T` and no breakpoint is collinear with both of its neighbours, so derived
/// equality is pointwise equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PwlFunction {
    horizon: Rational,
    points: Option<Vec<(Rational, Rational)>>,
}

fn collinear(a: &(Rational, Rational), b: &(Rational, Rational), c: &(Rational, Rational)) -> bool {
    (&b.1 - &a.1) * (&c.0 - &b.0) == (&c.1 - &b.1) * (&b.0 - &a.0)
}

fn canonicalize(points: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(points.len());
    for p in points {
        while out.len() >= 2 && collinear(&out[out.len() - 2], &out[out.len() - 1], &p) {
            out.pop();
        }
        out.push(p);
    }
    out
}

impl PwlFunction {
    /// Builds a function from breakpoints spanning exactly `[0, horizon]`.
    pub fn new(horizon: Rational, points: Vec<(Rational, Rational)>) -> Result<Self, PwlError> {
        if !horizon.is_positive() {
            return Err(PwlError::BadHorizon(horizon));
        }
        match (points.first(), points.last()) {
            (Some(f), Some(l)) if f.0.is_zero() && l.0 == horizon && points.len() >= 2 => {}
            _ => return Err(PwlError::DomainEnds(horizon)),
        }
        for w in points.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(PwlError::NotIncreasing(w[1].0.clone()));
            }
        }
        Ok(PwlFunction { horizon, points: Some(canonicalize(points)) })
    }

    pub fn constant(horizon: Rational, v: Rational) -> Self {
        Self::linear(horizon, v, Rational::zero())
    }

    /// `t ↦ v0 + slope·t`.
    pub fn linear(horizon: Rational, v0: Rational, slope: Rational) -> Self {
        let v1 = &v0 + &slope * &horizon;
        PwlFunction::new(horizon.clone(), vec![(Rational::zero(), v0), (horizon, v1)])
            .expect("positive horizon")
    }

    pub fn infinite(horizon: Rational) -> Self {
        assert!(horizon.is_positive(), "horizon must be positive");
        PwlFunction { horizon, points: None }
    }

    pub fn horizon(&self) -> &Rational {
        &self.horizon
    }

    pub fn is_infinite(&self) -> bool {
        self.points.is_none()
    }

    /// Canonical breakpoints; empty for the +∞ function.
    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        self.points.as_deref().unwrap_or(&[])
    }

    pub fn evaluate(&self, t: &Rational) -> Result<ExtendedValue, PwlError> {
        if t.is_negative() || *t > self.horizon {
            return Err(PwlError::OutOfDomain(t.clone(), self.horizon.clone()));
        }
        let Some(pts) = &self.points else {
            return Ok(ExtendedValue::Infinite);
        };
        let i = pts.partition_point(|p| p.0 <= *t);
        if i == pts.len() {
            return Ok(ExtendedValue::Finite(pts[i - 1].1.clone()));
        }
        let (a, b) = (&pts[i - 1], &pts[i]);
        if a.0 == *t {
            return Ok(ExtendedValue::Finite(a.1.clone()));
        }
        let v = &a.1 + (&b.1 - &a.1) * (t - &a.0) / (&b.0 - &a.0);
        Ok(ExtendedValue::Finite(v))
    }

    /// Evaluates a finite function; panics on +∞ or out-of-domain times.
    pub fn at(&self, t: &Rational) -> Rational {
        match self.evaluate(t).expect("time within domain") {
            ExtendedValue::Finite(v) => v,
            ExtendedValue::Infinite => panic!("evaluating the +∞ function"),
        }
    }

    pub fn shift(&self, c: &Rational) -> Self {
        self.map_values(|v| v + c)
    }

    /// Applies an affine map to every value (the result stays canonical).
    fn map_values(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        PwlFunction {
            horizon: self.horizon.clone(),
            points: self
                .points
                .as_ref()
                .map(|p| p.iter().map(|(t, v)| (t.clone(), f(v))).collect()),
        }
    }

    /// Multiplies every value by a positive factor.
    pub fn scale_values(&self, factor: &Rational) -> Self {
        self.map_values(|v| v * factor)
    }

    /// `t ↦ f(t) − rho·t`.
    pub fn relative(&self, rho: &Rational) -> Self {
        PwlFunction {
            horizon: self.horizon.clone(),
            points: self.points.as_ref().map(|p| {
                canonicalize(p.iter().map(|(t, v)| (t.clone(), v - rho * t)).collect())
            }),
        }
    }

    /// Linear pieces as `(t0, v0, t1, v1)`.
    pub fn pieces(&self) -> impl Iterator<Item = (&Rational, &Rational, &Rational, &Rational)> {
        self.breakpoints().windows(2).map(|w| (&w[0].0, &w[0].1, &w[1].0, &w[1].1))
    }

    pub fn slopes(&self) -> Vec<Rational> {
        self.pieces().map(|(t0, v0, t1, v1)| (v1 - v0) / (t1 - t0)).collect()
    }

    pub fn segment_count(&self) -> usize {
        self.breakpoints().len().saturating_sub(1)
    }

    pub fn is_nonincreasing(&self) -> bool {
        self.breakpoints().windows(2).all(|w| w[1].1 <= w[0].1)
    }

    /// The breakpoints as segments, each tagged by `tag`.
    pub fn to_segments<T: Clone>(&self, tag: T) -> Vec<Segment<T>> {
        self.pieces()
            .map(|(t0, v0, t1, v1)| {
                Segment::new(t0.clone(), v0.clone(), t1.clone(), v1.clone(), tag.clone())
            })
            .collect()
    }

    /// One segment per breakpoint `(x, y)`: from `(0, y + rate·x)` to `(x, y)`,
    /// i.e. the cost of waiting at rate `rate` until `x` and then continuing.
    pub fn wait_extension(&self, rate: &Rational) -> Vec<Segment> {
        self.wait_extension_tagged(rate, |_| ())
    }

    pub fn wait_extension_tagged<T>(
        &self,
        rate: &Rational,
        tag: impl Fn(&Rational) -> T,
    ) -> Vec<Segment<T>> {
        self.breakpoints()
            .iter()
            .map(|(x, y)| Segment::new(Rational::zero(), y + rate * x, x.clone(), y.clone(), tag(x)))
            .collect()
    }

    /// Maximum of `f` on `[a, b]` (finite functions only).
    pub fn max_on(&self, a: &Rational, b: &Rational) -> Rational {
        self.extreme_on(a, b, true)
    }

    /// Minimum of `f` on `[a, b]` (finite functions only).
    pub fn min_on(&self, a: &Rational, b: &Rational) -> Rational {
        self.extreme_on(a, b, false)
    }

    fn extreme_on(&self, a: &Rational, b: &Rational, max: bool) -> Rational {
        let mut best = self.at(a);
        let mut consider = |v: Rational| {
            if (max && v > best) || (!max && v < best) {
                best = v;
            }
        };
        consider(self.at(b));
        for (t, v) in self.breakpoints() {
            if t > a && t < b {
                consider(v.clone());
            }
        }
        best
    }
}

impl fmt::Debug for PwlFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.points {
            None => write!(f, "+inf on [0, {}]", self.horizon),
            Some(p) => {
                write!(f, "[")?;
                for (i, (t, v)) in p.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "({t}, {v})")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// A maximal piece of an envelope together with the tag of the segment that
/// realises it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedPiece<T> {
    pub t0: Rational,
    pub t1: Rational,
    pub tag: T,
}

#[derive(Debug, Clone)]
pub struct TaggedEnvelope<T> {
    pub function: PwlFunction,
    pub pieces: Vec<TaggedPiece<T>>,
}

/// Pointwise minimum (`Lower`) or maximum (`Upper`) of `segments` over
/// `[0, horizon]`.
pub fn envelope<T: Ord + Clone>(
    segments: &[Segment<T>],
    side: Side,
    horizon: &Rational,
) -> Result<PwlFunction, PwlError> {
    envelope_tagged(segments, side, horizon).map(|e| e.function)
}

struct Line<'a, T> {
    start: Rational,
    value: Rational,
    slope: Rational,
    end: Rational,
    tag: &'a T,
}

impl<T> Line<'_, T> {
    fn value_at(&self, t: &Rational) -> Rational {
        &self.value + &self.slope * (t - &self.start)
    }
}

/// Like [`envelope`], but also reports which segment realises each piece.
/// Coinciding segments resolve to the smallest tag.
pub fn envelope_tagged<T: Ord + Clone>(
    segments: &[Segment<T>],
    side: Side,
    horizon: &Rational,
) -> Result<TaggedEnvelope<T>, PwlError> {
    if !horizon.is_positive() {
        return Err(PwlError::BadHorizon(horizon.clone()));
    }
    if segments.is_empty() {
        return Err(PwlError::Empty);
    }
    // Work on the lower envelope; the upper one is the negated lower envelope
    // of the negated inputs.
    let sign = match side {
        Side::Lower => Rational::one(),
        Side::Upper => -Rational::one(),
    };
    let zero = Rational::zero();
    let mut lines: Vec<Line<T>> = Vec::new();
    let mut points: Vec<(Rational, Rational)> = Vec::new();
    for s in segments {
        if s.t0 > s.t1 {
            return Err(PwlError::ReversedSegment(s.t0.clone(), s.t1.clone()));
        }
        for t in [&s.t0, &s.t1] {
            if *t < zero || t > horizon {
                return Err(PwlError::OutOfDomain(t.clone(), horizon.clone()));
            }
        }
        if s.is_point() {
            points.push((s.t0.clone(), &s.v0 * &sign));
        } else {
            lines.push(Line {
                start: s.t0.clone(),
                value: &s.v0 * &sign,
                slope: s.slope() * &sign,
                end: s.t1.clone(),
                tag: &s.tag,
            });
        }
    }

    let mut times: Vec<Rational> = vec![zero.clone(), horizon.clone()];
    for l in &lines {
        times.push(l.start.clone());
        times.push(l.end.clone());
    }
    times.sort();
    times.dedup();

    // pieces in the negated-if-upper space: (t0, v0, t1, v1, line index)
    let mut pieces: Vec<(Rational, Rational, Rational, Rational, usize)> = Vec::new();
    for w in times.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let active: Vec<usize> = (0..lines.len())
            .filter(|&i| lines[i].start <= *a && lines[i].end >= *b)
            .collect();
        if active.is_empty() {
            return Err(PwlError::Coverage(a.clone(), b.clone()));
        }
        let key = |i: usize, t: &Rational| (lines[i].value_at(t), lines[i].slope.clone(), lines[i].tag);
        let mut cur = *active
            .iter()
            .min_by(|&&i, &&j| key(i, a).cmp(&key(j, a)))
            .unwrap();
        let mut time = a.clone();
        loop {
            let cur_v = lines[cur].value_at(&time);
            let mut best: Option<(Rational, usize)> = None;
            for &i in &active {
                if lines[i].slope >= lines[cur].slope {
                    continue;
                }
                let gap = lines[i].value_at(&time) - &cur_v;
                let tc = &time + gap / (&lines[cur].slope - &lines[i].slope);
                if tc >= *b {
                    continue;
                }
                let better = match &best {
                    None => true,
                    Some((bt, bi)) => (&tc, &lines[i].slope, lines[i].tag)
                        < (bt, &lines[*bi].slope, lines[*bi].tag),
                };
                if better {
                    best = Some((tc, i));
                }
            }
            match best {
                Some((tc, i)) => {
                    let v_end = lines[cur].value_at(&tc);
                    pieces.push((time, cur_v, tc.clone(), v_end, cur));
                    cur = i;
                    time = tc;
                }
                None => {
                    let v_end = lines[cur].value_at(b);
                    pieces.push((time, cur_v, b.clone(), v_end, cur));
                    break;
                }
            }
        }
    }

    let mut bps: Vec<(Rational, Rational)> = Vec::with_capacity(pieces.len() + 1);
    let mut tagged: Vec<TaggedPiece<T>> = Vec::new();
    for (t0, v0, t1, v1, i) in pieces {
        if let Some(last) = bps.last() {
            if last.1 != &v0 * &sign {
                return Err(PwlError::Discontinuous(t0));
            }
        } else {
            bps.push((t0.clone(), &v0 * &sign));
        }
        bps.push((t1.clone(), &v1 * &sign));
        match tagged.last_mut() {
            Some(p) if p.tag == *lines[i].tag => p.t1 = t1,
            _ => tagged.push(TaggedPiece { t0, t1, tag: lines[i].tag.clone() }),
        }
    }
    let function = PwlFunction::new(horizon.clone(), bps)?;
    for (t, v) in points {
        let env = function.at(&t) * &sign;
        if v < env {
            return Err(PwlError::Discontinuous(t));
        }
    }
    Ok(TaggedEnvelope { function, pieces: tagged })
}
