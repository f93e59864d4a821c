//! Boolean assignments and the dyadic time intervals that spell them.

use crate::rational::Rational;

/// An assignment of `x_1 … x_n`; variable `x_i` is the `i`-th binary digit
/// after the point of the interval start time.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    bits: Vec<bool>,
}

impl Assignment {
    pub fn new(bits: Vec<bool>) -> Self {
        Assignment { bits }
    }

    /// The assignment whose interval is the `index`-th of the `2^n` intervals.
    pub fn from_index(n: usize, index: u64) -> Self {
        let bits = (1..=n).map(|i| (index >> (n - i)) & 1 == 1).collect();
        Assignment { bits }
    }

    /// All `2^n` assignments in time order.
    pub fn all(n: usize) -> impl Iterator<Item = Assignment> {
        (0..1u64 << n).map(move |k| Assignment::from_index(n, k))
    }

    pub fn n(&self) -> usize {
        self.bits.len()
    }

    /// Value of `x_i` (1-based).
    pub fn get(&self, i: usize) -> bool {
        self.bits[i - 1]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// `(t_s, t_m, t_e)`: start, the witness time halfway through, and end of
    /// the assignment's interval `[t_s, t_e)`.
    pub fn times(&self) -> (Rational, Rational, Rational) {
        let n = self.n() as i32;
        let mut ts = Rational::zero();
        for (k, &b) in self.bits.iter().enumerate() {
            if b {
                ts += Rational::pow2(-(k as i32) - 1);
            }
        }
        let tm = &ts + Rational::pow2(-n - 1);
        let te = &ts + Rational::pow2(-n);
        (ts, tm, te)
    }
}
