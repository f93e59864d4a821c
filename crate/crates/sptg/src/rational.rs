//! Exact rational numbers.
//!
//! Values that fit in a pair of machine words are kept inline; everything else
//! falls back to `num_rational::BigRational`. Both representations are always
//! in lowest terms with a positive denominator, and a value is stored inline
//! whenever it fits, so structural equality and hashing agree with numeric
//! equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone)]
pub struct Rational(Repr);

#[derive(Clone)]
enum Repr {
    // numerator, denominator; denominator > 0, gcd = 1, numerator != i64::MIN
    Small(i64, i64),
    Big(Box<BigRational>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    b >>= b.trailing_zeros();
    // dyadic values make one odd part 1 most of the time
    if a == 1 || b == 1 {
        return 1 << shift;
    }
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl Rational {
    fn small(n: i64, d: i64) -> Self {
        Rational(Repr::Small(n, d))
    }

    /// Reduces `n/d` (d != 0) and picks the inline representation when possible.
    fn from_i128(n: i128, d: i128) -> Self {
        debug_assert!(d != 0);
        if n > i64::MIN as i128 && n <= i64::MAX as i128 && d > i64::MIN as i128 && d <= i64::MAX as i128 {
            let (n, d) = if d < 0 { (-(n as i64), -(d as i64)) } else { (n as i64, d as i64) };
            let g = gcd_u64(n.unsigned_abs(), d as u64) as i64;
            return if g > 1 { Self::small(n / g, d / g) } else { Self::small(n, d) };
        }
        let (n, d) = if d < 0 { (-n, -d) } else { (n, d) };
        let (na, du) = (n.unsigned_abs(), d as u128);
        let g = if na >> 64 == 0 && du >> 64 == 0 {
            gcd_u64(na as u64, du as u64) as i128
        } else {
            gcd_u128(na, du) as i128
        };
        if g > 1 {
            Self::from_reduced_i128(n / g, d / g)
        } else {
            Self::from_reduced_i128(n, d)
        }
    }

    /// `n/d` already in lowest terms with `d > 0`.
    fn from_reduced_i128(n: i128, d: i128) -> Self {
        if n > i64::MIN as i128 && n <= i64::MAX as i128 && d <= i64::MAX as i128 {
            Self::small(n as i64, d as i64)
        } else {
            Rational(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            ))))
        }
    }

    /// `a/b + c/d` for reduced small operands (`c` negated for subtraction),
    /// in `i64` unless something overflows.
    fn add_small(a: i64, b: i64, c: i128, d: i64) -> Self {
        if c == 0 {
            return Self::small(a, b);
        }
        if a == 0 {
            return Self::from_reduced_i128(c, d as i128);
        }
        let fast = i64::try_from(c).ok().and_then(|c| {
            if (b & (b - 1)) | (d & (d - 1)) == 0 {
                // both denominators are powers of two
                let m = b.max(d);
                let t = a.checked_mul(m >> b.trailing_zeros())?.checked_add(c.checked_mul(m >> d.trailing_zeros())?)?;
                if t == 0 {
                    return Some(Self::zero());
                }
                let k = t.trailing_zeros().min(m.trailing_zeros());
                return (t != i64::MIN).then(|| Self::small(t >> k, m >> k));
            }
            let g = gcd_u64(b as u64, d as u64) as i64;
            let (bg, dg) = (b / g, d / g);
            let t = a.checked_mul(dg)?.checked_add(c.checked_mul(bg)?)?;
            if t == 0 {
                return Some(Self::zero());
            }
            if t == i64::MIN {
                return None;
            }
            let g2 = if g == 1 { 1 } else { gcd_u64(t.unsigned_abs(), g as u64) as i64 };
            Some(Self::small(t / g2, bg.checked_mul(d / g2)?))
        });
        fast.unwrap_or_else(|| Self::from_i128(a as i128 * d as i128 + c * b as i128, b as i128 * d as i128))
    }

    /// Takes ownership of an already-reduced big rational.
    fn from_reduced_big(r: BigRational) -> Self {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Self::small(n, d);
            }
        }
        Rational(Repr::Big(Box::new(r)))
    }

    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Self::from_i128(numer as i128, denom as i128)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_i128(n as i128, 1)
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Self::from_reduced_big(BigRational::new(numer, denom))
    }

    pub fn from_big(r: BigRational) -> Self {
        Self::from_reduced_big(r)
    }

    pub fn zero() -> Self {
        Self::small(0, 1)
    }

    pub fn one() -> Self {
        Self::small(1, 1)
    }

    /// `2^k` for any integer exponent.
    pub fn pow2(k: i32) -> Self {
        if (0..62).contains(&k) {
            Self::small(1i64 << k, 1)
        } else if (-62..0).contains(&k) {
            Self::small(1, 1i64 << (-k))
        } else if k >= 0 {
            Self::from_reduced_big(BigRational::from_integer(BigInt::one() << (k as usize)))
        } else {
            Self::from_reduced_big(BigRational::new_raw(
                BigInt::one(),
                BigInt::one() << ((-k) as usize),
            ))
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn signum(&self) -> Ordering {
        match &self.0 {
            Repr::Small(n, _) => n.cmp(&0),
            Repr::Big(b) => {
                if b.is_negative() {
                    Ordering::Less
                } else if b.is_zero() {
                    Ordering::Equal
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => {
                assert!(*n != 0, "reciprocal of zero");
                Self::from_i128(*d as i128, *n as i128)
            }
            Repr::Big(b) => Self::from_reduced_big(b.recip()),
        }
    }

    pub fn floor(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, d) => BigInt::from(n.div_floor(d)),
            Repr::Big(b) => b.floor().to_integer(),
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Dyadic exponent `k` with `denominator = 2^k`, if the denominator is a
    /// power of two.
    pub fn dyadic_exponent(&self) -> Option<u64> {
        let d = self.denom();
        let bits = d.bits();
        if d == (BigInt::one() << (bits - 1) as usize) {
            Some(bits - 1)
        } else {
            None
        }
    }

    /// Decimal rendering with exactly `digits` fractional digits, rounding
    /// half away from zero.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = num_traits::pow(BigInt::from(10), digits);
        let n = self.numer();
        let d = self.denom();
        let neg = n.is_negative();
        let scaled = n.abs() * &scale;
        let (q, r) = scaled.div_rem(&d);
        let q = if r * 2 >= d { q + 1 } else { q };
        let mut s = q.to_string();
        if digits > 0 {
            if s.len() <= digits {
                s = "0".repeat(digits + 1 - s.len()) + &s;
            }
            s.insert(s.len() - digits, '.');
        }
        if neg && q_nonzero(&s) {
            s.insert(0, '-');
        }
        s
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }
}

fn q_nonzero(s: &str) -> bool {
    s.bytes().any(|b| b.is_ascii_digit() && b != b'0')
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Self::from_integer(n as i64)
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Self::from_integer(n as i64)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Self::from_reduced_big(r)
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Repr::Big(b) => {
                1u8.hash(state);
                b.numer().hash(state);
                b.denom().hash(state);
            }
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if b == d {
                    a.cmp(c)
                } else {
                    (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
                }
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => Rational::add_small(*a, *b, *c as i128, *d),
            _ => Rational::from_reduced_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => Rational::add_small(*a, *b, -(*c as i128), *d),
            _ => Rational::from_reduced_big(self.to_big() - rhs.to_big()),
        }
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *a == 0 || *c == 0 {
                    return Rational::zero();
                }
                if *b == 1 && *d == 1 {
                    return Rational::from_reduced_i128(*a as i128 * *c as i128, 1);
                }
                // cross-cancel first so the product is already reduced
                let g1 = gcd_u64(a.unsigned_abs(), d.unsigned_abs()).max(1) as i64;
                let g2 = gcd_u64(c.unsigned_abs(), b.unsigned_abs()).max(1) as i64;
                Rational::from_reduced_i128(
                    (a / g1) as i128 * (c / g2) as i128,
                    (b / g2) as i128 * (d / g1) as i128,
                )
            }
            _ => Rational::from_reduced_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let g1 = gcd_u64(a.unsigned_abs(), c.unsigned_abs()).max(1) as i64;
                let g2 = gcd_u64(b.unsigned_abs(), d.unsigned_abs()).max(1) as i64;
                Rational::from_i128(
                    (a / g1) as i128 * (d / g2) as i128,
                    (b / g2) as i128 * (c / g1) as i128,
                )
            }
            _ => Rational::from_reduced_big(self.to_big() / rhs.to_big()),
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => Rational::small(-n, *d),
            Repr::Big(b) => Rational::from_reduced_big(-(**b).clone()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = &*self + rhs;
    }
}

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = &*self * rhs;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p`, `p/q` and `-p/q`; the result is reduced.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let valid = |x: &str, signed: bool| {
            let digits = if signed { x.strip_prefix('-').unwrap_or(x) } else { x };
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid(n, true) || !valid(d, false) {
            return Err(err());
        }
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(Rational::from_bigints(n, d))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for `Rational::new(n, d)`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// A rational or +∞.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ExtendedValue {
    Finite(Rational),
    Infinite,
}

impl ExtendedValue {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedValue::Infinite)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtendedValue::Finite(r) => Some(r),
            ExtendedValue::Infinite => None,
        }
    }
}

impl From<Rational> for ExtendedValue {
    fn from(r: Rational) -> Self {
        ExtendedValue::Finite(r)
    }
}

impl Ord for ExtendedValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedValue::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ExtendedValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for ExtendedValue {
    type Output = ExtendedValue;
    fn add(self, rhs: ExtendedValue) -> ExtendedValue {
        match (self, rhs) {
            (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => ExtendedValue::Finite(a + b),
            _ => ExtendedValue::Infinite,
        }
    }
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedValue::Finite(r) => write!(f, "{r}"),
            ExtendedValue::Infinite => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/6".parse::<Rational>().unwrap(), q(1, 2));
        assert_eq!("-4".parse::<Rational>().unwrap().to_string(), "-4");
        assert_eq!(q(6, -4).to_string(), "-3/2");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
    }

    #[test]
    fn overflow_falls_back_to_big() {
        let a = q(i64::MAX, 3);
        let b = q(i64::MAX - 1, 7);
        let s = &a * &b;
        let expected = big(i64::MAX, 3) * big(i64::MAX - 1, 7);
        assert_eq!(s.to_big(), expected);
        // shrinking back re-enters the inline form
        let back = &s / &b;
        assert_eq!(back, a);
        assert!(matches!(back.0, Repr::Small(..)));
    }

    #[test]
    fn powers_of_two() {
        assert_eq!(Rational::pow2(-3), q(1, 8));
        assert_eq!(Rational::pow2(70).to_big(), BigRational::from_integer(BigInt::one() << 70));
        assert_eq!(Rational::pow2(-70).dyadic_exponent(), Some(70));
        assert_eq!(q(1, 3).dyadic_exponent(), None);
        assert_eq!(q(5, 1).dyadic_exponent(), Some(0));
    }

    #[test]
    fn decimals() {
        assert_eq!(q(1, 3).to_decimal(4), "0.3333");
        assert_eq!(q(2, 3).to_decimal(4), "0.6667");
        assert_eq!(q(-1, 8).to_decimal(2), "-0.13");
        assert_eq!(q(-1, 1000).to_decimal(2), "0.00");
        assert_eq!(q(7, 2).to_decimal(0), "4");
    }

    #[test]
    fn extended_order() {
        let inf = ExtendedValue::Infinite;
        let one = ExtendedValue::Finite(q(1, 1));
        assert!(inf > one);
        assert_eq!(one.clone() + inf.clone(), inf);
    }

    fn canonical(r: &Rational) -> bool {
        match &r.0 {
            Repr::Small(n, d) => *d > 0 && *n != i64::MIN && gcd_u64(n.unsigned_abs(), *d as u64) == 1,
            Repr::Big(b) => b.numer().to_i64().zip(b.denom().to_i64()).is_none_or(|(n, _)| n == i64::MIN),
        }
    }

    fn arb_rational() -> impl Strategy<Value = (i64, i64)> {
        prop_oneof![
            (-1000i64..1000, 1i64..64),
            (-1000i64..1000, 0u32..62).prop_map(|(n, k)| (n, 1i64 << k)),
            (any::<i64>().prop_filter("not min", |n| *n != i64::MIN), 1i64..i64::MAX),
        ]
    }

    proptest! {
        #[test]
        fn matches_bigrational((an, ad) in arb_rational(), (bn, bd) in arb_rational()) {
            let (a, b) = (q(an, ad), q(bn, bd));
            let (x, y) = (big(an, ad), big(bn, bd));
            for (r, want) in [(&a + &b, &x + &y), (&a - &b, &x - &y), (&a * &b, &x * &y)] {
                prop_assert!(canonical(&r));
                prop_assert_eq!(r.to_big(), want);
            }
            if bn != 0 {
                let r = &a / &b;
                prop_assert!(canonical(&r));
                prop_assert_eq!(r.to_big(), &x / &y);
            }
            prop_assert_eq!(a.cmp(&b), x.cmp(&y));
            prop_assert_eq!(a == b, x == y);
            let r = &a + &b;
            prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        }
    }
}
