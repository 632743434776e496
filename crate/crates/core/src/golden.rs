//! Exact arithmetic in the golden field Q(√5).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, ToPrimitive, Zero};

/// Rational scalar used throughout the crate.
pub type Rational = num_rational::Rational64;

/// Shorthand for building a rational `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// An element `a + b√5` with rational `a`, `b`.
///
/// Rationals are kept in lowest terms by `Ratio`, so derived equality and
/// hashing are value equality.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct GoldenNumber {
    pub a: Rational,
    pub b: Rational,
}

impl GoldenNumber {
    pub const fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(Rational::from_integer(a), Rational::from_integer(b))
    }

    pub fn rational(a: Rational) -> Self {
        Self::new(a, Rational::zero())
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn sqrt5() -> Self {
        Self::from_ints(0, 1)
    }

    /// τ = (1+√5)/2.
    pub fn tau() -> Self {
        Self::new(ratio(1, 2), ratio(1, 2))
    }

    /// σ = (1−√5)/2, the algebraic conjugate of τ.
    pub fn sigma() -> Self {
        Self::new(ratio(1, 2), ratio(-1, 2))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Galois conjugate `a − b√5`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.a, -self.b)
    }

    /// Field norm `a² − 5b²` (product with the conjugate).
    pub fn norm(&self) -> Rational {
        self.a * self.a - Rational::from_integer(5) * self.b * self.b
    }

    /// Exact sign: −1, 0 or 1.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sa >= 0 && sb >= 0 {
            return (sa + sb).signum();
        }
        if sa <= 0 && sb <= 0 {
            return -1;
        }
        // Mixed signs: compare a² with 5b².
        let a2 = self.a * self.a;
        let b2 = Rational::from_integer(5) * self.b * self.b;
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -*self
        } else {
            *self
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(Self::new(self.a / n, -self.b / n))
    }

    pub fn scale(&self, r: Rational) -> Self {
        Self::new(self.a * r, self.b * r)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| acc * *self)
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.a) + to_f64(&self.b) * 5f64.sqrt()
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

pub(crate) fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl From<Rational> for GoldenNumber {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}

impl From<i64> for GoldenNumber {
    fn from(n: i64) -> Self {
        Self::from_ints(n, 0)
    }
}

impl Add for GoldenNumber {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl AddAssign for GoldenNumber {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for GoldenNumber {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl SubAssign for GoldenNumber {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Neg for GoldenNumber {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for GoldenNumber {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let five = Rational::from_integer(5);
        Self::new(
            self.a * rhs.a + five * self.b * rhs.b,
            self.a * rhs.b + self.b * rhs.a,
        )
    }
}

impl Mul<Rational> for GoldenNumber {
    type Output = Self;
    fn mul(self, rhs: Rational) -> Self {
        self.scale(rhs)
    }
}

impl Div for GoldenNumber {
    type Output = Self;
    /// Panics on division by zero, like integer division.
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero golden number")
    }
}

impl One for GoldenNumber {
    fn one() -> Self {
        GoldenNumber::one()
    }
}

impl Zero for GoldenNumber {
    fn zero() -> Self {
        GoldenNumber::zero()
    }
    fn is_zero(&self) -> bool {
        GoldenNumber::is_zero(self)
    }
}

impl PartialOrd for GoldenNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        (*self - *other).signum().cmp(&0)
    }
}

impl fmt::Display for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√5", self.b),
            (false, false) if self.b.is_negative() => write!(f, "{} - {}√5", self.a, -self.b),
            _ => write!(f, "{} + {}√5", self.a, self.b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_identities() {
        let t = GoldenNumber::tau();
        let s = GoldenNumber::sigma();
        assert_eq!(t * s, -GoldenNumber::one());
        assert_eq!(t + s, GoldenNumber::one());
        assert_eq!(t * t, t + GoldenNumber::one());
        assert_eq!(t.inverse().unwrap(), -s);
        assert_eq!(t.conjugate(), s);
    }

    #[test]
    fn sign_mixed_components() {
        // 2 − √5 < 0, 3 − √5 > 0, −9/4 + √5 < 0
        assert_eq!(GoldenNumber::from_ints(2, -1).signum(), -1);
        assert_eq!(GoldenNumber::from_ints(3, -1).signum(), 1);
        assert_eq!(GoldenNumber::new(ratio(-9, 4), ratio(1, 1)).signum(), -1);
        assert_eq!(GoldenNumber::zero().signum(), 0);
        assert!(GoldenNumber::sigma() < GoldenNumber::zero());
        assert!(GoldenNumber::tau() > GoldenNumber::one());
    }

    #[test]
    fn inverse_of_zero_is_none() {
        assert!(GoldenNumber::zero().inverse().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(GoldenNumber::tau().to_string(), "1/2 + 1/2√5");
        assert_eq!(GoldenNumber::sigma().to_string(), "1/2 - 1/2√5");
        assert_eq!(GoldenNumber::from_ints(3, 0).to_string(), "3");
    }
}
