//! Exact rational scalar.
//!
//! Every metric quantity in the crate is a [`Rational`]. There is no
//! floating-point path; the only lossy operation is [`Rational::to_decimal`],
//! which exists for plotting output and is labelled approximate wherever it
//! is emitted.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::GeometryError;

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Rational(BigRational);

// Denominators are positive, so cross-multiplication orders correctly and
// avoids the division loop of the generic ratio comparison.
impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if self.0.denom() == other.0.denom() {
            return self.0.numer().cmp(other.0.numer());
        }
        (self.0.numer() * other.0.denom()).cmp(&(other.0.numer() * self.0.denom()))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Rational {
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self, GeometryError> {
        if den.is_zero() {
            return Err(GeometryError::Parse("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn half() -> Self {
        Rational::new(1, 2)
    }

    /// `base^exp` for any integer exponent; `base` must be nonzero when
    /// `exp < 0`.
    pub fn pow(base: i64, exp: i32) -> Self {
        if let Some(m) = base.checked_pow(exp.unsigned_abs()) {
            if exp >= 0 {
                return Rational::integer(m);
            }
            if m != 0 {
                return Rational::new(1, m);
            }
        }
        let b = BigRational::from_integer(BigInt::from(base));
        Rational(num_traits::pow::Pow::pow(&b, exp))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn floor(&self) -> Self {
        Rational(self.0.floor())
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    /// Largest integer `<= self`, if it fits in an `i64`.
    pub fn floor_i64(&self) -> Option<i64> {
        self.0.numer().div_floor(self.0.denom()).to_i64()
    }

    /// Midpoint of `self` and `other`.
    pub fn midpoint(&self, other: &Rational) -> Rational {
        (self + other) * Rational::half()
    }

    /// Decimal rendering truncated toward zero after `digits` places.
    /// Approximate by construction; never fed back into computation.
    pub fn to_decimal(&self, digits: usize) -> String {
        let neg = self.0.is_negative();
        let abs = self.0.abs();
        let (int_part, mut rem) = abs.numer().div_rem(abs.denom());
        let den = abs.denom();
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push_str(&int_part.to_string());
        if digits > 0 {
            out.push('.');
            for _ in 0..digits {
                rem *= 10;
                let (d, r) = rem.div_rem(den);
                out.push_str(&d.to_string());
                rem = r;
            }
        }
        out
    }
}

impl fmt::Display for Rational {
    /// Always `p/q`, including integers (`1/1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = GeometryError;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || GeometryError::Parse(format!("not a rational: {s:?}"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                Rational::from_big(p, q)
            }
            None => {
                let p: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Rational(BigRational::from_integer(p)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}
