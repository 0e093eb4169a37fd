//! Exact rational numbers backed by arbitrary-precision integers.
//!
//! Every weight, threshold and degree in this crate is a [`Rational`]. There is
//! no floating-point path: products never wrap, they grow.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact rational, always in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// `num / den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(value: i64) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// True when `0 <= self <= 1`.
    pub fn in_unit_interval(&self) -> bool {
        !self.0.is_negative() && self.0 <= BigRational::one()
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
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

    /// Lossy conversion for display and heuristics only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Largest integer not exceeding `self`.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

impl From<u64> for Rational {
    fn from(value: u64) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }
}

impl From<usize> for Rational {
    fn from(value: usize) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }
}

impl From<BigInt> for Rational {
    fn from(value: BigInt) -> Self {
        Rational(BigRational::from_integer(value))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `num/den` or a bare integer. Decimals are rejected.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Parse(format!("expected a rational `num/den`, got `{s}`"));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let valid = |part: &str, signed: bool| {
            let digits = if signed {
                part.strip_prefix('-').unwrap_or(part)
            } else {
                part
            };
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid(num, true) || !valid(den, false) {
            return Err(bad());
        }
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        Ok(Rational(BigRational::new(num, den)))
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

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
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

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer((*other).into())
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0
            .partial_cmp(&BigRational::from_integer((*other).into()))
    }
}

/// Shorthand for `Rational::new(num, den)`.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let x = q(6, -8);
        assert_eq!(x.to_string(), "-3/4");
        assert_eq!(q(0, 5).to_string(), "0/1");
    }

    #[test]
    fn parse_accepts_fractions_and_integers() {
        assert_eq!("2/3".parse::<Rational>().unwrap(), q(2, 3));
        assert_eq!(" 4 ".parse::<Rational>().unwrap(), q(4, 1));
        assert_eq!("-1/2".parse::<Rational>().unwrap(), q(-1, 2));
        assert_eq!("10/4".parse::<Rational>().unwrap(), q(5, 2));
    }

    #[test]
    fn parse_rejects_decimals_and_garbage() {
        for bad in ["0.5", "1/0", "", "a/b", "1/-2", "1/2/3", "1e3", "+1"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad} should not parse");
        }
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = q(1, 3);
        let sum: Rational = std::iter::repeat_n(third.clone(), 3).sum();
        assert_eq!(sum, Rational::one());
        assert_eq!(&q(2, 3) * &q(3, 4), q(1, 2));
        assert_eq!(q(1, 2) - q(1, 3), q(1, 6));
        assert_eq!(q(1, 2) / q(1, 4), q(2, 1));
    }

    #[test]
    fn no_overflow_on_large_products() {
        let f = q(999, 1000);
        let mut x = Rational::one();
        for _ in 0..200 {
            x = &x * &f;
        }
        assert!(x.denom().bits() > 64 * 20);
        assert!(x > Rational::zero());
        assert!(x < Rational::one());
    }

    #[test]
    fn serde_uses_num_den_strings() {
        let s = serde_json::to_string(&q(3, 4)).unwrap();
        assert_eq!(s, "\"3/4\"");
        let back: Rational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q(3, 4));
    }
}
