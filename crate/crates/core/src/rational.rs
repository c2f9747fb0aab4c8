//! Exact rational values.
//!
//! Function values are compared for equality (flat regular pairs share a
//! value) and the extension step halves intervals repeatedly, so values are
//! kept as reduced big-integer fractions rather than floats.

use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A reduced fraction `numer / denom` with `denom > 0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {0:?} as a rational (expected \"p\" or \"p/q\")")]
pub struct ParseRationalError(pub String);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Panics if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// The value as a `u64` when it is a non-negative integer that fits.
    pub fn to_u64(&self) -> Option<u64> {
        if self.0.is_integer() {
            self.0.numer().to_u64()
        } else {
            None
        }
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Nearest `f64`, for drawing only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// The midpoint `(self + other) / 2`.
    pub fn midpoint(&self, other: &Rational) -> Rational {
        Rational((&self.0 + &other.0) / BigInt::from(2))
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let t = s.trim();
        match t.split_once('/') {
            None => t.parse::<BigInt>().map(|n| Rational(BigRational::from_integer(n))).map_err(|_| err()),
            Some((p, q)) => {
                let p = p.trim().parse::<BigInt>().map_err(|_| err())?;
                let q = q.trim().parse::<BigInt>().map_err(|_| err())?;
                if q.is_zero() {
                    return Err(err());
                }
                Ok(Rational(BigRational::new(p, q)))
            }
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
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
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!("9/2".parse::<Rational>().unwrap(), Rational::new(9, 2));
        assert_eq!("18/4".parse::<Rational>().unwrap(), Rational::new(9, 2));
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::from_integer(7));
        assert_eq!(" -3 / 6 ".parse::<Rational>().unwrap(), Rational::new(-1, 2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("4.5".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
    }

    #[test]
    fn display_is_reduced() {
        assert_eq!(Rational::new(6, 4).to_string(), "3/2");
        assert_eq!(Rational::new(-6, -3).to_string(), "2");
        assert_eq!(Rational::new(1, -2).to_string(), "-1/2");
    }

    #[test]
    fn ordering_is_numeric() {
        let mut v = vec![Rational::new(9, 2), Rational::from_integer(4), Rational::new(29, 2), Rational::zero()];
        v.sort();
        assert_eq!(v.iter().map(|r| r.to_string()).collect::<Vec<_>>(), ["0", "4", "9/2", "29/2"]);
    }

    #[test]
    fn midpoint_halves_the_gap() {
        let a = Rational::from_integer(3);
        let b = Rational::from_integer(5);
        assert_eq!(a.midpoint(&b), Rational::from_integer(4));
        assert_eq!(Rational::from_integer(4).midpoint(&b), Rational::new(9, 2));
    }

    #[test]
    fn integer_extraction() {
        assert_eq!(Rational::from_integer(20).to_u64(), Some(20));
        assert_eq!(Rational::new(9, 2).to_u64(), None);
        assert_eq!(Rational::from_integer(-1).to_u64(), None);
    }
}
