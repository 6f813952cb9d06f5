use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exact rational number, always normalized: positive denominator,
/// gcd(|num|, den) = 1. Comparisons are exact; no floating point.
///
/// Internally a ratio of 128-bit integers, which gives enough headroom that
/// arithmetic on slopes of 64-bit invariants cannot overflow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RationalRepr", into = "RationalRepr")]
pub struct Rational(Ratio<i128>);

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: i128,
    den: i128,
}

impl From<Rational> for RationalRepr {
    fn from(r: Rational) -> Self {
        RationalRepr {
            num: *r.0.numer(),
            den: *r.0.denom(),
        }
    }
}

impl TryFrom<RationalRepr> for Rational {
    type Error = Error;

    fn try_from(repr: RationalRepr) -> Result<Self> {
        Rational::new(repr.num, repr.den)
    }
}

impl Rational {
    /// Builds `num/den`, normalized. Fails on a zero denominator.
    pub fn new(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidInput("rational with zero denominator".into()));
        }
        Ok(Rational(Ratio::new(num, den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(Ratio::from_integer(n as i128))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_sign_and_gcd() {
        let r = Rational::new(4, -6).unwrap();
        assert_eq!(r.numer(), -2);
        assert_eq!(r.denom(), 3);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn display_integer_and_fraction() {
        assert_eq!(Rational::new(-4, 4).unwrap().to_string(), "-1");
        assert_eq!(Rational::new(3, -2).unwrap().to_string(), "-3/2");
    }

    #[test]
    fn exact_comparison() {
        let a = Rational::new(1, 3).unwrap();
        let b = Rational::new(333_333_333, 1_000_000_000).unwrap();
        assert!(b < a);
    }
}
