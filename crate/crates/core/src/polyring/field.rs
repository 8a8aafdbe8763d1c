use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rationals in lowest terms with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldTag {
    F2,
    Q,
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::F2 => f.write_str("F2"),
            FieldTag::Q => f.write_str("Q"),
        }
    }
}

/// Coefficient field of a polynomial ring.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    const TAG: FieldTag;

    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn from_int(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_int(&BigInt::from(n))
    }

    /// Parses a coefficient literal: an integer, or `num/den` over `Q`.
    fn parse_literal(s: &str) -> Result<Self>;

    /// Whether the printed form of `self` is negative, and its absolute value.
    fn split_sign(&self) -> (bool, Self);
}

/// The field with two elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F2(pub bool);

impl F2 {
    pub const ZERO: F2 = F2(false);
    pub const ONE: F2 = F2(true);
}

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for F2 {
    type Output = F2;
    fn add(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for F2 {
    type Output = F2;
    fn sub(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for F2 {
    type Output = F2;
    fn mul(self, rhs: F2) -> F2 {
        F2(self.0 & rhs.0)
    }
}

impl Neg for F2 {
    type Output = F2;
    fn neg(self) -> F2 {
        self
    }
}

impl Zero for F2 {
    fn zero() -> F2 {
        F2::ZERO
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for F2 {
    fn one() -> F2 {
        F2::ONE
    }
}

impl Field for F2 {
    const TAG: FieldTag = FieldTag::F2;

    fn inverse(&self) -> Option<Self> {
        self.0.then_some(F2::ONE)
    }

    fn from_int(n: &BigInt) -> Self {
        F2(n.is_odd())
    }

    fn parse_literal(s: &str) -> Result<Self> {
        if s.contains('/') {
            return Err(Error::Parse(format!(
                "rational coefficient `{s}` is not allowed over F2"
            )));
        }
        let n: BigInt = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient `{s}`")))?;
        Ok(F2::from_int(&n))
    }

    fn split_sign(&self) -> (bool, Self) {
        (false, *self)
    }
}

impl Field for Rational {
    const TAG: FieldTag = FieldTag::Q;

    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn from_int(n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }

    fn parse_literal(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad coefficient `{s}`"));
        match s.split_once('/') {
            Some((num, den)) => {
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{s}`")));
                }
                Ok(Rational::new(num, den))
            }
            None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }

    fn split_sign(&self) -> (bool, Self) {
        if self < &Rational::zero() {
            (true, -self.clone())
        } else {
            (false, self.clone())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_is_characteristic_two() {
        assert_eq!(F2::ONE + F2::ONE, F2::ZERO);
        assert_eq!(-F2::ONE, F2::ONE);
        assert_eq!(F2::from_i64(-3), F2::ONE);
        assert_eq!(F2::ZERO.inverse(), None);
    }

    #[test]
    fn rationals_stay_in_lowest_terms() {
        let q = Rational::parse_literal("6/-4").unwrap();
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert!(Rational::parse_literal("1/0").is_err());
        assert!(F2::parse_literal("1/3").is_err());
    }
}
