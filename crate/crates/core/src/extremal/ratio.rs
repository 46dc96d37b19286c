use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::invariants::BigCount;

/// A reduced nonnegative fraction with a positive denominator.
///
/// Serializes as the string `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRatio(Ratio<BigUint>);

impl ExactRatio {
    /// `None` when the denominator is zero.
    pub fn new(numerator: BigCount, denominator: BigCount) -> Option<Self> {
        if denominator.is_zero() {
            None
        } else {
            Some(ExactRatio(Ratio::new(numerator, denominator)))
        }
    }

    pub fn from_u64(numerator: u64, denominator: u64) -> Option<Self> {
        Self::new(numerator.into(), denominator.into())
    }

    /// Converts a signed rational, rejecting negative values.
    pub fn from_signed(value: &Ratio<BigInt>) -> Option<Self> {
        let (num, den) = (value.numer(), value.denom());
        let positive = |x: &BigInt| x.sign() != Sign::Minus;
        if den.is_zero() || positive(num) != positive(den) && !num.is_zero() {
            return None;
        }
        Self::new(num.magnitude().clone(), den.magnitude().clone())
    }

    pub fn numerator(&self) -> &BigCount {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigCount {
        self.0.denom()
    }

    pub fn one() -> Self {
        ExactRatio(Ratio::one())
    }

    pub fn as_ratio(&self) -> &Ratio<BigUint> {
        &self.0
    }

    /// Signed copy for formula arithmetic.
    pub fn to_signed(&self) -> Ratio<BigInt> {
        Ratio::new(BigInt::from(self.numerator().clone()), BigInt::from(self.denominator().clone()))
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("expected a fraction `p/q` with q > 0, got {0:?}")]
pub struct RatioParseError(String);

impl FromStr for ExactRatio {
    type Err = RatioParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RatioParseError(s.to_string());
        let (p, q) = s.split_once('/').unwrap_or((s, "1"));
        let p: BigUint = p.trim().parse().map_err(|_| bad())?;
        let q: BigUint = q.trim().parse().map_err(|_| bad())?;
        ExactRatio::new(p, q).ok_or_else(bad)
    }
}

impl Serialize for ExactRatio {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactRatio {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
