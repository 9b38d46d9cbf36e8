use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A nonnegative fraction of big naturals, always kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ratio {
    numerator: BigUint,
    denominator: BigUint,
}

impl Ratio {
    pub fn new(numerator: BigUint, denominator: BigUint) -> Result<Ratio> {
        if denominator.is_zero() {
            return Err(Error::ParameterOutOfRange("zero denominator".into()));
        }
        let g = numerator.gcd(&denominator);
        if g.is_one() || numerator.is_zero() {
            let denominator = if numerator.is_zero() { BigUint::one() } else { denominator };
            return Ok(Ratio { numerator, denominator });
        }
        Ok(Ratio { numerator: numerator / &g, denominator: denominator / g })
    }

    /// From signed parts; the value must be nonnegative.
    pub fn from_signed(numerator: BigInt, denominator: BigInt) -> Result<Ratio> {
        let (num, den) = if denominator.sign() == Sign::Minus {
            (-numerator, -denominator)
        } else {
            (numerator, denominator)
        };
        match (num.to_biguint(), den.to_biguint()) {
            (Some(n), Some(d)) => Ratio::new(n, d),
            _ => Err(Error::ParameterOutOfRange("negative ratio".into())),
        }
    }

    pub fn from_u64(numerator: u64, denominator: u64) -> Result<Ratio> {
        Ratio::new(numerator.into(), denominator.into())
    }

    pub fn one() -> Ratio {
        Ratio { numerator: BigUint::one(), denominator: BigUint::one() }
    }

    pub fn numerator(&self) -> &BigUint {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigUint {
        &self.denominator
    }

    /// Decimal expansion truncated to `places` digits after the point.
    pub fn to_decimal(&self, places: usize) -> String {
        let scale = BigUint::from(10u32).pow(places as u32);
        let scaled = &self.numerator * &scale / &self.denominator;
        let (whole, frac) = scaled.div_rem(&scale);
        if places == 0 {
            return whole.to_string();
        }
        format!("{whole}.{:0>width$}", frac.to_string(), width = places)
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Ratio) -> Ordering {
        (&self.numerator * &other.denominator).cmp(&(&other.numerator * &self.denominator))
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Ratio) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Always rendered as `p/q`, including integral values.
impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
