//! Exact non-negative vertex costs.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A non-negative exact rational cost.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Cost(BigRational);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseCostError {
    #[error("empty cost")]
    Empty,
    #[error("negative cost `{0}`")]
    Negative(String),
    #[error("malformed cost `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

impl Cost {
    pub fn zero() -> Self {
        Cost(BigRational::zero())
    }

    pub fn from_integer(value: u64) -> Self {
        Cost(BigRational::from_integer(BigInt::from(value)))
    }

    /// Builds `numer / denom`. Returns `None` for a zero denominator.
    pub fn from_fraction(numer: u64, denom: u64) -> Option<Self> {
        if denom == 0 {
            return None;
        }
        Some(Cost(BigRational::new(numer.into(), denom.into())))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn numer(&self) -> BigUint {
        self.0.numer().magnitude().clone()
    }

    pub fn denom(&self) -> BigUint {
        self.0.denom().magnitude().clone()
    }

    /// Approximate value, for display and benchmarks only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), k as usize)
}

impl FromStr for Cost {
    type Err = ParseCostError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseCostError::Empty);
        }
        if s.starts_with('-') {
            return Err(ParseCostError::Negative(s.to_string()));
        }
        let body = s.strip_prefix('+').unwrap_or(s);
        let malformed = || ParseCostError::Malformed(s.to_string());
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());

        if let Some((p, q)) = body.split_once('/') {
            if !digits(p) || !digits(q) {
                return Err(malformed());
            }
            let p: BigInt = p.parse().map_err(|_| malformed())?;
            let q: BigInt = q.parse().map_err(|_| malformed())?;
            if q.is_zero() {
                return Err(ParseCostError::ZeroDenominator(s.to_string()));
            }
            return Ok(Cost(BigRational::new(p, q)));
        }

        let (mantissa, exponent) = match body.find(['e', 'E']) {
            Some(at) => {
                let exp = &body[at + 1..];
                let (neg, mag) = match exp.as_bytes().first() {
                    Some(b'-') => (true, &exp[1..]),
                    Some(b'+') => (false, &exp[1..]),
                    _ => (false, exp),
                };
                if !digits(mag) || mag.len() > 6 {
                    return Err(malformed());
                }
                let mag: i64 = mag.parse().map_err(|_| malformed())?;
                (&body[..at], if neg { -mag } else { mag })
            }
            None => (body, 0),
        };
        let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(malformed());
        }
        if (!int_part.is_empty() && !digits(int_part))
            || (!frac_part.is_empty() && !digits(frac_part))
        {
            return Err(malformed());
        }
        let all = format!("{int_part}{frac_part}");
        let numer: BigInt = all.parse().map_err(|_| malformed())?;
        let scale = exponent - frac_part.len() as i64;
        let value = if scale >= 0 {
            BigRational::from_integer(numer * pow10(scale as u32))
        } else {
            BigRational::new(numer, pow10((-scale) as u32))
        };
        Ok(Cost(value))
    }
}

impl fmt::Display for Cost {
    /// Integers print plainly, terminating fractions as exact decimals, anything else as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let numer = self.0.numer();
        let denom = self.0.denom();
        if denom.is_one() {
            return write!(f, "{numer}");
        }
        let two = BigInt::from(2u32);
        let five = BigInt::from(5u32);
        let (mut rest, mut twos, mut fives) = (denom.clone(), 0u32, 0u32);
        while rest.is_multiple_of(&two) {
            rest /= &two;
            twos += 1;
        }
        while rest.is_multiple_of(&five) {
            rest /= &five;
            fives += 1;
        }
        if !rest.is_one() {
            return write!(f, "{numer}/{denom}");
        }
        let places = twos.max(fives);
        let scaled = (numer * pow10(places)) / denom;
        let text = format!(
            "{:0>width$}",
            scaled.to_string(),
            width = places as usize + 1
        );
        let (whole, frac) = text.split_at(text.len() - places as usize);
        write!(f, "{whole}.{frac}")
    }
}

impl fmt::Debug for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cost({self})")
    }
}

impl Add for Cost {
    type Output = Cost;
    fn add(self, rhs: Cost) -> Cost {
        Cost(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Cost> for Cost {
    type Output = Cost;
    fn add(self, rhs: &'a Cost) -> Cost {
        Cost(self.0 + &rhs.0)
    }
}

impl Sum for Cost {
    fn sum<I: Iterator<Item = Cost>>(iter: I) -> Cost {
        iter.fold(Cost::zero(), |acc, c| acc + c)
    }
}

impl<'a> Sum<&'a Cost> for Cost {
    fn sum<I: Iterator<Item = &'a Cost>>(iter: I) -> Cost {
        iter.fold(Cost::zero(), |acc, c| acc + c)
    }
}

impl Serialize for Cost {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Cost {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}

impl From<u64> for Cost {
    fn from(value: u64) -> Self {
        Cost::from_integer(value)
    }
}
