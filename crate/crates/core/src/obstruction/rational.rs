use num_rational::Rational64;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// JSON form of an exact rational: `{"num": n, "den": d}` with `d > 0` and
/// the fraction in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRepr {
    pub num: i64,
    pub den: i64,
}

impl From<Rational64> for RationalRepr {
    fn from(r: Rational64) -> Self {
        Self {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

impl TryFrom<RationalRepr> for Rational64 {
    type Error = Error;

    fn try_from(r: RationalRepr) -> Result<Self> {
        if r.den == 0 {
            return Err(Error::InvalidArgument("rational with zero denominator".into()));
        }
        Ok(Rational64::new(r.num, r.den))
    }
}

pub(crate) fn serialize<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
    RationalRepr::from(*r).serialize(s)
}

pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational64, D::Error> {
    let repr = RationalRepr::deserialize(d)?;
    Rational64::try_from(repr).map_err(serde::de::Error::custom)
}

fn overflow() -> Error {
    Error::InvalidArgument("arithmetic overflow; inputs too large".into())
}

pub(crate) fn add(a: Rational64, b: Rational64) -> Result<Rational64> {
    a.checked_add(&b).ok_or_else(overflow)
}

pub(crate) fn sub(a: Rational64, b: Rational64) -> Result<Rational64> {
    a.checked_sub(&b).ok_or_else(overflow)
}

pub(crate) fn mul(a: Rational64, b: Rational64) -> Result<Rational64> {
    a.checked_mul(&b).ok_or_else(overflow)
}

pub(crate) fn int(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

/// Parses `"3"`, `"-1/2"` or `"7/4"`.
pub fn parse_rational(s: &str) -> Result<Rational64> {
    let bad = || Error::InvalidArgument(format!("expected an integer or fraction, got '{s}'"));
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<i64>().map(Rational64::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(n, d))
        }
    }
}
