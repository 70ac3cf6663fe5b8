use std::fmt;

use num_rational::Rational64;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::rational::{self, add, int, mul, sub};
use crate::braid::QuasipositiveWord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenusKind {
    Exact,
    LowerBound,
    UpperBound,
}

impl GenusKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GenusKind::Exact => "exact",
            GenusKind::LowerBound => "lower-bound",
            GenusKind::UpperBound => "upper-bound",
        }
    }

    /// Usable where a lower bound is needed.
    pub fn bounds_below(self) -> bool {
        matches!(self, GenusKind::Exact | GenusKind::LowerBound)
    }

    /// Usable where an upper bound is needed.
    pub fn bounds_above(self) -> bool {
        matches!(self, GenusKind::Exact | GenusKind::UpperBound)
    }
}

/// A value of the Murasugi big genus `M(L)`, or a bound on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GenusRepr")]
pub struct GenusValue {
    #[serde(with = "rational")]
    value: Rational64,
    kind: GenusKind,
    provenance: String,
}

#[derive(Deserialize)]
struct GenusRepr {
    #[serde(with = "rational")]
    value: Rational64,
    kind: GenusKind,
    provenance: String,
}

impl TryFrom<GenusRepr> for GenusValue {
    type Error = Error;

    fn try_from(r: GenusRepr) -> Result<Self> {
        Self::new(r.value, r.kind, r.provenance)
    }
}

impl GenusValue {
    pub fn new(value: Rational64, kind: GenusKind, provenance: impl Into<String>) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::InvalidArgument(format!("genus value must be >= 0, got {value}")));
        }
        Ok(Self {
            value,
            kind,
            provenance: provenance.into(),
        })
    }

    pub fn exact(value: Rational64, provenance: impl Into<String>) -> Result<Self> {
        Self::new(value, GenusKind::Exact, provenance)
    }

    /// Negative values are clamped to 0, since `M >= 0` always.
    pub fn lower_bound(value: Rational64, provenance: impl Into<String>) -> Self {
        let value = value.max(int(0));
        Self {
            value,
            kind: GenusKind::LowerBound,
            provenance: provenance.into(),
        }
    }

    pub fn upper_bound(value: Rational64, provenance: impl Into<String>) -> Result<Self> {
        Self::new(value, GenusKind::UpperBound, provenance)
    }

    pub fn value(&self) -> Rational64 {
        self.value
    }

    pub fn kind(&self) -> GenusKind {
        self.kind
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub(crate) fn require_lower(&self, role: &str) -> Result<()> {
        if self.kind.bounds_below() {
            Ok(())
        } else {
            Err(Error::GenusKind(format!(
                "{role} must be exact or a lower bound, got {}",
                self.kind.as_str()
            )))
        }
    }

    pub(crate) fn require_upper(&self, role: &str) -> Result<()> {
        if self.kind.bounds_above() {
            Ok(())
        } else {
            Err(Error::GenusKind(format!(
                "{role} must be exact or an upper bound, got {}",
                self.kind.as_str()
            )))
        }
    }
}

impl fmt::Display for GenusValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.kind {
            GenusKind::Exact => "=",
            GenusKind::LowerBound => ">=",
            GenusKind::UpperBound => "<=",
        };
        write!(f, "M {rel} {}", self.value)
    }
}

/// `M = (r - n + k) / 2` for the closure of a quasipositive word with `k`
/// bands on `n` strands and `r` components. This is exact: the braided
/// surface is isotopic into a piece of algebraic curve, whose big genus is
/// minimal.
pub fn quasipositive_genus(q: &QuasipositiveWord) -> Result<GenusValue> {
    let r = q.expand().components() as i64;
    let n = q.strands() as i64;
    let k = q.band_count() as i64;
    let twice = r - n + k;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::InconsistentQuasipositive(format!(
            "r - n + k = {r} - {n} + {k} = {twice} must be even and nonnegative"
        )));
    }
    GenusValue::exact(
        Rational64::new(twice, 2),
        format!("quasipositive closure: (r - n + k)/2 with r = {r}, n = {n}, k = {k}"),
    )
}

/// `M(T(p, q)) = (p - 1)(q - 1) / 2`.
pub fn torus_genus(p: i64, q: i64) -> Result<GenusValue> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidArgument(format!(
            "torus genus needs p, q >= 2, got p = {p}, q = {q}"
        )));
    }
    let twice = mul(int(p - 1), int(q - 1))?;
    GenusValue::exact(twice / 2, format!("torus link T({p},{q}): (p-1)(q-1)/2"))
}

/// `M(L1 # L2) >= M(L1) + M(L2) - 1` for links concordant to C-boundaries.
pub fn connected_sum_bound(m1: &GenusValue, m2: &GenusValue) -> Result<GenusValue> {
    m1.require_lower("M(L1)")?;
    m2.require_lower("M(L2)")?;
    let v = sub(add(m1.value, m2.value)?, int(1))?;
    Ok(GenusValue::lower_bound(
        v,
        format!("connected sum: max(0, {} + {} - 1)", m1.value, m2.value),
    ))
}

/// Upper bound `|ω| M(K) + (t - |ω|)/2` on the genus of a satellite of `K`
/// with order `t` and winding number `ω` whose pattern is null-concordant.
pub fn shibuya_upper(m_k: &GenusValue, t: i64, omega: i64) -> Result<GenusValue> {
    m_k.require_upper("M(K)")?;
    check_satellite(t, omega)?;
    let w = omega.abs();
    let v = add(mul(int(w), m_k.value)?, Rational64::new(t - w, 2))?;
    GenusValue::upper_bound(
        v,
        format!("satellite bound: |w| M(K) + (t - |w|)/2 with t = {t}, w = {omega}"),
    )
}

pub(crate) fn check_satellite(t: i64, omega: i64) -> Result<()> {
    if t < 1 {
        return Err(Error::InvalidArgument(format!("order t must be >= 1, got {t}")));
    }
    if omega.unsigned_abs() > t.unsigned_abs() {
        return Err(Error::InvalidArgument(format!(
            "winding number |w| = {} exceeds order t = {t}",
            omega.abs()
        )));
    }
    if (t - omega).rem_euclid(2) != 0 {
        return Err(Error::InvalidArgument(format!(
            "order t = {t} and winding number w = {omega} must have the same parity"
        )));
    }
    Ok(())
}
