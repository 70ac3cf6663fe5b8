use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::text::{self, Cursor};
use crate::error::{Error, Result};

/// An element of `Z[t, t^-1]`, used for Alexander polynomials.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly1 {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(c.into(), e);
        p
    }

    /// Builds from `(coefficient, exponent)` pairs.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, i32)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (c, e) in terms {
            p.add_term(c.into(), e);
        }
        p
    }

    /// Dense coefficients `c_0 + c_1 t + ...` starting at exponent zero.
    pub fn from_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(coeffs.into_iter().zip(0..).map(|(c, e)| (c, e)))
    }

    pub fn add_term(&mut self, c: BigInt, e: i32) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// `p(1/t)`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Representative modulo units `±t^k`: lowest exponent 0 and positive
    /// leading coefficient. Zero stays zero.
    pub fn normalize_units(&self) -> Self {
        let Some(lo) = self.min_degree() else {
            return Self::zero();
        };
        let shifted = self.shift(-lo);
        let leading_negative = shifted
            .terms
            .values()
            .next_back()
            .is_some_and(|c| c.is_negative());
        if leading_negative {
            -shifted
        } else {
            shifted
        }
    }

    pub fn eval(&self, t: &BigInt) -> Option<BigInt> {
        let mut acc = BigInt::zero();
        for (&e, c) in &self.terms {
            if e < 0 {
                return None;
            }
            acc += c * num_traits::pow(t.clone(), e as usize);
        }
        Some(acc)
    }
}

impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (&e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => write!(f, "-{mag}")?,
                (0, false) => write!(f, "{mag}")?,
                (_, true) => write!(f, " - {mag}")?,
                (_, false) => write!(f, " + {mag}")?,
            }
            if e != 0 {
                write!(f, "*t^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly1({self})")
    }
}

impl FromStr for LaurentPoly1 {
    type Err = Error;

    /// Grammar: `term (("+"|"-") term)*`, `term = int ["*t^" int]`.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let mut p = Self::zero();
        let mut negate = false;
        loop {
            let c = cur.int()?;
            let e = if cur.eat_str("*t^") { cur.int()? } else { 0 };
            p.add_term(BigInt::from(if negate { -c } else { c }), text::exponent(e, &cur)?);
            if cur.eat('+') {
                negate = false;
            } else if cur.eat('-') {
                negate = true;
            } else {
                cur.expect_end()?;
                return Ok(p);
            }
        }
    }
}

impl Add for &LaurentPoly1 {
    type Output = LaurentPoly1;

    fn add(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(c.clone(), e);
        }
        out
    }
}

impl Neg for LaurentPoly1 {
    type Output = LaurentPoly1;

    fn neg(self) -> LaurentPoly1 {
        LaurentPoly1 {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub for &LaurentPoly1 {
    type Output = LaurentPoly1;

    fn sub(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        self + &(-rhs.clone())
    }
}

impl Mul for &LaurentPoly1 {
    type Output = LaurentPoly1;

    fn mul(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        let mut out = LaurentPoly1::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}
