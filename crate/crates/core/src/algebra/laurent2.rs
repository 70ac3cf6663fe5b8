use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::text::{self, Cursor};
use crate::error::{Error, Result};

/// An element of `Z[v, v^-1, z, z^-1]`.
///
/// Terms are kept in canonical form: a coefficient is never stored as zero,
/// so structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    // keyed by (v-exponent, z-exponent)
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `c * v^a * z^b`.
    pub fn monomial(c: impl Into<BigInt>, a: i32, b: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(c.into(), a, b);
        p
    }

    pub fn v() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn z() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Builds a polynomial from `(coefficient, v-exponent, z-exponent)` triples,
    /// summing repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, i32, i32)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (c, a, b) in terms {
            p.add_term(c.into(), a, b);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: i32, b: i32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    /// Iterates `(v-exponent, z-exponent, coefficient)` in (v, z) order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, &BigInt)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn add_term(&mut self, c: BigInt, a: i32, b: i32) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    /// The v-valuation: smallest v-exponent occurring.
    pub fn ord_v(&self) -> Result<i32> {
        self.terms
            .keys()
            .map(|&(a, _)| a)
            .min()
            .ok_or(Error::ZeroValuation)
    }

    /// Largest v-exponent occurring.
    pub fn maxdeg_v(&self) -> Result<i32> {
        self.terms
            .keys()
            .map(|&(a, _)| a)
            .max()
            .ok_or(Error::ZeroValuation)
    }

    pub fn min_z(&self) -> Option<i32> {
        self.terms.keys().map(|&(_, b)| b).min()
    }

    pub fn max_z(&self) -> Option<i32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    /// The coefficient `g_i(z)` of `v^i`, as `(z-exponent, coefficient)` pairs.
    pub fn v_slice(&self, i: i32) -> Vec<(i32, BigInt)> {
        self.terms
            .range((i, i32::MIN)..=(i, i32::MAX))
            .map(|(&(_, b), c)| (b, c.clone()))
            .collect()
    }

    /// `p(v^-1, -z)`: the polynomial of the mirror image.
    pub fn substitute_mirror(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(a, b), c)| {
                let c = if b.rem_euclid(2) == 1 { -c } else { c.clone() };
                ((-a, b), c)
            })
            .collect();
        Self { terms }
    }

    /// Multiplies by `sign * v^a * z^b` without a full product.
    pub fn shifted(&self, negate: bool, a: i32, b: i32) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(x, y), c)| ((x + a, y + b), if negate { -c } else { c.clone() }))
            .collect();
        Self { terms }
    }

    /// `self += sign * v^a * z^b * other`.
    pub fn add_shifted(&mut self, other: &Self, negate: bool, a: i32, b: i32) {
        for (&(x, y), c) in &other.terms {
            let c = if negate { -c } else { c.clone() };
            self.add_term(c, x + a, y + b);
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Terms in canonical print order: z-exponent ascending, then v-exponent ascending.
    fn print_order(&self) -> Vec<(i32, i32, &BigInt)> {
        let mut out: Vec<_> = self.terms().collect();
        out.sort_by_key(|&(a, b, _)| (b, a));
        out
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (a, b, c)) in self.print_order().into_iter().enumerate() {
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => write!(f, "-{mag}")?,
                (0, false) => write!(f, "{mag}")?,
                (_, true) => write!(f, " - {mag}")?,
                (_, false) => write!(f, " + {mag}")?,
            }
            if a != 0 {
                write!(f, "*v^{a}")?;
            }
            if b != 0 {
                write!(f, "*z^{b}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly2({self})")
    }
}

impl FromStr for LaurentPoly2 {
    type Err = Error;

    /// Grammar: `term (("+"|"-") term)*`, `term = int ["*v^" int] ["*z^" int]`.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let mut p = Self::zero();
        let mut negate = false;
        loop {
            let c = cur.int()?;
            let a = if cur.eat_str("*v^") { cur.int()? } else { 0 };
            let b = if cur.eat_str("*z^") { cur.int()? } else { 0 };
            let c = BigInt::from(if negate { -c } else { c });
            p.add_term(c, text::exponent(a, &cur)?, text::exponent(b, &cur)?);
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

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;

    fn add(mut self, rhs: LaurentPoly2) -> LaurentPoly2 {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        for (&(a, b), c) in &rhs.terms {
            self.add_term(c.clone(), a, b);
        }
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn neg(self) -> LaurentPoly2 {
        self.shifted(true, 0, 0)
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;

    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out.add_shifted(rhs, true, 0, 0);
        out
    }
}

impl Sub for LaurentPoly2 {
    type Output = LaurentPoly2;

    fn sub(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(c1 * c2, a1 + a2, b1 + b2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly2 {
    type Output = LaurentPoly2;

    fn mul(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self * &rhs
    }
}
