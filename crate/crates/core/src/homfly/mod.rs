//! HOMFLY polynomial of closed braids in the `(v, z)` convention
//!
//! ```text
//! P(unknot) = 1,    P(L+) = vz P(L0) + v^2 P(L-)
//! ```
//!
//! where a positive letter `σ_i` is the `L+` crossing. Evaluation first
//! applies closure-preserving reductions (cyclic free reduction, splitting
//! along an unused generator, destabilization at either end) and then runs the
//! Hecke-algebra trace in [`hecke`] on what remains. The [`Budget`] is charged
//! against the reduced word only.

mod hecke;

use std::fmt;
use std::str::FromStr;

use crate::algebra::LaurentPoly2;
use crate::braid::BraidWord;
use crate::error::{Error, Result};

pub use hecke::delta as split_factor;
use hecke::TraceTable;

/// Resource limits for the Hecke evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_strands: usize,
    pub max_letters: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_strands: 8,
            max_letters: 40,
        }
    }
}

impl Budget {
    /// Environment variable read by [`Budget::from_env`].
    pub const ENV_VAR: &'static str = "CBORD_BUDGET";
}

impl FromStr for Budget {
    type Err = Error;

    /// `"<strands>,<letters>"`, e.g. `"8,40"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let bad = || Error::InvalidArgument(format!("budget must look like '8,40', got '{s}'"));
        match parts.as_slice() {
            [a, b] => Ok(Self {
                max_strands: a.parse().map_err(|_| bad())?,
                max_letters: b.parse().map_err(|_| bad())?,
            }),
            _ => Err(bad()),
        }
    }
}

impl Budget {
    /// Reads [`Budget::ENV_VAR`]; the default applies when it is unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::ENV_VAR) {
            Ok(s) => s.parse(),
            Err(_) => Ok(Self::default()),
        }
    }

    fn check(&self, strands: usize, letters: usize) -> Result<()> {
        if strands > self.max_strands || letters > self.max_letters {
            return Err(Error::BudgetExceeded {
                strands,
                letters,
                max_strands: self.max_strands,
                max_letters: self.max_letters,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomflyResult {
    pub polynomial: LaurentPoly2,
    pub ord_v: i32,
    pub maxdeg_v: i32,
    pub components: usize,
}

impl HomflyResult {
    fn new(polynomial: LaurentPoly2, components: usize) -> Self {
        // the HOMFLY polynomial of a link is never zero
        let ord_v = polynomial.ord_v().expect("nonzero HOMFLY polynomial");
        let maxdeg_v = polynomial.maxdeg_v().expect("nonzero HOMFLY polynomial");
        Self {
            polynomial,
            ord_v,
            maxdeg_v,
            components,
        }
    }

    /// Every z-exponent is congruent to `r - 1` mod 2 and at least `-(r - 1)`.
    pub fn z_exponents_consistent(&self) -> bool {
        let floor = -(self.components as i32 - 1);
        self.polynomial
            .terms()
            .all(|(_, b, _)| (b - floor).rem_euclid(2) == 0 && b >= floor)
    }
}

impl fmt::Display for HomflyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.polynomial)
    }
}

/// HOMFLY polynomial of the closure of `b` under the default budget.
pub fn homfly(b: &BraidWord) -> Result<HomflyResult> {
    homfly_with_budget(b, &Budget::default())
}

pub fn homfly_with_budget(b: &BraidWord, budget: &Budget) -> Result<HomflyResult> {
    let mut evaluator = Evaluator::new(*budget);
    let p = evaluator.evaluate(b)?;
    Ok(HomflyResult::new(p, b.components()))
}

/// Reusable evaluator; keeps the basis-trace table across calls.
#[derive(Debug)]
pub struct Evaluator {
    budget: Budget,
    table: TraceTable,
}

impl Evaluator {
    pub fn new(budget: Budget) -> Self {
        Self {
            budget,
            table: TraceTable::default(),
        }
    }

    pub fn homfly(&mut self, b: &BraidWord) -> Result<HomflyResult> {
        let p = self.evaluate(b)?;
        Ok(HomflyResult::new(p, b.components()))
    }

    pub fn evaluate(&mut self, b: &BraidWord) -> Result<LaurentPoly2> {
        self.reduce_and_trace(b.strands(), b.letters().to_vec())
    }

    /// The plain Hecke trace of the unreduced word; still budgeted.
    pub fn evaluate_unreduced(&mut self, b: &BraidWord) -> Result<LaurentPoly2> {
        self.budget.check(b.strands(), b.len())?;
        Ok(hecke::hecke_trace(b.strands(), b.letters(), &mut self.table))
    }

    fn reduce_and_trace(&mut self, mut n: usize, mut letters: Vec<i32>) -> Result<LaurentPoly2> {
        loop {
            letters = BraidWord::from_parts_unchecked(n, letters).cyclic_reduce().letters().to_vec();
            if n == 1 {
                debug_assert!(letters.is_empty());
                return Ok(LaurentPoly2::one());
            }
            let mut counts = vec![0usize; n];
            for g in &letters {
                counts[g.unsigned_abs() as usize] += 1;
            }
            if let Some(j) = (1..n).find(|&j| counts[j] == 0) {
                // generators below and above j commute: split union
                let j_i = j as i32;
                let lower: Vec<i32> = letters.iter().copied().filter(|g| g.abs() < j_i).collect();
                let upper: Vec<i32> = letters
                    .iter()
                    .filter(|g| g.abs() > j_i)
                    .map(|&g| g - g.signum() * j_i)
                    .collect();
                let a = self.reduce_and_trace(j, lower)?;
                let b = self.reduce_and_trace(n - j, upper)?;
                return Ok(&(&hecke::delta() * &a) * &b);
            }
            if counts[n - 1] == 1 {
                let top = n as i32 - 1;
                letters.retain(|g| g.abs() != top);
                n -= 1;
                continue;
            }
            if counts[1] == 1 {
                // conjugate by the half twist, destabilize, conjugate back
                letters.retain(|g| g.abs() != 1);
                for g in &mut letters {
                    *g -= g.signum();
                }
                n -= 1;
                continue;
            }
            self.budget.check(n, letters.len())?;
            return Ok(hecke::hecke_trace(n, &letters, &mut self.table));
        }
    }
}

/// Morton–Franks–Williams window `(e - n + 1, e + n - 1)` of a presentation.
pub fn mfw_bounds(b: &BraidWord) -> (i64, i64) {
    let e = b.writhe();
    let n = b.strands() as i64;
    (e - n + 1, e + n - 1)
}
