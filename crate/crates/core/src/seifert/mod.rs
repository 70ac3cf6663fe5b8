//! Seifert matrices and the invariants read off them: signature, Alexander
//! polynomial, determinant and nullity.
//!
//! Matrices come from braided surfaces ([`bennequin_seifert_matrix`]) or from
//! plumbing trees ([`crate::plumbing::tree_seifert_matrix`]). The basis is
//! construction-dependent, so only congruence invariants are meaningful.
//! All arithmetic is exact.
//!
//! ```
//! use cbord_core::braid::BraidWord;
//! use cbord_core::seifert::{alexander, bennequin_seifert_matrix, signature};
//!
//! let trefoil: BraidWord = "B2: 1 1 1".parse().unwrap();
//! let v = bennequin_seifert_matrix(&trefoil);
//! assert_eq!(signature(&v), -2);
//! assert_eq!(alexander(&v).to_string(), "1 - 1*t^1 + 1*t^2");
//! ```

mod linalg;
mod surface;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::LaurentPoly1;
use crate::braid::BraidWord;

/// Where a Seifert matrix came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "text", rename_all = "snake_case")]
pub enum SeifertSource {
    Braid(String),
    Tree(String),
    Explicit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
    source: SeifertSource,
}

impl SeifertMatrix {
    /// # Panics
    /// If `entries` is not square.
    pub fn new(entries: Vec<Vec<i64>>, source: SeifertSource) -> Self {
        let m = entries.len();
        assert!(entries.iter().all(|row| row.len() == m), "Seifert matrix must be square");
        Self { entries, source }
    }

    pub fn explicit(entries: Vec<Vec<i64>>) -> Self {
        Self::new(entries, SeifertSource::Explicit)
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn source(&self) -> &SeifertSource {
        &self.source
    }

    /// First Betti number of the surface.
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn transpose(&self) -> Self {
        Self {
            entries: linalg::transpose(&self.entries),
            source: self.source.clone(),
        }
    }

    /// `V + V^T`.
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        linalg::symmetrize(&self.entries)
    }
}

/// Seifert matrix of the braided surface of the closure of `b`.
///
/// Levels with no letter leave the surface disconnected; each contributes a
/// zero row and column (the tube joining the pieces).
pub fn bennequin_seifert_matrix(b: &BraidWord) -> SeifertMatrix {
    SeifertMatrix::new(
        surface::braid_seifert_entries(b),
        SeifertSource::Braid(b.to_string()),
    )
}

/// Signature of `V + V^T`.
pub fn signature(v: &SeifertMatrix) -> i64 {
    let (pos, neg, _) = linalg::inertia(&v.symmetrized());
    pos as i64 - neg as i64
}

/// `det(V - t V^T)` normalized to lowest exponent 0 and positive leading
/// coefficient.
pub fn alexander(v: &SeifertMatrix) -> LaurentPoly1 {
    alexander_raw(v).normalize_units()
}

/// `det(V - t V^T)` exactly, without normalization.
pub fn alexander_raw(v: &SeifertMatrix) -> LaurentPoly1 {
    linalg::alexander_determinant(&v.entries)
}

/// `(det(V + V^T), dim ker(V + V^T))`.
pub fn determinant_and_nullity(v: &SeifertMatrix) -> (BigInt, usize) {
    let sym = v.symmetrized();
    let det = linalg::determinant(&linalg::to_big(&sym));
    let (_, _, zero) = linalg::inertia(&sym);
    (det, zero)
}

pub fn is_alexander_trivial(v: &SeifertMatrix) -> bool {
    alexander(v).is_one()
}
