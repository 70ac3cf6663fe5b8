//! Braid words, their closures, Markov moves and quasipositive factorizations.
//!
//! Text forms: `B<n>: g1 g2 ...` for braid words and
//! `QP<n>: (w | i) (w | i) ...` for quasipositive words, where each band
//! `(w | i)` stands for `w σ_i w^-1`.

mod perm;
mod quasipositive;
mod word;

pub use perm::{ClosureInfo, Permutation};
pub use quasipositive::{Band, QuasipositiveWord};
pub use word::{BraidWord, Sign};
