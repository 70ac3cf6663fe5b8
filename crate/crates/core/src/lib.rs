//! Exact link invariants of closed braids and even plumbing trees, and the
//! genus inequalities that obstruct a link from bounding a piece of complex
//! algebraic curve in the 4-ball.
//!
//! The crate is organized bottom-up:
//!
//! * [`algebra`]: Laurent polynomials over `Z` in `(v, z)` and in `t`.
//! * [`braid`]: braid words, closures, Markov moves, quasipositive words.
//! * [`homfly`]: the HOMFLY polynomial and its v-valuation.
//! * [`seifert`]: Seifert matrices, signature, Alexander polynomial.
//! * [`plumbing`]: even planar trees and their arborescent links.
//! * [`obstruction`]: genus values and checkable certificates.

pub mod algebra;
pub mod braid;
mod error;
pub mod homfly;
pub mod obstruction;
pub mod plumbing;
pub mod seifert;

pub use error::{Error, Result};
pub use num_rational::Rational64;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/braids.md")]
    mod braids {}
    #[doc = include_str!("../../../book/src/homfly.md")]
    mod homfly {}
    #[doc = include_str!("../../../book/src/seifert.md")]
    mod seifert {}
    #[doc = include_str!("../../../book/src/plumbing.md")]
    mod plumbing {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
