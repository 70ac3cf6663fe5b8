//! Obstructions to bounding complex curves, packaged as checkable
//! certificates.
//!
//! Two families live here. The valuation tests compare `ord_v P_L` with the
//! Murasugi big genus `M(L)` and decide whether `L` can be an
//! spc-C-boundary. The concordance certificates do the arithmetic of the
//! connected-sum inequality `M(L1 # L2) >= M(L1) + M(L2) - 1` for connected
//! sums, band sums, satellites, cables and Whitehead doubles.
//!
//! Every genus input carries a [`GenusKind`], and each rule checks that the
//! kind fits the direction of the inequality it needs.
//!
//! ```
//! use cbord_core::braid::BraidWord;
//! use cbord_core::homfly::homfly;
//! use cbord_core::obstruction::{spc_test, GenusValue, Verdict};
//! use num_rational::Rational64;
//!
//! let left: BraidWord = "B2: -1 -1 -1".parse().unwrap();
//! let p = homfly(&left).unwrap();
//! let m = GenusValue::exact(Rational64::from_integer(1), "trefoil").unwrap();
//! let cert = spc_test(&p, &m).unwrap();
//! assert_eq!(cert.verdict, Verdict::Obstructed);
//! assert!(cert.recheck().unwrap());
//! ```

mod certificate;
mod genus;
pub(crate) mod rational;
mod rules;

pub use certificate::{Certificate, Quantity, Rule, Verdict};
pub(crate) use certificate::Draft;
pub use genus::{connected_sum_bound, quasipositive_genus, shibuya_upper, torus_genus, GenusKind, GenusValue};
pub use rational::{parse_rational, RationalRepr};
pub use rules::{
    cor16_order, cor19_mirror, cor26_certificate, cor27_certificate, cor33_test, cor34_test,
    prop14_certificate, spc_test, thm23_certificate, thm25_certificate,
};
