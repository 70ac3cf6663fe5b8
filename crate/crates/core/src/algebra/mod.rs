//! Exact Laurent-polynomial arithmetic over the integers.
//!
//! [`LaurentPoly2`] lives in `Z[v^±1, z^±1]` and carries HOMFLY polynomials;
//! [`LaurentPoly1`] lives in `Z[t^±1]` and carries Alexander polynomials.
//! Both keep a canonical sparse form with no zero coefficients.

mod laurent1;
mod laurent2;
pub(crate) mod text;

pub use laurent1::LaurentPoly1;
pub use laurent2::LaurentPoly2;
