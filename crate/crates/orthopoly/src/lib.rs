//! Orthogonal function families built on the basic hypergeometric engine.
//!
//! * [`askey_wilson`] / [`askey_wilson_orthonormal`] — four-parameter
//!   polynomials on [-1, 1], symmetric in all four parameters.
//! * [`cdq_hahn`] / [`cdq_hahn_orthonormal`] — the three-parameter
//!   continuous dual family, with its three-term recurrence exposed for
//!   building Jacobi matrices.
//! * [`asc`] / [`asc_orthonormal`] — the two-parameter Al-Salam–Chihara
//!   family in base q or base 1/q; the inverse-base variant is evaluated
//!   through a stable polynomial walk and guards against indeterminate
//!   moment problems.
//! * [`little_qjacobi_poly`] / [`little_qjacobi_fn`] — the little
//!   q-Jacobi polynomials on the grid q^p and the associated two-sided
//!   function family indexed by n ∈ ℤ, including its phase convention and
//!   recurrence.
//!
//! Evaluators taking a point `x` interpret it as μ(y) = (y + 1/y)/2 and
//! recover y internally, so both the interval and the discrete spectrum
//! accept the same call. Orthonormal variants return errors instead of
//! complex norms when parameters leave the positive-definite regime.

mod asc;
mod aw;
mod cdh;
mod error;
mod lqjacobi;
mod support;

pub use asc::{asc, asc_orthonormal, ASCParams};
pub use aw::{askey_wilson, askey_wilson_orthonormal, AWParams};
pub use cdh::{cdq_hahn, cdq_hahn_orthonormal, CDHParams};
pub use error::OrthoError;
pub use lqjacobi::{
    little_qjacobi_fn, little_qjacobi_orthonormal, little_qjacobi_poly, little_qjacobi_weight,
    LQJFParams,
};
