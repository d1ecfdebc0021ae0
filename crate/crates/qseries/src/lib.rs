//! Numerical kernels for q-series over complex arguments.
//!
//! Everything downstream — orthogonal-function families, orthogonality
//! measures, identity harnesses — reduces to the evaluators in this crate:
//!
//! - [`qpochhammer`] / [`qpochhammer_inf`]: finite (any integer index) and
//!   infinite q-shifted factorials, plus `_multi` product forms.
//! - [`phi_rs`]: the general ᵣφₛ series with termination detection, the
//!   `((−1)^k q^{k(k−1)/2})^{1+s−r}` convention factor, and a
//!   three-consecutive-small-terms stopping rule.
//! - [`w_87`]: very-well-poised ₈W₇ in sum form (no √a₁ branch cuts).
//! - [`phi21_continued`]: ₂φ₁ continued past |z| = 1 through a table of
//!   three-term transformations.
//! - [`phi21_regularized`]: the entire-in-c combination `(c;q)_∞ · ₂φ₁`,
//!   needed where denominator parameters cross the pole grid q^-m.
//! - [`phi21_via_phi22`]: ₂φ₁ through an entire ₂φ₂ representation, stable
//!   on the lattice az = q^-M where the direct series cancels to nothing.
//! - [`mu`] / [`joukowski_inverse`]: the midpoint map `(y + 1/y)/2` and its
//!   unit-disk inverse, shared by every family evaluated at `x = cos θ`.
//!
//! All functions are pure; the base is a validated [`QBase`] strictly inside
//! (0, 1), and callers in effective base q² pass [`QBase::squared`].

mod base;
mod continuation;
mod error;
mod joukowski;
mod pochhammer;
mod series;
mod wseries;

pub use base::QBase;
pub use continuation::{phi21_continued, phi21_regularized, phi21_via_phi22};
pub use error::QSeriesError;
pub use joukowski::{joukowski_inverse, mu};
pub use pochhammer::{qpochhammer, qpochhammer_inf, qpochhammer_inf_multi, qpochhammer_multi};
pub use series::{phi21, phi_rs, SeriesSpec};
pub use wseries::w_87;

pub use num_complex::Complex64;
