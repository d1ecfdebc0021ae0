//! Orthogonality measures for the function families, together with the
//! quadrature needed to integrate against them.
//!
//! * [`aw_measure`] / [`cdh_measure`] / [`asc_measure`] — normalized
//!   measures of the polynomial families: a continuous density on
//!   x = cos θ plus finitely many atoms μ(e qᵏ) once one real parameter
//!   exceeds modulus one. One mass routine serves all three, degenerating
//!   smoothly as parameters vanish.
//! * [`asc_inverse_measure`] — the purely discrete unit-mass measure of
//!   the inverse-base family on the expanding lattice μ(a q^{−p}).
//! * [`lqjf_measure`] — the spectral measure of the two-sided function
//!   family: continuous part plus a bilateral atom lattice μ(q^{−j}/dr)
//!   of unbounded total mass.
//! * [`QuadratureRule`] — midpoint-in-θ and Gauss–Legendre rules on
//!   [0, π]; [`integrate`] couples a rule with a [`Measure`], and
//!   [`dm_sqrt_factor`] exposes the half-density factor that coupling
//!   kernels carry.
//!
//! Densities are kept in the angle variable with every normalization
//! constant folded in, so a family orthonormal with respect to its
//! measure has Gram matrix exactly the identity under [`integrate`].

mod ascmeas;
mod aw;
mod error;
mod lqjf;
mod measure;
mod quadrature;

pub use ascmeas::asc_inverse_measure;
pub use aw::{asc_measure, aw_measure, cdh_measure};
pub use error::MeasureError;
pub use lqjf::lqjf_measure;
pub use measure::{dm_sqrt_factor, integrate, Atom, Density, Measure};
pub use quadrature::QuadratureRule;

pub use num_complex::Complex64;
