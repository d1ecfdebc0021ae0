use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by the series engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum QSeriesError {
    /// The deformation base must lie strictly inside the unit interval.
    #[error("base must satisfy 0 < q < 1, got {0}")]
    InvalidBase(f64),

    /// A product or quotient hit a vanishing factor where the value is
    /// genuinely singular (negative-index products, continuation prefactors,
    /// the midpoint map at the origin).
    #[error("pole encountered at factor index {index} (a = {a})")]
    Pole { a: Complex64, index: i64 },

    /// A nonterminating series was requested outside its convergence region.
    #[error("divergent series: r = {r}, s = {s}, |z| = {z_abs}")]
    Divergence { r: usize, s: usize, z_abs: f64 },

    /// A denominator parameter equals q^-m for an index m that the summation
    /// actually reaches.
    #[error("denominator parameter {param} equals q^-{m} inside the summation range")]
    ZeroDenominator { param: Complex64, m: usize },

    /// None of the transformations in the continuation table produces an
    /// absolutely convergent series for this argument.
    #[error("no continuation with a convergent argument for z = {z}")]
    Continuation { z: Complex64 },

    /// The term budget ran out before the tail met its tolerance.
    #[error("series did not converge within {terms} terms (last |term| = {last:.3e})")]
    Truncation { terms: usize, last: f64 },

    /// A nonfinite intermediate value (overflow or invalid operation).
    #[error("nonfinite value in {context}")]
    NonFinite { context: &'static str },
}
