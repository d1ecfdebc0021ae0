use num_complex::Complex64;
use qseries::QSeriesError;
use thiserror::Error;

/// Errors produced while evaluating orthogonal polynomials and functions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OrthoError {
    /// An underlying basic hypergeometric evaluation failed.
    #[error("series evaluation failed: {0}")]
    Series(#[from] QSeriesError),

    /// A squared normalization constant came out non-positive (or was not
    /// real to begin with), so no orthonormal form exists for these
    /// parameters.
    #[error("normalization for {context} is not positive: {value}")]
    NegativeNorm { context: &'static str, value: Complex64 },

    /// The inverse-base moment problem is indeterminate for these
    /// parameters, so the polynomials do not pin down a unique
    /// orthogonality measure.
    #[error("indeterminate moment problem for parameters a={a}, b={b}")]
    IndeterminateMoments { a: f64, b: f64 },

    /// The two defining expressions for a phase increment disagree, meaning
    /// the parameters are outside the regime where the function family is
    /// well defined.
    #[error("phase increment mismatch at index {index}: |Δ| = {gap:.3e}")]
    PhaseIncrement { index: i64, gap: f64 },

    /// A weight-function ratio that must be positive real failed to be so.
    #[error("weight ratio is not positive real: {value}")]
    WeightRatio { value: Complex64 },

    /// A recurrence step divides by a coefficient that vanished, so the
    /// family degenerates at this degree.
    #[error("recurrence for {context} degenerates at degree {degree}")]
    DegenerateRecurrence { context: &'static str, degree: u32 },
}
