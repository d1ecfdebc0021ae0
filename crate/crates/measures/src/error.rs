use num_complex::Complex64;
use orthopoly::OrthoError;
use qseries::QSeriesError;
use thiserror::Error;

/// Errors produced while constructing measures or integrating against them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MeasureError {
    /// An underlying basic hypergeometric evaluation failed.
    #[error("series evaluation failed: {0}")]
    Series(#[from] QSeriesError),

    /// An orthogonal-family evaluation failed inside an integrand.
    #[error("orthogonal family evaluation failed: {0}")]
    Ortho(#[from] OrthoError),

    /// The parameters leave the regime where the measure is positive, or
    /// where its discrete part has a well-defined census.
    #[error("parameters leave the positive-measure regime: {message}")]
    Regime { message: String },

    /// The continuous density evaluated to something that is not a finite
    /// nonnegative real.
    #[error("density at theta = {theta} is not a nonnegative real: {value}")]
    NegativeDensity { theta: f64, value: Complex64 },

    /// A discrete mass came out non-real or non-positive.
    #[error("atom mass at x = {location} is not a positive real: {value}")]
    NegativeAtomMass { location: f64, value: Complex64 },

    /// The integrand failed at a quadrature node or at an atom.
    #[error("integrand failed at x = {x}: {source}")]
    Node {
        x: f64,
        #[source]
        source: Box<MeasureError>,
    },

    /// A point is neither inside [-1, 1] nor an atom of the measure, so it
    /// carries no measure element.
    #[error("x = {x} is neither in [-1, 1] nor an atom of this measure")]
    UnsupportedPoint { x: f64 },
}
