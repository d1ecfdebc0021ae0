use num_complex::Complex64;

use crate::error::QSeriesError;

/// Joukowski midpoint map `(y + 1/y) / 2`.
///
/// Maps the unit circle onto [−1, 1] (with `e^{iθ} ↦ cos θ`) and real y with
/// |y| > 1 onto points outside [−1, 1], which is where orthogonality measures
/// place their discrete mass.
///
/// # Errors
///
/// [`QSeriesError::Pole`] at y = 0.
pub fn mu(y: Complex64) -> Result<Complex64, QSeriesError> {
    if y.norm() == 0.0 {
        return Err(QSeriesError::Pole { a: y, index: 0 });
    }
    Ok((y + y.inv()) * 0.5)
}

/// Inverse of the Joukowski map into the closed unit disk.
///
/// Returns the root of `e² − 2xe + 1 = 0` with |e| ≤ 1; when both roots lie on
/// the unit circle (x real in [−1, 1]) the tie is broken toward nonnegative
/// imaginary part, so real x ∈ [−1, 1] resolves to `e^{iθ}` with θ ∈ [0, π].
///
/// The root of larger modulus is formed first, by the sign of x ± √(x²−1)
/// that adds rather than cancels, and the small root is its exact
/// reciprocal (the two roots multiply to 1) — far from the circle the naive
/// difference would lose half the mantissa, which is fatal for callers that
/// reconstruct lattice points q^-j from x.
#[must_use]
pub fn joukowski_inverse(x: Complex64) -> Complex64 {
    let d = (x * x - 1.0).sqrt();
    let big = if x.re * d.re + x.im * d.im >= 0.0 {
        x + d
    } else {
        x - d
    };
    let small = big.inv();
    let (n1, n2) = (big.norm(), small.norm());
    if (n1 - n2).abs() <= 1e-12 * (n1 + n2) {
        if big.im >= small.im {
            big
        } else {
            small
        }
    } else {
        small
    }
}
