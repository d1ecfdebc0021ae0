use num_complex::Complex64;

use crate::error::OrthoError;

/// Relative tolerance for deciding that a computed quantity which must be
/// real has only numerical dust in its imaginary part.
pub(crate) const REALITY_RTOL: f64 = 1e-9;

/// Square root of a quantity that is positive real up to rounding noise.
///
/// Normalization constants and recurrence radicands are assembled from
/// complex products; when the parameters come in conjugate pairs the result
/// is real in exact arithmetic. Anything with a genuinely negative real part
/// or a non-negligible imaginary part is rejected.
pub(crate) fn positive_sqrt(v: Complex64, context: &'static str) -> Result<f64, OrthoError> {
    let scale = v.norm().max(1e-300);
    if v.im.abs() > REALITY_RTOL * scale || v.re <= 0.0 {
        return Err(OrthoError::NegativeNorm { context, value: v });
    }
    Ok(v.re.sqrt())
}

/// Real part of a quantity that must be real up to rounding noise.
pub(crate) fn real_part(v: Complex64, context: &'static str) -> Result<f64, OrthoError> {
    let scale = v.norm().max(1e-300);
    if v.im.abs() > REALITY_RTOL * scale {
        return Err(OrthoError::NegativeNorm { context, value: v });
    }
    Ok(v.re)
}

/// Degree-`n` value of the solution of the three-term recurrence
///
/// ```text
/// 2x u_m = A_m u_{m+1} + b_m u_m + C_m u_{m-1},    u_{-1} = 0, u_0 = 1,
/// ```
///
/// walked upward. Summing the terminating hypergeometric form instead loses
/// a couple of digits per degree to cancellation between terms that grow
/// like q^{-m²/4}, so every polynomial evaluator routes through this walk
/// and keeps the series form as a low-degree oracle in its tests.
pub(crate) fn recurrence_walk<F>(
    n: u32,
    two_x: Complex64,
    mut coeffs: F,
    context: &'static str,
) -> Result<Complex64, OrthoError>
where
    F: FnMut(u32) -> (Complex64, Complex64, Complex64),
{
    let mut prev = Complex64::new(0.0, 0.0);
    let mut cur = Complex64::new(1.0, 0.0);
    for m in 0..n {
        let (a_m, b_m, c_m) = coeffs(m);
        if a_m.norm() < 1e-250 {
            return Err(OrthoError::DegenerateRecurrence { context, degree: m });
        }
        let next = ((two_x - b_m) * cur - c_m * prev) / a_m;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
