use num_complex::Complex64;
use qseries::{qpochhammer_multi, QBase};

use crate::error::OrthoError;
use crate::support::{positive_sqrt, recurrence_walk};

/// Parameter set (a, b, c) for the three-parameter subfamily obtained by
/// sending the fourth parameter of [`crate::AWParams`] to zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CDHParams {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub base: QBase,
}

impl CDHParams {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, base: QBase) -> Self {
        Self { a, b, c, base }
    }

    /// Recurrence coefficients of the orthonormal polynomials,
    ///
    /// ```text
    /// 2y P̃_n = α_n P̃_{n+1} + β_n P̃_n + α_{n-1} P̃_{n-1},
    /// α_n = √((1-q^{n+1})(1-ab q^n)(1-ac q^n)(1-bc q^n)),
    /// β_n = a + 1/a - (1-ab q^n)(1-ac q^n)/a - a (1-q^n)(1-bc q^{n-1}).
    /// ```
    ///
    /// Requires real parameters (the coefficients of a self-adjoint Jacobi
    /// operator); returns the pair (β_n, α_n).
    ///
    /// # Errors
    ///
    /// [`OrthoError::NegativeNorm`] when the radicand of α_n is negative,
    /// which happens outside the parameter regimes that admit an
    /// orthogonality measure.
    pub fn recurrence(&self, n: u32) -> Result<(f64, f64), OrthoError> {
        let q = self.base.get();
        let (a, b, c) = (self.a.re, self.b.re, self.c.re);
        let reality = self.a.im.abs() + self.b.im.abs() + self.c.im.abs();
        if reality > 1e-14 {
            return Err(OrthoError::NegativeNorm {
                context: "cdq_hahn recurrence with non-real parameters",
                value: Complex64::new(0.0, reality),
            });
        }
        let qn = q.powi(n as i32);
        let diag = a + 1.0 / a
            - (1.0 - a * b * qn) * (1.0 - a * c * qn) / a
            - a * (1.0 - qn) * (1.0 - b * c * qn / q);
        let radicand =
            (1.0 - q * qn) * (1.0 - a * b * qn) * (1.0 - a * c * qn) * (1.0 - b * c * qn);
        let off = positive_sqrt(Complex64::new(radicand, 0.0), "cdq_hahn recurrence")?;
        Ok((diag, off))
    }

    /// Coefficients (A_m, C_m) of the recurrence satisfied by the ₃φ₂ part,
    /// valid for complex parameters:
    ///
    /// ```text
    /// 2x u_m = A_m u_{m+1} + (a + 1/a - A_m - C_m) u_m + C_m u_{m-1},
    /// A_m = (1-abq^m)(1-acq^m)/a,     C_m = a (1-q^m)(1-bcq^{m-1}).
    /// ```
    pub fn classical_recurrence(&self, m: u32) -> (Complex64, Complex64) {
        let Self { a, b, c, base } = *self;
        let one = Complex64::new(1.0, 0.0);
        let qm = base.powi(m as i32);
        let upper = (one - a * b * qm) * (one - a * c * qm) / a;
        let lower = a * (one - qm) * (one - b * c * qm / base.get());
        (upper, lower)
    }

    /// Squared ratio between the orthonormal and the standard normalization.
    pub fn norm_ratio_squared(&self, n: u32) -> Result<Complex64, OrthoError> {
        let Self { a, b, c, base } = *self;
        let denom = qpochhammer_multi(
            &[Complex64::new(base.get(), 0.0), a * b, a * c, b * c],
            base,
            i64::from(n),
        )?;
        Ok(denom.inv())
    }
}

/// Polynomial of degree `n` in `x`, standard normalization
///
/// ```text
/// P_n(x; a,b,c | q) = a^{-n} (ab, ac; q)_n
///     · ₃φ₂(q^{-n}, a y, a/y; ab, ac; q, q),              x = μ(y).
/// ```
///
/// Symmetric under all permutations of (a, b, c). Walks the three-term
/// recurrence instead of summing the ₃φ₂, which the tests keep as a
/// low-degree oracle.
pub fn cdq_hahn(n: u32, x: Complex64, params: &CDHParams) -> Result<Complex64, OrthoError> {
    let CDHParams { a, b, base, .. } = *params;
    let head = qpochhammer_multi(&[a * b, a * params.c], base, i64::from(n))?
        * a.powi(-(n as i32));
    let walk = recurrence_walk(
        n,
        2.0 * x,
        |m| {
            let (upper, lower) = params.classical_recurrence(m);
            (upper, a + 1.0 / a - upper - lower, lower)
        },
        "three-parameter polynomial",
    )?;
    Ok(head * walk)
}

/// Orthonormal variant of [`cdq_hahn`]: the polynomial divided by
/// √((q, ab, ac, bc; q)_n).
///
/// # Errors
///
/// [`OrthoError::NegativeNorm`] when the squared normalization is not
/// positive real.
pub fn cdq_hahn_orthonormal(
    n: u32,
    x: Complex64,
    params: &CDHParams,
) -> Result<Complex64, OrthoError> {
    let factor = positive_sqrt(params.norm_ratio_squared(n)?, "cdq_hahn_orthonormal")?;
    Ok(cdq_hahn(n, x, params)? * factor)
}
