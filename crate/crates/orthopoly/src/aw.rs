use num_complex::Complex64;
use qseries::{qpochhammer, qpochhammer_multi, QBase};

use crate::error::OrthoError;
use crate::support::{positive_sqrt, real_part, recurrence_walk};

/// Parameter set (a, b, c, d) and base for the four-parameter family at the
/// top of the basic hypergeometric scheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AWParams {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
    pub base: QBase,
}

impl AWParams {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64, base: QBase) -> Self {
        Self { a, b, c, d, base }
    }

    /// Product of all four parameters.
    pub fn abcd(&self) -> Complex64 {
        self.a * self.b * self.c * self.d
    }

    /// Squared ratio between the orthonormal and the standard normalization
    /// of the degree-`n` polynomial; the last denominator entry is the
    /// n-dependent (abcd q^{n-1}; q)_n.
    pub fn norm_ratio_squared(&self, n: u32) -> Result<Complex64, OrthoError> {
        let Self { a, b, c, d, base } = *self;
        let abcd = self.abcd();
        let shifted = abcd * base.powi(n as i32 - 1);
        let n = i64::from(n);
        let numer = qpochhammer(abcd, base, 2 * n)?;
        let denom = qpochhammer_multi(
            &[
                Complex64::new(base.get(), 0.0),
                a * b,
                a * c,
                a * d,
                b * c,
                b * d,
                c * d,
            ],
            base,
            n,
        )? * qpochhammer(shifted, base, n)?;
        Ok(numer / denom)
    }

    /// Coefficients (A_m, C_m) of the three-term recurrence satisfied by the
    /// ₄φ₃ part of the polynomial,
    ///
    /// ```text
    /// 2x u_m = A_m u_{m+1} + (a + 1/a - A_m - C_m) u_m + C_m u_{m-1},
    ///
    /// A_m = (1-abq^m)(1-acq^m)(1-adq^m)(1-abcdq^{m-1})
    ///       / (a (1-abcdq^{2m-1})(1-abcdq^{2m})),
    /// C_m = a (1-q^m)(1-bcq^{m-1})(1-bdq^{m-1})(1-cdq^{m-1})
    ///       / ((1-abcdq^{2m-2})(1-abcdq^{2m-1})).
    /// ```
    pub fn classical_recurrence(&self, m: u32) -> (Complex64, Complex64) {
        let Self { a, b, c, d, base } = *self;
        let one = Complex64::new(1.0, 0.0);
        let qm = base.powi(m as i32);
        let abcd = self.abcd();
        let upper = (one - a * b * qm) * (one - a * c * qm) * (one - a * d * qm)
            * (one - abcd * qm / base.get())
            / (a * (one - abcd * qm * qm / base.get()) * (one - abcd * qm * qm));
        let lower = if m == 0 {
            Complex64::new(0.0, 0.0)
        } else {
            let qm1 = qm / base.get();
            a * (one - qm) * (one - b * c * qm1) * (one - b * d * qm1) * (one - c * d * qm1)
                / ((one - abcd * qm1 * qm1) * (one - abcd * qm * qm1))
        };
        (upper, lower)
    }

    /// Diagonal and off-diagonal Jacobi-matrix entries of the orthonormal
    /// family, `2x p̃_n = off_n p̃_{n+1} + diag_n p̃_n + off_{n-1} p̃_{n-1}`.
    ///
    /// # Errors
    ///
    /// [`OrthoError::NegativeNorm`] when the entries fail to be real
    /// (respectively positive under the square root), i.e. outside an
    /// orthogonality regime.
    pub fn recurrence(&self, n: u32) -> Result<(f64, f64), OrthoError> {
        let (upper_n, lower_n) = self.classical_recurrence(n);
        let (_, lower_next) = self.classical_recurrence(n + 1);
        let diag = real_part(
            self.a + 1.0 / self.a - upper_n - lower_n,
            "four-parameter recurrence diagonal",
        )?;
        let off = positive_sqrt(upper_n * lower_next, "four-parameter recurrence")?;
        Ok((diag, off))
    }
}

/// Polynomial of degree `n` in `x`, standard normalization
///
/// ```text
/// p_n(x; a,b,c,d | q) = a^{-n} (ab, ac, ad; q)_n
///     · ₄φ₃(q^{-n}, abcd q^{n-1}, a y, a/y; ab, ac, ad; q, q),      x = μ(y).
/// ```
///
/// The value is symmetric under all permutations of (a, b, c, d). Evaluation
/// walks the three-term recurrence rather than summing the ₄φ₃, which keeps
/// full precision at degrees where the terminating sum cancels badly.
///
/// # Errors
///
/// [`OrthoError::DegenerateRecurrence`] when a recurrence coefficient
/// vanishes, e.g. when some pairwise parameter product hits an inverse power
/// of the base.
pub fn askey_wilson(n: u32, x: Complex64, params: &AWParams) -> Result<Complex64, OrthoError> {
    let AWParams { a, b, c, d, base } = *params;
    let head = qpochhammer_multi(&[a * b, a * c, a * d], base, i64::from(n))?
        * a.powi(-(n as i32));
    let walk = recurrence_walk(
        n,
        2.0 * x,
        |m| {
            let (upper, lower) = params.classical_recurrence(m);
            (upper, a + 1.0 / a - upper - lower, lower)
        },
        "four-parameter polynomial",
    )?;
    Ok(head * walk)
}

/// Orthonormal variant of [`askey_wilson`].
///
/// # Errors
///
/// [`OrthoError::NegativeNorm`] when the squared normalization is not
/// positive real, i.e. the parameters are outside an orthogonality regime.
pub fn askey_wilson_orthonormal(
    n: u32,
    x: Complex64,
    params: &AWParams,
) -> Result<Complex64, OrthoError> {
    let factor = positive_sqrt(params.norm_ratio_squared(n)?, "askey_wilson_orthonormal")?;
    Ok(askey_wilson(n, x, params)? * factor)
}
