use num_complex::Complex64;
use qseries::{qpochhammer, QBase};

use crate::error::OrthoError;
use crate::support::{positive_sqrt, real_part, recurrence_walk};

/// Parameter pair (a, b) for the two-parameter subfamily obtained by sending
/// the last two parameters of [`crate::AWParams`] to zero.
///
/// With `inverse_base` set, the family lives in base 1/q > 1 while `base`
/// still stores q itself; all evaluation is rewritten into base-q arithmetic
/// internally. The inverse-base family is an orthogonal polynomial system
/// only when its moment problem is determinate, which the constructor
/// enforces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ASCParams {
    pub a: Complex64,
    pub b: Complex64,
    pub base: QBase,
    pub inverse_base: bool,
}

impl ASCParams {
    pub fn new(a: Complex64, b: Complex64, base: QBase) -> Self {
        Self { a, b, base, inverse_base: false }
    }

    /// Inverse-base family with real parameters.
    ///
    /// # Errors
    ///
    /// [`OrthoError::IndeterminateMoments`] unless (with |a| ≥ |b| after
    /// relabelling) a ≠ b and |b/a| ≤ q: outside that range the moment
    /// problem has many solutions and no canonical orthogonality measure.
    pub fn inverse_base(a: f64, b: f64, base: QBase) -> Result<Self, OrthoError> {
        let (hi, lo) = if a.abs() >= b.abs() { (a, b) } else { (b, a) };
        if a == b || lo.abs() > base.get() * hi.abs() {
            return Err(OrthoError::IndeterminateMoments { a, b });
        }
        Ok(Self {
            a: Complex64::new(a, 0.0),
            b: Complex64::new(b, 0.0),
            base,
            inverse_base: true,
        })
    }

    /// Recurrence coefficients (β_n, α_n) of the orthonormal polynomials,
    ///
    /// ```text
    /// 2y s̃_n = α_n s̃_{n+1} + β_n s̃_n + α_{n-1} s̃_{n-1},
    /// β_n = q^n (a + b),        α_n = √((1-q^{n+1})(1-ab q^n)),
    /// ```
    ///
    /// with q replaced by 1/q throughout for the inverse-base family (both
    /// radicand factors are then negative, so the product stays positive).
    ///
    /// # Errors
    ///
    /// [`OrthoError::NegativeNorm`] for non-real coefficients or a negative
    /// radicand.
    pub fn recurrence(&self, n: u32) -> Result<(f64, f64), OrthoError> {
        let q = if self.inverse_base { 1.0 / self.base.get() } else { self.base.get() };
        let qn = q.powi(n as i32);
        let ab = real_part(self.a * self.b, "asc recurrence parameter product")?;
        let sum = real_part(self.a + self.b, "asc recurrence parameter sum")?;
        let diag = qn * sum;
        let radicand = (1.0 - q * qn) * (1.0 - ab * qn);
        let off = positive_sqrt(Complex64::new(radicand, 0.0), "asc recurrence")?;
        Ok((diag, off))
    }

    /// Monic-normalized value chain used for the inverse-base family:
    /// returns P_n evaluated at 2x, where
    ///
    /// ```text
    /// (1 - q^{j+1}) P_{j+1}(y) = (a + b - y q^j) P_j(y) - (ab - q^{j-1}) P_{j-1}(y).
    /// ```
    fn determinate_walk(&self, n: u32, x: Complex64) -> Complex64 {
        let q = self.base.get();
        let (a, b) = (self.a, self.b);
        let two_x = 2.0 * x;
        let mut prev = Complex64::new(0.0, 0.0);
        let mut cur = Complex64::new(1.0, 0.0);
        let mut qj = 1.0_f64;
        for _ in 0..n {
            let next = ((a + b - two_x * qj) * cur
                - (a * b - Complex64::new(qj / q, 0.0)) * prev)
                / (1.0 - q * qj);
            prev = cur;
            cur = next;
            qj *= q;
        }
        cur
    }
}

/// Polynomial of degree `n` in `x`, standard normalization.
///
/// Base-q family:
///
/// ```text
/// s_n(x; a,b | q) = a^{-n} (ab; q)_n ₃φ₂(q^{-n}, a y, a/y; ab, 0; q, q),   x = μ(y).
/// ```
///
/// Inverse-base family (written in base-q arithmetic):
///
/// ```text
/// s_n(x; a,b | 1/q) = (-1)^n q^{-n(n-1)/2} (q; q)_n P_n(2x).
/// ```
///
/// Both paths walk a three-term recurrence; the terminating ₃φ₂ form is kept
/// as a low-degree oracle in the tests.
pub fn asc(n: u32, x: Complex64, params: &ASCParams) -> Result<Complex64, OrthoError> {
    let base = params.base;
    if params.inverse_base {
        let q = base.get();
        let n_i = n as i32;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let head = sign
            * q.powi(-(n_i * (n_i - 1) / 2))
            * qpochhammer(Complex64::new(q, 0.0), base, i64::from(n))?;
        return Ok(head * params.determinate_walk(n, x));
    }
    let ASCParams { a, b, .. } = *params;
    let one = Complex64::new(1.0, 0.0);
    let head = qpochhammer(a * b, base, i64::from(n))? * a.powi(-(n as i32));
    let walk = recurrence_walk(
        n,
        2.0 * x,
        |m| {
            let qm = base.powi(m as i32);
            let upper = (one - a * b * qm) / a;
            let lower = a * (one - qm);
            (upper, a + 1.0 / a - upper - lower, lower)
        },
        "two-parameter polynomial",
    )?;
    Ok(head * walk)
}

/// Orthonormal variant of [`asc`]: s̃_n = s_n / √((q, ab; q)_n), with q
/// read as 1/q for the inverse-base family.
///
/// # Errors
///
/// [`OrthoError::NegativeNorm`] when the squared normalization is not
/// positive real (for the inverse-base family this requires ab > 1).
pub fn asc_orthonormal(n: u32, x: Complex64, params: &ASCParams) -> Result<Complex64, OrthoError> {
    let base = params.base;
    let n_i = i64::from(n);
    if params.inverse_base {
        let q = base.get();
        let ab = params.a * params.b;
        let ratio = qpochhammer(Complex64::new(q, 0.0), base, n_i)?
            / qpochhammer(ab.inv(), base, n_i)?;
        let factor = positive_sqrt(ratio, "asc_orthonormal inverse base")?
            * (q / ab.norm()).powf(0.5 * f64::from(n));
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let ab_sign = real_part(ab, "asc_orthonormal parameter product")?;
        if ab_sign <= 0.0 {
            return Err(OrthoError::NegativeNorm {
                context: "asc_orthonormal inverse base",
                value: ab,
            });
        }
        return Ok(sign * factor * params.determinate_walk(n, x));
    }
    let norm = qpochhammer(Complex64::new(base.get(), 0.0), base, n_i)?
        * qpochhammer(params.a * params.b, base, n_i)?;
    let factor = positive_sqrt(norm, "asc_orthonormal")?;
    Ok(asc(n, x, params)? / factor)
}
