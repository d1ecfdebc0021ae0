use num_complex::Complex64;

use crate::base::QBase;
use crate::error::QSeriesError;

/// Finite q-shifted factorial
///
/// ```text
/// (a; q)_n = ∏_{j=0}^{n-1} (1 − a q^j),        n ≥ 0,
/// (a; q)_{-m} = 1 / (a q^{-m}; q)_m,           m > 0.
/// ```
///
/// The negative-index extension is the standard reciprocal convention; it is
/// what makes mixed-index product formulas hold for all integer indices.
///
/// # Errors
///
/// [`QSeriesError::Pole`] when the negative-index extension divides by a
/// vanishing factor, i.e. when `a = q^i` for some `1 ≤ i ≤ m`.
pub fn qpochhammer(a: Complex64, base: QBase, n: i64) -> Result<Complex64, QSeriesError> {
    let q = base.get();
    if n >= 0 {
        let mut prod = Complex64::new(1.0, 0.0);
        let mut qj = 1.0_f64;
        for _ in 0..n {
            prod *= 1.0 - a * qj;
            qj *= q;
        }
        Ok(prod)
    } else {
        // (a;q)_{-m} = 1 / ∏_{i=1}^{m} (1 − a q^{-i})
        let qinv = 1.0 / q;
        let mut prod = Complex64::new(1.0, 0.0);
        let mut t = a;
        for i in 1..=(-n) {
            t *= qinv;
            let factor = 1.0 - t;
            if factor.norm() == 0.0 {
                return Err(QSeriesError::Pole { a, index: i });
            }
            prod *= factor;
        }
        Ok(prod.inv())
    }
}

/// Product of finite q-shifted factorials sharing one base and index:
/// `(a₁, …, a_k; q)_n = (a₁;q)_n ⋯ (a_k;q)_n`.
///
/// # Errors
///
/// As [`qpochhammer`], for the first offending parameter.
pub fn qpochhammer_multi(
    params: &[Complex64],
    base: QBase,
    n: i64,
) -> Result<Complex64, QSeriesError> {
    let mut prod = Complex64::new(1.0, 0.0);
    for &a in params {
        prod *= qpochhammer(a, base, n)?;
    }
    Ok(prod)
}

/// Infinite q-shifted factorial `(a; q)_∞ = ∏_{k≥0} (1 − a q^k)`.
///
/// The product is truncated at the first k with `|a| q^k < tol (1−q)/10`;
/// the dropped tail then perturbs the result by a relative error below
/// `tol/10 · 1/(1−q) · (1−q) = tol/10`. Always converges for 0 < q < 1, so
/// there is no error path; an exactly vanishing factor yields an exact 0.
#[must_use]
pub fn qpochhammer_inf(a: Complex64, base: QBase, tol: f64) -> Complex64 {
    let q = base.get();
    let cutoff = tol * (1.0 - q) * 0.1;
    let mut prod = Complex64::new(1.0, 0.0);
    let mut aq = a;
    while aq.norm() >= cutoff {
        prod *= 1.0 - aq;
        aq *= q;
    }
    prod
}

/// Product of infinite q-shifted factorials sharing one base.
#[must_use]
pub fn qpochhammer_inf_multi(params: &[Complex64], base: QBase, tol: f64) -> Complex64 {
    params
        .iter()
        .fold(Complex64::new(1.0, 0.0), |acc, &a| acc * qpochhammer_inf(a, base, tol))
}
