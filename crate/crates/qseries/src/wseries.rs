use num_complex::Complex64;

use crate::base::QBase;
use crate::error::QSeriesError;
use crate::series::match_negative_power;

/// Very-well-poised ₈W₇ series, evaluated in its sum form
///
/// ```text
///                              ∞  1 − a₁q^{2k}   (a₁, a₄, a₅, a₆, a₇, a₈; q)_k
/// ₈W₇(a₁; a₄,…,a₈; q, z)  =    Σ  ──────────── · ───────────────────────────────────── z^k
///                             k=0    1 − a₁      (q, a₁q/a₄, a₁q/a₅, …, a₁q/a₈; q)_k
/// ```
///
/// The sum form is used directly (rather than re-expanding into an ₈φ₇ with
/// ±√a₁ rows) so no square-root branch of a₁ is ever taken.
///
/// # Errors
///
/// - [`QSeriesError::Pole`] when a₁ = 1 (the very-well-poised prefactor is
///   singular).
/// - [`QSeriesError::Divergence`] for a nonterminating series with |z| ≥ 1.
/// - [`QSeriesError::ZeroDenominator`] when some a₁q/aᵢ is q^-m with m inside
///   the summation range.
/// - [`QSeriesError::Truncation`] when the term budget runs out.
#[allow(clippy::too_many_arguments)]
pub fn w_87(
    a1: Complex64,
    a4: Complex64,
    a5: Complex64,
    a6: Complex64,
    a7: Complex64,
    a8: Complex64,
    base: QBase,
    z: Complex64,
    tol: f64,
    max_terms: usize,
) -> Result<Complex64, QSeriesError> {
    let q = base.get();
    if (1.0 - a1).norm() < 1e-14 * (1.0 + a1.norm()) {
        return Err(QSeriesError::Pole { a: a1, index: 0 });
    }

    let upper = [a1, a4, a5, a6, a7, a8];
    let termination = upper
        .iter()
        .filter_map(|&a| match_negative_power(a, q, max_terms))
        .min();

    let lower: Vec<Complex64> = [a4, a5, a6, a7, a8]
        .iter()
        .map(|&ai| a1 * q / ai)
        .collect();
    let pole_range = match termination {
        Some(0) => None,
        Some(n) => Some(n - 1),
        None => Some(max_terms),
    };
    if let Some(mmax) = pole_range {
        for &b in &lower {
            if let Some(m) = match_negative_power(b, q, mmax) {
                return Err(QSeriesError::ZeroDenominator { param: b, m });
            }
        }
    }

    if termination.is_none() && z.norm() >= 1.0 {
        return Err(QSeriesError::Divergence { r: 8, s: 7, z_abs: z.norm() });
    }

    let kmax = termination.unwrap_or(max_terms);
    let inv_head = (1.0 - a1).inv();

    // `shifted` carries the plain Pochhammer-ratio part (including z^k); the
    // (1 − a₁q^{2k})/(1 − a₁) prefactor is applied per term.
    let mut shifted = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(1.0, 0.0); // k = 0 term
    let mut running_max = 1.0_f64;
    let mut consecutive_small = 0_u32;
    let mut qk = 1.0_f64;
    let mut q2k = 1.0_f64;

    for _ in 0..kmax {
        let mut ratio = z;
        for &a in &upper {
            ratio *= 1.0 - a * qk;
        }
        ratio /= 1.0 - q * qk;
        for &b in &lower {
            ratio /= 1.0 - b * qk;
        }
        shifted *= ratio;
        q2k *= q * q;
        let term = (1.0 - a1 * q2k) * inv_head * shifted;
        sum += term;
        if !(sum.re.is_finite() && sum.im.is_finite()) {
            return Err(QSeriesError::NonFinite { context: "w_87 partial sum" });
        }
        running_max = running_max.max(sum.norm());

        if termination.is_none() {
            if term.norm() < tol * running_max {
                consecutive_small += 1;
                if consecutive_small >= 3 {
                    return Ok(sum);
                }
            } else {
                consecutive_small = 0;
            }
        }
        qk *= q;
    }

    if termination.is_some() {
        Ok(sum)
    } else {
        Err(QSeriesError::Truncation { terms: max_terms, last: shifted.norm() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: f64) -> QBase {
        QBase::new(v).unwrap()
    }

    fn re(v: f64) -> Complex64 {
        Complex64::new(v, 0.0)
    }

    #[test]
    fn zero_argument_gives_one() {
        let v = w_87(
            re(0.3),
            re(0.2),
            re(0.4),
            re(0.5),
            re(0.6),
            re(0.7),
            q(0.5),
            re(0.0),
            1e-14,
            100,
        )
        .unwrap();
        assert_eq!(v, re(1.0));
    }

    #[test]
    fn terminating_three_term_sum_by_hand() {
        // a₄ = q⁻² terminates at k = 2; accumulate the three terms explicitly.
        let base = q(0.5);
        let qv = base.get();
        let (a1, a5, a6, a7, a8) = (re(0.3), re(0.16), re(0.25), re(0.35), re(0.45));
        let a4 = re(base.powi(-2));
        let z = re(0.8);

        let upper = [a1, a4, a5, a6, a7, a8];
        let lower: Vec<Complex64> = [a4, a5, a6, a7, a8].iter().map(|&ai| a1 * qv / ai).collect();
        let mut hand = Complex64::new(0.0, 0.0);
        for k in 0..=2_i64 {
            let mut t = (1.0 - a1 * qv.powi(2 * k as i32)) / (1.0 - a1);
            t *= crate::pochhammer::qpochhammer_multi(&upper, base, k).unwrap();
            t /= crate::pochhammer::qpochhammer(re(qv), base, k).unwrap();
            t /= crate::pochhammer::qpochhammer_multi(&lower, base, k).unwrap();
            hand += t * z.powi(k as i32);
        }

        let v = w_87(a1, a4, a5, a6, a7, a8, base, z, 1e-14, 100).unwrap();
        assert!((v - hand).norm() < 1e-13 * hand.norm().max(1.0));
    }

    #[test]
    fn head_parameter_one_is_a_pole() {
        let err = w_87(
            re(1.0),
            re(0.2),
            re(0.4),
            re(0.5),
            re(0.6),
            re(0.7),
            q(0.5),
            re(0.1),
            1e-14,
            100,
        )
        .unwrap_err();
        assert!(matches!(err, QSeriesError::Pole { .. }));
    }

    #[test]
    fn nonterminating_outside_disk_diverges() {
        let err = w_87(
            re(0.3),
            re(0.2),
            re(0.4),
            re(0.5),
            re(0.6),
            re(0.7),
            q(0.5),
            re(1.1),
            1e-14,
            100,
        )
        .unwrap_err();
        assert!(matches!(err, QSeriesError::Divergence { .. }));
    }
}
