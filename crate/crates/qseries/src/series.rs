use num_complex::Complex64;

use crate::base::QBase;
use crate::error::QSeriesError;

/// Relative tolerance for recognizing a computed parameter as q^-n.
pub(crate) const POWER_MATCH_RTOL: f64 = 1e-10;

/// Smallest m ≤ mmax with |v − q^-m| < rtol·q^-m, if any.
pub(crate) fn match_negative_power(v: Complex64, q: f64, mmax: usize) -> Option<usize> {
    let mut target = 1.0_f64;
    for m in 0..=mmax {
        if (v - target).norm() < POWER_MATCH_RTOL * target {
            return Some(m);
        }
        target /= q;
        if target > 1e280 {
            return None;
        }
    }
    None
}

/// Parameter block of one basic hypergeometric series
///
/// ```text
///                          ∞   (a₁,…,a_r; q)_k
/// ᵣφₛ(a; b; q, z)   =      Σ   ───────────────── ((−1)^k q^{k(k−1)/2})^{1+s−r} z^k
///                         k=0  (q, b₁,…,b_s; q)_k
/// ```
///
/// The series terminates when some numerator parameter equals q^-n (detected
/// within relative tolerance 1e-10); it then sums exactly to the index n.
#[derive(Debug, Clone)]
pub struct SeriesSpec {
    pub numerator: Vec<Complex64>,
    pub denominator: Vec<Complex64>,
    pub base: QBase,
    pub argument: Complex64,
}

impl SeriesSpec {
    #[must_use]
    pub fn new(
        numerator: &[Complex64],
        denominator: &[Complex64],
        base: QBase,
        argument: Complex64,
    ) -> Self {
        Self {
            numerator: numerator.to_vec(),
            denominator: denominator.to_vec(),
            base,
            argument,
        }
    }

    /// Termination index: the smallest n ≤ max_terms such that some numerator
    /// parameter matches q^-n.
    #[must_use]
    pub fn termination_index(&self, max_terms: usize) -> Option<usize> {
        let q = self.base.get();
        self.numerator
            .iter()
            .filter_map(|&a| match_negative_power(a, q, max_terms))
            .min()
    }
}

/// Evaluate a basic hypergeometric series.
///
/// Terminating series are summed exactly to the termination index, so their
/// value does not depend on `tol` or `max_terms` (beyond detection range).
/// Nonterminating series are summed until three consecutive terms fall below
/// `tol` times the running maximum partial-sum magnitude; the three-in-a-row
/// rule guards against stopping on a term that happens to vanish.
///
/// # Errors
///
/// - [`QSeriesError::Divergence`] for a nonterminating series with r = s+1 and
///   |z| ≥ 1, or r > s+1 and z ≠ 0.
/// - [`QSeriesError::ZeroDenominator`] when a denominator parameter is q^-m
///   with m inside the summation range.
/// - [`QSeriesError::Truncation`] when the term budget is exhausted before the
///   stopping rule fires.
/// - [`QSeriesError::NonFinite`] if the partial sums overflow.
pub fn phi_rs(spec: &SeriesSpec, tol: f64, max_terms: usize) -> Result<Complex64, QSeriesError> {
    let q = spec.base.get();
    let r = spec.numerator.len();
    let s = spec.denominator.len();
    let z = spec.argument;

    let termination = spec.termination_index(max_terms);

    // Range of q-exponents the denominators actually reach: term k uses
    // factors (1 - b q^j) with j ≤ k−1.
    let pole_range = match termination {
        Some(0) => None,
        Some(n) => Some(n - 1),
        None => Some(max_terms),
    };
    if let Some(mmax) = pole_range {
        for &b in &spec.denominator {
            if let Some(m) = match_negative_power(b, q, mmax) {
                return Err(QSeriesError::ZeroDenominator { param: b, m });
            }
        }
    }

    if termination.is_none() {
        if r == s + 1 && z.norm() >= 1.0 {
            return Err(QSeriesError::Divergence { r, s, z_abs: z.norm() });
        }
        if r > s + 1 && z.norm() > 0.0 {
            return Err(QSeriesError::Divergence { r, s, z_abs: z.norm() });
        }
    }

    let well_poised_exponent = 1 + s as i64 - r as i64;
    let kmax = termination.unwrap_or(max_terms);

    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut running_max = 1.0_f64;
    let mut consecutive_small = 0_u32;
    let mut qk = 1.0_f64; // q^k for the ratio from term k to term k+1

    for _ in 0..kmax {
        let mut ratio = z;
        for &a in &spec.numerator {
            ratio *= 1.0 - a * qk;
        }
        ratio /= 1.0 - q * qk;
        for &b in &spec.denominator {
            ratio /= 1.0 - b * qk;
        }
        match well_poised_exponent {
            0 => {}
            e if e > 0 => {
                for _ in 0..e {
                    ratio *= -qk;
                }
            }
            e => {
                for _ in 0..-e {
                    ratio /= -qk;
                }
            }
        }

        term *= ratio;
        sum += term;
        if !(sum.re.is_finite() && sum.im.is_finite()) {
            return Err(QSeriesError::NonFinite { context: "phi_rs partial sum" });
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
        Err(QSeriesError::Truncation { terms: max_terms, last: term.norm() })
    }
}

/// Convenience wrapper: `₂φ₁(a, b; c; q, z)`.
///
/// # Errors
///
/// As [`phi_rs`].
pub fn phi21(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    base: QBase,
    z: Complex64,
    tol: f64,
    max_terms: usize,
) -> Result<Complex64, QSeriesError> {
    phi_rs(&SeriesSpec::new(&[a, b], &[c], base, z), tol, max_terms)
}
