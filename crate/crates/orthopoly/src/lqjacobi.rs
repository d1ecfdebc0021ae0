use num_complex::Complex64;
use qseries::{joukowski_inverse, phi21_via_phi22, qpochhammer, qpochhammer_inf, QBase};

use crate::error::OrthoError;
use crate::support::{positive_sqrt, real_part, recurrence_walk};

const SERIES_TOL: f64 = 1e-14;
const SERIES_BUDGET: usize = 5000;

/// Polynomial of degree `n` at the point `x`,
///
/// ```text
/// p_n(x; a, b; q) = ₂φ₁(q^{-n}, ab q^{n+1}; aq; q, qx),
/// ```
///
/// evaluated through its three-term recurrence
///
/// ```text
/// -x p_m = A_m p_{m+1} - (A_m + C_m) p_m + C_m p_{m-1},
/// A_m = q^m (1-aq^{m+1})(1-abq^{m+1}) / ((1-abq^{2m+1})(1-abq^{2m+2})),
/// C_m = a q^m (1-q^m)(1-bq^m) / ((1-abq^{2m})(1-abq^{2m+1})),
/// ```
///
/// which stays accurate at degrees where the terminating ₂φ₁ cancels badly.
///
/// On the orthogonality lattice itself — x within 1e-9 relative of q^m with
/// m below the degree — the polynomial value decays roughly like q^{(n-m)²}
/// while the walk keeps O(1) intermediates, so the walk's absolute rounding
/// floor swamps the value once n - m is large. Those points are rerouted
/// through [`phi21_via_phi22`], whose lattice branch (the ₂φ₁ argument then
/// satisfies q^{-n}·qx = q^{m+1-n}) reproduces the decay factor by factor.
pub fn little_qjacobi_poly(
    n: u32,
    x: f64,
    a: f64,
    b: f64,
    base: QBase,
) -> Result<f64, OrthoError> {
    let q = base.get();
    if n > 0 && x > 0.0 && b != 0.0 {
        let m = (x.ln() / q.ln()).round();
        if (0.0..f64::from(n)).contains(&m) && (x / q.powi(m as i32) - 1.0).abs() <= 1e-9 {
            let value = phi21_via_phi22(
                Complex64::new(base.powi(-(n as i32)), 0.0),
                Complex64::new(a * b * base.powi(n as i32 + 1), 0.0),
                Complex64::new(a * q, 0.0),
                base,
                Complex64::new(q * x, 0.0),
                SERIES_TOL,
                SERIES_BUDGET,
            )?;
            return Ok(value.re);
        }
    }
    let walk = recurrence_walk(
        n,
        Complex64::new(-2.0 * x, 0.0),
        |m| {
            let qm = q.powi(m as i32);
            let upper = qm * (1.0 - a * q * qm) * (1.0 - a * b * q * qm)
                / ((1.0 - a * b * q * qm * qm) * (1.0 - a * b * q * q * qm * qm));
            let lower = if m == 0 {
                0.0
            } else {
                a * qm * (1.0 - qm) * (1.0 - b * qm)
                    / ((1.0 - a * b * qm * qm) * (1.0 - a * b * q * qm * qm))
            };
            (
                Complex64::new(2.0 * upper, 0.0),
                Complex64::new(-2.0 * (upper + lower), 0.0),
                Complex64::new(2.0 * lower, 0.0),
            )
        },
        "little q-Jacobi polynomial",
    )?;
    Ok(walk.re)
}

/// Orthonormal variant of [`little_qjacobi_poly`], rescaled by
///
/// ```text
/// √( (1-abq^{2n+1})/(1-abq) · (aq, abq; q)_n / (q, bq; q)_n · (aq)^{-n} ).
/// ```
///
/// # Errors
///
/// [`OrthoError::NegativeNorm`] when the squared factor is not positive,
/// which happens outside the orthogonality range 0 < aq < 1, bq < 1.
pub fn little_qjacobi_orthonormal(
    n: u32,
    x: f64,
    a: f64,
    b: f64,
    base: QBase,
) -> Result<f64, OrthoError> {
    let q = base.get();
    let n_i = i64::from(n);
    let poch = |v: f64| qpochhammer(Complex64::new(v, 0.0), base, n_i);
    let squared = (1.0 - a * b * q.powi(2 * n as i32 + 1)) / (1.0 - a * b * q)
        * (poch(a * q)? * poch(a * b * q)? / (poch(q)? * poch(b * q)?)).re
        * (a * q).powi(-(n as i32));
    let factor = positive_sqrt(
        Complex64::new(squared, 0.0),
        "little_qjacobi_orthonormal",
    )?;
    Ok(factor * little_qjacobi_poly(n, x, a, b, base)?)
}

/// Mass of the orthogonality measure at the point q^p,
///
/// ```text
/// w_p(a, b; q) = (bq; q)_p (aq; q)_∞ / ((q; q)_p (abq²; q)_∞) · (aq)^p.
/// ```
pub fn little_qjacobi_weight(p: u32, a: f64, b: f64, base: QBase) -> Result<f64, OrthoError> {
    let q = base.get();
    let p_i = i64::from(p);
    let value = qpochhammer(Complex64::new(b * q, 0.0), base, p_i)?
        * qpochhammer_inf(Complex64::new(a * q, 0.0), base, 1e-15)
        / (qpochhammer(Complex64::new(q, 0.0), base, p_i)?
            * qpochhammer_inf(Complex64::new(a * b * q * q, 0.0), base, 1e-15))
        * (a * q).powi(p as i32);
    Ok(value.re)
}

/// Parameter triple (c, d, r) for the two-sided function family
///
/// ```text
/// φ_n(μ(y); c, d, r | q) = e^{iψ_n} |d|^{-n}
///     √( (c̄ q^{1+n}/d̄²r̄; q)_∞ / (q^{1+n}/r; q)_∞ )
///     · ₂φ₁(dy, d/y; c; q, r q^{-n}),            n ∈ ℤ,
/// ```
///
/// where the phase ψ_n is pinned by ψ_{n+1} - ψ_n = arg(d̄ (1 - q^{n+1}/r))
/// together with the anchor e^{iψ_0} = phase((r; q)_∞). The increment has a
/// second expression, arg(d̄ (1 - c̄q^{n+1}/d̄²r̄)); both are evaluated and
/// must agree, which encodes the parameter regime in which the family is
/// orthonormal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LQJFParams {
    pub c: Complex64,
    pub d: Complex64,
    pub r: Complex64,
    pub base: QBase,
}

fn unit(v: Complex64) -> Option<Complex64> {
    let norm = v.norm();
    if norm < 1e-280 {
        None
    } else {
        Some(v / norm)
    }
}

impl LQJFParams {
    pub fn new(c: Complex64, d: Complex64, r: Complex64, base: QBase) -> Self {
        Self { c, d, r, base }
    }

    /// Conjugation-symmetric subfamily: with Q the base and parameters
    /// s ≠ 0, ε, β,
    ///
    /// ```text
    /// c = Q/s²,   d = √Q e^{iβ} / s,   r = Q^{(1-2ε)/2} e^{-iβ},
    /// ```
    ///
    /// which satisfies r̄ c = d² r, so the weight ratio under the square
    /// root is identically one.
    pub fn conjugate_family(s: f64, eps: f64, beta: f64, base: QBase) -> Self {
        let q = base.get().sqrt();
        let phase = Complex64::new(0.0, beta).exp();
        Self {
            c: Complex64::new(base.get() / (s * s), 0.0),
            d: phase * q / s,
            r: phase.conj() * q.powf(1.0 - 2.0 * eps),
            base,
        }
    }

    /// Unit-modulus phase factor e^{iψ_n}.
    ///
    /// # Errors
    ///
    /// [`OrthoError::PhaseIncrement`] when the two defining expressions for
    /// an increment disagree (parameters outside the orthogonality regime)
    /// or an increment degenerates to zero.
    pub fn phase(&self, n: i64) -> Result<Complex64, OrthoError> {
        let q = self.base.get();
        let dbar = self.d.conj();
        let inc = |m: i64| -> Result<Complex64, OrthoError> {
            let qm = Complex64::new(q.powi((m + 1) as i32), 0.0);
            let via_r = dbar * (1.0 - qm / self.r);
            let via_c = dbar * (1.0 - self.c.conj() * qm / (dbar * dbar * self.r.conj()));
            let (u1, u2) = match (unit(via_r), unit(via_c)) {
                (Some(u1), Some(u2)) => (u1, u2),
                _ => return Err(OrthoError::PhaseIncrement { index: m, gap: f64::INFINITY }),
            };
            let gap = (u1 - u2).norm();
            if gap > 1e-8 {
                return Err(OrthoError::PhaseIncrement { index: m, gap });
            }
            Ok(u1)
        };

        let anchor = unit(qpochhammer_inf(self.r, self.base, 1e-15))
            .ok_or(OrthoError::WeightRatio { value: self.r })?;
        let mut phase = anchor;
        if n >= 0 {
            for m in 0..n {
                phase *= inc(m)?;
            }
        } else {
            for m in (n..0).rev() {
                phase /= inc(m)?;
            }
        }
        Ok(unit(phase).expect("unit phase stays away from zero"))
    }

    /// Recurrence coefficients (β_n, α_n) of the function family,
    ///
    /// ```text
    /// 2x φ_n = α_n φ_{n+1} + β_n φ_n + α_{n-1} φ_{n-1},
    /// β_n = q^n (c + q)/(dr),   α_n = √((1 - q^{n+1}/r)(1 - cq^{n+1}/(d²r))).
    /// ```
    ///
    /// # Errors
    ///
    /// [`OrthoError::NegativeNorm`] when either coefficient fails to be real
    /// (respectively real positive under the root).
    pub fn recurrence(&self, n: i64) -> Result<(f64, f64), OrthoError> {
        let q = self.base.get();
        let qn1 = Complex64::new(q.powi((n + 1) as i32), 0.0);
        let diag = real_part(
            q.powi(n as i32) * (self.c + q) / (self.d * self.r),
            "little_qjacobi_fn recurrence diagonal",
        )?;
        let radicand = (1.0 - qn1 / self.r) * (1.0 - self.c * qn1 / (self.d * self.d * self.r));
        let off = positive_sqrt(radicand, "little_qjacobi_fn recurrence")?;
        Ok((diag, off))
    }

    /// Square root of the Pochhammer ratio under the root in the defining
    /// formula; identically one for the conjugation-symmetric subfamily.
    fn weight_sqrt(&self, n: i64) -> Result<f64, OrthoError> {
        let q = self.base.get();
        let qn1 = Complex64::new(q.powi((n + 1) as i32), 0.0);
        let dbar = self.d.conj();
        let numer = qpochhammer_inf(
            self.c.conj() * qn1 / (dbar * dbar * self.r.conj()),
            self.base,
            1e-15,
        );
        let denom = qpochhammer_inf(qn1 / self.r, self.base, 1e-15);
        let ratio = numer / denom;
        if ratio.im.abs() > 1e-9 * ratio.norm() || ratio.re <= 0.0 {
            return Err(OrthoError::WeightRatio { value: ratio });
        }
        Ok(ratio.re.sqrt())
    }
}

/// Function-family member of index `n` ∈ ℤ at the point `x` = μ(y).
///
/// The ₂φ₁ argument r q^{-n} leaves the unit disk for moderately large `n`,
/// and on the discrete part of the spectrum — x = μ(y) with d·r·y on the
/// lattice q^{-j} — the direct series is a theta-type sum that cancels
/// catastrophically. Both regimes are covered by evaluating through
/// [`phi21_via_phi22`] at the root y of larger modulus, for which the
/// product (dy)(rq^{-n}) lands exactly on the lattice at those points and
/// the folded form takes over.
///
/// # Errors
///
/// Propagates series failures; [`OrthoError::PhaseIncrement`] and
/// [`OrthoError::WeightRatio`] signal parameters outside the orthogonality
/// regime.
pub fn little_qjacobi_fn(
    n: i64,
    x: Complex64,
    params: &LQJFParams,
) -> Result<Complex64, OrthoError> {
    let base = params.base;
    let inner = joukowski_inverse(x);
    let y = if inner.norm() < 1.0 { 1.0 / inner } else { inner };
    let phase = params.phase(n)?;
    let weight = params.weight_sqrt(n)?;
    let scale = params.d.norm().powi(-(n as i32));
    let argument = params.r * base.powi(-(n as i32));
    let series = phi21_via_phi22(
        params.d * y,
        params.d / y,
        params.c,
        base,
        argument,
        SERIES_TOL,
        SERIES_BUDGET,
    )?;
    Ok(phase * scale * weight * series)
}
