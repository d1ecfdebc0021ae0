use crate::error::MeasureError;
use crate::measure::{Atom, Density, Measure};
use num_complex::Complex64;
use orthopoly::LQJFParams;
use qseries::{qpochhammer_inf, QBase};
use std::f64::consts::PI;

const INF_TOL: f64 = 1e-15;
const OVERFLOW_GUARD: f64 = 1e290;

/// Spectral measure of the two-sided function family. The continuous part
/// lives on x = cos θ with θ-density
///
/// ```text
///         1  |            (e^{2iθ}, c, r, q/r; q)∞                |²
/// ρ(θ) = ─── | ─────────────────────────────────────────────────── | ,
///         2π | (ce^{iθ}/d, de^{iθ}, dre^{iθ}, qe^{iθ}/(dr); q)∞   |
/// ```
///
/// and the discrete part occupies the bilateral lattice x_j = μ(q^{−j}/dr)
/// for every integer j with |q^{−j}/dr| > 1, carrying mass
///
/// ```text
///        |(c, r, q/r; q)∞|²   (1 − (dr)²q^{2j}) (dr)^{−2j−2} q^{−j(j+1)}
/// m_j = ────────────────── ─────────────────────────────────────────────── .
///            (q; q)∞²       (crqʲ, cq^{−j}/(d²r), d²rqʲ, q^{−j}/r; q)∞
/// ```
///
/// Unlike the polynomial measures this one has **unbounded total mass**:
/// m_{j+1}/m_j → 1/c > 1, so any finite atom list is a truncation and
/// `tail_bound` is infinite. Integrals against it converge only because
/// the family members decay faster than the masses grow; the kept range
/// `j ≤ jrange` therefore controls accuracy through the integrand, not
/// through an omitted-mass bound. Masses are walked by that ratio from an
/// anchor at the smallest lattice index (whose closed form, unlike the
/// large-j ones, has no out-of-range intermediates), and the walk stops
/// early once a mass approaches the floating-point ceiling.
///
/// # Errors
///
/// [`MeasureError::Regime`] when the parameters leave the positive regime:
/// c must be real in (0, q], |d| < 1 and |c/d| < 1, dr must be real, the
/// pair must satisfy either the conjugation symmetry r̄c = d²r or the real
/// interlacing condition, and neither r nor c/(d²r) may sit on the lattice
/// q^ℤ. [`MeasureError::NegativeAtomMass`] if a mass fails to be a
/// positive real.
pub fn lqjf_measure(params: &LQJFParams, jrange: i64) -> Result<Measure, MeasureError> {
    let LQJFParams { c, d, r, base } = *params;
    let q = base.get();

    if c.im.abs() > 1e-12 * (1.0 + c.norm()) || c.re <= 0.0 || c.re > q + 1e-12 {
        return Err(MeasureError::Regime {
            message: format!("c must be real in (0, {q}], got {c}"),
        });
    }
    if d.norm() < 1e-280 || r.norm() < 1e-280 {
        return Err(MeasureError::Regime {
            message: "d and r must be nonzero".into(),
        });
    }
    if d.norm() >= 1.0 {
        return Err(MeasureError::Regime {
            message: format!("|d| must stay below one, got |d| = {}", d.norm()),
        });
    }
    if (c / d).norm() >= 1.0 {
        return Err(MeasureError::Regime {
            message: format!("|c/d| must stay below one, got {}", (c / d).norm()),
        });
    }
    let drc = d * r;
    if drc.im.abs() > 1e-12 * drc.norm() {
        return Err(MeasureError::Regime {
            message: format!("dr must be real, got {drc}"),
        });
    }
    ensure_symmetry_or_interlacing(c.re, d, r, q)?;
    for (label, v) in [("r", r), ("c/(d²r)", c / (d * d * r))] {
        if near_integer_power(v, q).is_some() {
            return Err(MeasureError::Regime {
                message: format!("{label} = {v} sits on the lattice q^Z, where the family degenerates"),
            });
        }
    }

    let constants = (qpochhammer_inf(c, base, INF_TOL)
        * qpochhammer_inf(r, base, INF_TOL)
        * qpochhammer_inf(q / r, base, INF_TOL))
    .norm_sqr();
    let head = constants
        / qpochhammer_inf(Complex64::new(q, 0.0), base, INF_TOL)
            .norm_sqr();

    let dr_abs = drc.norm();
    let mut j_min = (-dr_abs.ln() / q.ln()).floor() as i64 + 1;
    while q.powi(-(j_min as i32)) <= dr_abs {
        j_min += 1;
    }
    while q.powi(-(j_min as i32 - 1)) > dr_abs {
        j_min -= 1;
    }

    let mut atoms = Vec::new();
    let mut delicate = Vec::new();
    if jrange >= j_min {
        let anchor = direct_mass(j_min, c, d, r, drc, base, head);
        let mut mass = validated(anchor, j_min, drc, q)?;
        for j in j_min..=jrange {
            if (1.0 - drc.norm_sqr() * q.powi(2 * j as i32)).abs() < 1e-6 {
                delicate.push(atoms.len());
            }
            let y = q.powi(-(j as i32)) / drc.re;
            atoms.push(Atom {
                location: 0.5 * (y + 1.0 / y),
                mass,
            });
            if j == jrange {
                break;
            }
            let next = Complex64::new(mass, 0.0) * mass_ratio(j, c, d, r, drc, q);
            if !next.is_finite() || next.norm() > OVERFLOW_GUARD {
                break;
            }
            mass = validated(next, j + 1, drc, q)?;
        }
    }

    let density = lattice_density(c, d, drc, base, constants);
    Ok(Measure {
        density: Some(density),
        atoms,
        tail_bound: f64::INFINITY,
        family: "little-q-jacobi-functions",
        delicate_atoms: delicate,
    })
}

fn validated(mass: Complex64, j: i64, drc: Complex64, q: f64) -> Result<f64, MeasureError> {
    if mass.im.abs() > 1e-12 * mass.norm() || mass.re <= 0.0 {
        let y = q.powi(-(j as i32)) / drc.re;
        return Err(MeasureError::NegativeAtomMass {
            location: 0.5 * (y + 1.0 / y),
            value: mass,
        });
    }
    Ok(mass.re)
}

fn ensure_symmetry_or_interlacing(
    c: f64,
    d: Complex64,
    r: Complex64,
    q: f64,
) -> Result<(), MeasureError> {
    let lhs = r.conj() * c;
    let rhs = d * d * r;
    if (lhs - rhs).norm() <= 1e-10 * rhs.norm() {
        return Ok(());
    }
    let d2 = d * d;
    let real_r = r.im.abs() <= 1e-12 * (1.0 + r.norm()) && r.re > 0.0;
    let real_d2 = d2.im.abs() <= 1e-12 * (1.0 + d2.norm());
    if real_r && real_d2 {
        let ratio = c / d2.re;
        if (c - d2.re).abs() > 1e-12 && ratio > 0.0 {
            let k0 = (-r.re.ln() / q.ln()).floor() as i64;
            let rk = r.re * q.powi(k0 as i32);
            let (lo, hi) = (rk * q, rk);
            if rk > 1.0 && rk < 1.0 / q && ratio > lo && ratio < hi {
                return Ok(());
            }
        }
    }
    Err(MeasureError::Regime {
        message: format!(
            "parameters satisfy neither the conjugation symmetry r̄c = d²r nor the real interlacing condition (c = {c}, d = {d}, r = {r})"
        ),
    })
}

/// m_j from the closed form; safe at the small-|j| anchor where none of
/// the factors has left the floating-point range yet.
fn direct_mass(
    j: i64,
    c: Complex64,
    d: Complex64,
    r: Complex64,
    drc: Complex64,
    base: QBase,
    head: f64,
) -> Complex64 {
    let q = base.get();
    let qj = q.powi(j as i32);
    let qjinv = q.powi(-(j as i32));
    let numerator = (1.0 - drc * drc * qj * qj)
        * drc.powi(-2 * j as i32 - 2)
        * q.powf(-(j * (j + 1)) as f64);
    let denominator = qpochhammer_inf(c * r * qj, base, INF_TOL)
        * qpochhammer_inf(c * qjinv / (d * d * r), base, INF_TOL)
        * qpochhammer_inf(d * d * r * qj, base, INF_TOL)
        * qpochhammer_inf(qjinv / r, base, INF_TOL);
    head * numerator / denominator
}

/// m_{j+1} / m_j. The two denominator factors that grow like q^{−j−1}
/// are divided through by it first, cancelling the explicit q^{−2j−2} of
/// the closed form: every factor below is O(1), so the ratio never leaves
/// the floating-point range no matter how far the walk goes.
fn mass_ratio(j: i64, c: Complex64, d: Complex64, r: Complex64, drc: Complex64, q: f64) -> Complex64 {
    let qj = q.powi(j as i32);
    let dr2 = drc * drc;
    let numerator = (1.0 - dr2 * qj * qj * q * q) * (1.0 - c * r * qj) * (1.0 - d * d * r * qj);
    let denominator =
        (1.0 - dr2 * qj * qj) * (qj * q - c / (d * d * r)) * (qj * q - 1.0 / r) * dr2;
    numerator / denominator
}

fn lattice_density(
    c: Complex64,
    d: Complex64,
    drc: Complex64,
    base: QBase,
    constants: f64,
) -> Density {
    let q = base.get();
    let pref = constants / (2.0 * PI);
    Box::new(move |theta| {
        let eit = Complex64::from_polar(1.0, theta);
        let numerator = qpochhammer_inf(eit * eit, base, INF_TOL);
        let denominator = qpochhammer_inf(c * eit / d, base, INF_TOL)
            * qpochhammer_inf(d * eit, base, INF_TOL)
            * qpochhammer_inf(drc * eit, base, INF_TOL)
            * qpochhammer_inf(q * eit / drc, base, INF_TOL);
        pref * (numerator / denominator).norm_sqr()
    })
}

/// Integer m with v ≈ q^m (relative window 10⁻⁹), if one exists.
fn near_integer_power(v: Complex64, q: f64) -> Option<i64> {
    if !(v.re > 0.0) || v.im.abs() > 1e-9 * v.norm() {
        return None;
    }
    let m = (v.re.ln() / q.ln()).round();
    if !(-300.0..=300.0).contains(&m) {
        return None;
    }
    let lattice = q.powi(m as i32);
    if ((v.re - lattice) / lattice).abs() <= 1e-9 {
        Some(m as i64)
    } else {
        None
    }
}
