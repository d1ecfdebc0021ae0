use crate::error::MeasureError;
use crate::measure::{Atom, Measure};
use num_complex::Complex64;
use orthopoly::ASCParams;
use qseries::qpochhammer_inf;

const INF_TOL: f64 = 1e-15;
const MASS_FLOOR: f64 = 1e-300;

/// Purely discrete orthogonality measure of the two-parameter family in
/// base 1/q: unit total mass spread over the expanding lattice
/// x_p = μ(a q^{−p}), p ≥ 0, with
///
/// ```text
///        1 − a⁻²q^{2p}  (a⁻², (ab)⁻¹; q)_p  (bq/a; q)∞  ⎛b⎞^p
/// W_p = ─────────────── ─────────────────── ──────────  ⎜─⎟   q^{p²}
///          1 − a⁻²      (q, bq/a; q)_p      (q/a²; q)∞  ⎝a⎠
/// ```
///
/// (all Pochhammer symbols in the ordinary base q, labels chosen so that
/// |a| ≥ |b|). Masses are walked through the ratio W_{p+1}/W_p, so the
/// super-exponentially small tail never passes through an explicit q^{p²}.
/// The list stops at `pmax` or as soon as a mass underflows; `tail_bound`
/// records the first omitted mass.
///
/// # Errors
///
/// [`MeasureError::Regime`] unless the parameters are real, flagged as
/// inverse-base, determinate (a ≠ b and min|·| ≤ q·max|·|) and satisfy
/// ab > 1, and [`MeasureError::NegativeAtomMass`] if a mass fails to be
/// positive.
pub fn asc_inverse_measure(params: &ASCParams, pmax: usize) -> Result<Measure, MeasureError> {
    if !params.inverse_base {
        return Err(MeasureError::Regime {
            message: "ordinary-base parameters belong to the continuous measure constructor".into(),
        });
    }
    for p in [params.a, params.b] {
        if p.im.abs() > 1e-12 * (1.0 + p.norm()) {
            return Err(MeasureError::Regime {
                message: format!("lattice parameters must be real, got {p}"),
            });
        }
    }
    let q = params.base.get();
    let (a, b) = if params.a.norm() >= params.b.norm() {
        (params.a.re, params.b.re)
    } else {
        (params.b.re, params.a.re)
    };
    if a * b <= 1.0 {
        return Err(MeasureError::Regime {
            message: format!("positivity needs ab > 1, got ab = {}", a * b),
        });
    }
    if a == b || b.abs() > q * a.abs() {
        return Err(MeasureError::Regime {
            message: format!(
                "the moment problem is determinate only for a ≠ b with |b| ≤ q|a|, got a = {a}, b = {b}"
            ),
        });
    }

    let w0 = qpochhammer_inf(Complex64::new(b * q / a, 0.0), params.base, INF_TOL).re
        / qpochhammer_inf(Complex64::new(q / (a * a), 0.0), params.base, INF_TOL).re;
    let ratio = |p: usize| -> f64 {
        let qp = q.powi(p as i32);
        let a2inv = 1.0 / (a * a);
        (1.0 - a2inv * qp * qp * q * q) / (1.0 - a2inv * qp * qp)
            * (1.0 - a2inv * qp) * (1.0 - qp / (a * b))
            / ((1.0 - q * qp) * (1.0 - (b / a) * q * qp))
            * (b / a) * qp * qp * q
    };

    let mut atoms = Vec::new();
    let mut delicate = Vec::new();
    let mut mass = w0;
    let mut tail_bound = 0.0;
    for p in 0..=pmax {
        if mass.abs() < MASS_FLOOR {
            tail_bound = mass;
            break;
        }
        let y = a * q.powi(-(p as i32));
        let location = 0.5 * (y + 1.0 / y);
        if !(mass > 0.0) {
            return Err(MeasureError::NegativeAtomMass {
                location,
                value: Complex64::new(mass, 0.0),
            });
        }
        if (y * y - 1.0).abs() < 1e-6 {
            delicate.push(atoms.len());
        }
        atoms.push(Atom { location, mass });
        mass *= ratio(p);
        tail_bound = mass;
    }
    Ok(Measure {
        density: None,
        atoms,
        tail_bound,
        family: "al-salam-chihara-inverse",
        delicate_atoms: delicate,
    })
}
