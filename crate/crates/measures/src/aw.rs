use crate::error::MeasureError;
use crate::measure::{Atom, Density, Measure};
use num_complex::Complex64;
use orthopoly::{ASCParams, AWParams, CDHParams};
use qseries::{qpochhammer, qpochhammer_inf, QBase};
use std::f64::consts::PI;

const INF_TOL: f64 = 1e-15;
const ZERO_FLOOR: f64 = 1e-280;

/// Normalized orthogonality measure of the four-parameter polynomial
/// family. The continuous part lives on x = cos θ with θ-density
///
/// ```text
///         1   (q, ab, ac, ad, bc, bd, cd; q)∞ |          (e^{2iθ}; q)∞           |²
/// ρ(θ) = ───  ─────────────────────────────── | ────────────────────────────────── | ,
///         2π            (abcd; q)∞            | (ae^{iθ}, be^{iθ}, ce^{iθ}, de^{iθ}; q)∞ |
/// ```
///
/// and when exactly one parameter e has modulus above one (it must then be
/// real), atoms appear at x_k = μ(e qᵏ) for every k ≥ 0 with |e qᵏ| > 1.
/// Their masses are produced by one routine that degenerates continuously
/// as any of the remaining parameters is sent to zero, so the same code
/// covers the three- and two-parameter subfamilies.
///
/// Parameters must form a multiset closed under complex conjugation with
/// all pairwise products inside the unit disk; the total mass is then one.
///
/// # Errors
///
/// [`MeasureError::Regime`] when the parameter configuration violates any
/// of the above, and [`MeasureError::NegativeAtomMass`] if a computed mass
/// fails to be a positive real.
pub fn aw_measure(params: &AWParams) -> Result<Measure, MeasureError> {
    let AWParams { a, b, c, d, base } = *params;
    build_measure([a, b, c, d], base, "askey-wilson")
}

/// Measure of the three-parameter subfamily, obtained from the
/// four-parameter one by sending the last parameter to zero.
///
/// # Errors
///
/// Same conditions as [`aw_measure`].
pub fn cdh_measure(params: &CDHParams) -> Result<Measure, MeasureError> {
    let CDHParams { a, b, c, base } = *params;
    build_measure([a, b, c, Complex64::new(0.0, 0.0)], base, "continuous-dual-q-hahn")
}

/// Measure of the two-parameter subfamily in its ordinary base. The
/// inverse-base lattice has its own constructor,
/// [`crate::asc_inverse_measure`].
///
/// # Errors
///
/// Same conditions as [`aw_measure`], plus rejection of parameter sets
/// flagged as inverse-base.
pub fn asc_measure(params: &ASCParams) -> Result<Measure, MeasureError> {
    if params.inverse_base {
        return Err(MeasureError::Regime {
            message: "inverse-base parameters carry a purely discrete lattice measure".into(),
        });
    }
    let zero = Complex64::new(0.0, 0.0);
    build_measure([params.a, params.b, zero, zero], params.base, "al-salam-chihara")
}

fn build_measure(
    ps: [Complex64; 4],
    base: QBase,
    family: &'static str,
) -> Result<Measure, MeasureError> {
    ensure_conjugation_closed(&ps)?;
    ensure_pairwise_inside(&ps)?;
    let (atoms, delicate_atoms) = spectral_atoms(&ps, base)?;
    let density = normalized_density(&ps, base)?;
    Ok(Measure {
        density: Some(density),
        atoms,
        tail_bound: 0.0,
        family,
        delicate_atoms,
    })
}

fn ensure_conjugation_closed(ps: &[Complex64; 4]) -> Result<(), MeasureError> {
    let mut used = [false; 4];
    for i in 0..4 {
        if used[i] {
            continue;
        }
        let scale = 1.0 + ps[i].norm();
        if ps[i].im.abs() <= 1e-12 * scale {
            used[i] = true;
            continue;
        }
        let partner = (0..4)
            .find(|&j| j != i && !used[j] && (ps[j] - ps[i].conj()).norm() <= 1e-12 * scale);
        match partner {
            Some(j) => {
                used[i] = true;
                used[j] = true;
            }
            None => {
                return Err(MeasureError::Regime {
                    message: format!("parameter {} has no conjugate partner", ps[i]),
                })
            }
        }
    }
    Ok(())
}

fn ensure_pairwise_inside(ps: &[Complex64; 4]) -> Result<(), MeasureError> {
    for i in 0..4 {
        for j in (i + 1)..4 {
            let prod = (ps[i] * ps[j]).norm();
            if prod >= 1.0 {
                return Err(MeasureError::Regime {
                    message: format!(
                        "|e_i e_j| = {prod} for the pair ({}, {}); every pairwise product must stay inside the unit disk",
                        ps[i], ps[j]
                    ),
                });
            }
        }
    }
    Ok(())
}

fn spectral_atoms(
    ps: &[Complex64; 4],
    base: QBase,
) -> Result<(Vec<Atom>, Vec<usize>), MeasureError> {
    let large: Vec<usize> = (0..4).filter(|&i| ps[i].norm() > 1.0).collect();
    match large.len() {
        0 => Ok((Vec::new(), Vec::new())),
        1 => {
            let e = ps[large[0]];
            if e.im.abs() > 1e-12 * e.norm() {
                return Err(MeasureError::Regime {
                    message: format!("the parameter {e} exceeding modulus one must be real"),
                });
            }
            let mut others = [Complex64::new(0.0, 0.0); 3];
            let mut slot = 0;
            for (i, &p) in ps.iter().enumerate() {
                if i != large[0] {
                    others[slot] = p;
                    slot += 1;
                }
            }
            lattice_masses(e.re, others, base)
        }
        _ => Err(MeasureError::Regime {
            message: "two or more parameters exceed modulus one; no single spectral lattice exists"
                .into(),
        }),
    }
}

/// Masses on the lattice y_k = e qᵏ for the real parameter e with |e| > 1:
///
/// ```text
///            (e⁻²; q)∞ Π_{i<j} (f_i f_j; q)∞     1 − e²q^{2k}  (e²; q)_k
/// m_k  =  ───────────────────────────────────── ·  ──────────── ─────────  e^{−k} Π_i F_i(k) ,
///          Π_i (f_i/e; q)∞ · (e f₁ f₂ f₃; q)∞      1 − e²       (q; q)_k
/// ```
///
/// where F_i(k) = (e f_i; q)_k / ((e q / f_i; q)_k f_iᵏ) for f_i ≠ 0 and
/// its limit (−1)ᵏ e^{−k} q^{−k(k+1)/2} when f_i = 0.
fn lattice_masses(
    e: f64,
    others: [Complex64; 3],
    base: QBase,
) -> Result<(Vec<Atom>, Vec<usize>), MeasureError> {
    let q = base.get();
    let ec = Complex64::new(e, 0.0);
    let mut head = qpochhammer_inf(Complex64::new(1.0 / (e * e), 0.0), base, INF_TOL);
    for i in 0..3 {
        for j in (i + 1)..3 {
            head *= qpochhammer_inf(others[i] * others[j], base, INF_TOL);
        }
    }
    let mut full_product = ec;
    for f in others {
        head /= qpochhammer_inf(f / ec, base, INF_TOL);
        full_product *= f;
    }
    head /= qpochhammer_inf(full_product, base, INF_TOL);

    let mut atoms = Vec::new();
    let mut delicate = Vec::new();
    let mut k = 0i64;
    loop {
        let yk = e * q.powi(k as i32);
        if yk.abs() <= 1.0 {
            break;
        }
        let e2 = Complex64::new(e * e, 0.0);
        let mut tail = Complex64::new((1.0 - e * e * q.powi(2 * k as i32)) / (1.0 - e * e), 0.0);
        tail *= qpochhammer(e2, base, k)? / qpochhammer(Complex64::new(q, 0.0), base, k)?;
        tail *= Complex64::new(e, 0.0).powi(-(k as i32));
        for f in others {
            if f.norm() < ZERO_FLOOR {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                tail *= sign * e.powi(-(k as i32)) * q.powf(-(k * (k + 1)) as f64 / 2.0);
            } else {
                tail *= qpochhammer(ec * f, base, k)?
                    / (qpochhammer(ec * q / f, base, k)? * f.powi(k as i32));
            }
        }
        let mass = head * tail;
        let location = 0.5 * (yk + 1.0 / yk);
        if mass.im.abs() > 1e-12 * mass.norm() || mass.re <= 0.0 {
            return Err(MeasureError::NegativeAtomMass {
                location,
                value: mass,
            });
        }
        if (yk * yk - 1.0).abs() < 1e-6 {
            delicate.push(atoms.len());
        }
        atoms.push(Atom {
            location,
            mass: mass.re,
        });
        k += 1;
    }
    Ok((atoms, delicate))
}

fn normalized_density(ps: &[Complex64; 4], base: QBase) -> Result<Density, MeasureError> {
    let mut head = qpochhammer_inf(Complex64::new(base.get(), 0.0), base, INF_TOL);
    for i in 0..4 {
        for j in (i + 1)..4 {
            head *= qpochhammer_inf(ps[i] * ps[j], base, INF_TOL);
        }
    }
    let full_product: Complex64 = ps.iter().product();
    head /= qpochhammer_inf(full_product, base, INF_TOL);
    if head.im.abs() > 1e-10 * head.norm() || head.re <= 0.0 {
        return Err(MeasureError::Regime {
            message: format!("the density normalization must be positive real, got {head}"),
        });
    }
    let pref = head.re / (2.0 * PI);
    let ps = *ps;
    Ok(Box::new(move |theta| {
        let eit = Complex64::from_polar(1.0, theta);
        let numerator = qpochhammer_inf(eit * eit, base, INF_TOL);
        let mut denominator = Complex64::new(1.0, 0.0);
        for p in ps {
            denominator *= qpochhammer_inf(p * eit, base, INF_TOL);
        }
        pref * (numerator / denominator).norm_sqr()
    }))
}
