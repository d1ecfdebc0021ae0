use crate::error::MeasureError;
use crate::quadrature::QuadratureRule;
use num_complex::Complex64;
use std::fmt;

/// One discrete point of an orthogonality measure: a spectral location
/// x = μ(y) = (y + 1/y)/2 with |y| > 1 and the positive mass it carries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub location: f64,
    pub mass: f64,
}

/// θ-density of the continuous part of a measure, 1/2π included.
pub type Density = Box<dyn Fn(f64) -> f64 + Send + Sync>;

/// An orthogonality measure on the real line: an absolutely continuous
/// part supported on x = cos θ ∈ [−1, 1] plus a list of atoms outside,
///
/// ```text
/// ∫ f dm  =  ∫₀^π f(cos θ) ρ(θ) dθ  +  Σ_k f(x_k) m_k .
/// ```
///
/// The density is kept in the angle variable because that is where the
/// quadrature rules live; all normalization constants (including the 1/2π)
/// are folded into ρ, so a family orthonormal with respect to the measure
/// has Gram matrix exactly the identity.
pub struct Measure {
    /// θ-density of the continuous part; `None` for purely discrete
    /// measures.
    pub density: Option<Density>,
    /// Discrete part, ordered by lattice index.
    pub atoms: Vec<Atom>,
    /// Bound on the mass omitted by truncating the atom list: zero when
    /// the list is complete, infinite when the lattice carries unbounded
    /// total mass beyond the kept range.
    pub tail_bound: f64,
    /// Name of the family that produced this measure.
    pub family: &'static str,
    /// Indices into `atoms` whose lattice point sits within 10⁻⁶ of the
    /// band edge |y| = 1, where the mass is a delicate small difference.
    pub delicate_atoms: Vec<usize>,
}

impl fmt::Debug for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Measure")
            .field("family", &self.family)
            .field("continuous", &self.density.is_some())
            .field("atoms", &self.atoms)
            .field("tail_bound", &self.tail_bound)
            .field("delicate_atoms", &self.delicate_atoms)
            .finish()
    }
}

/// Integrate `f` against a measure: quadrature on the continuous part
/// plus the exact atom sum.
///
/// # Errors
///
/// Fails if the density produces a value that is not a finite nonnegative
/// real, or if the integrand fails at any node or atom (reported with the
/// point it failed at).
pub fn integrate<F>(
    mut f: F,
    measure: &Measure,
    rule: &QuadratureRule,
) -> Result<Complex64, MeasureError>
where
    F: FnMut(f64) -> Result<Complex64, MeasureError>,
{
    let mut total = Complex64::new(0.0, 0.0);
    if let Some(density) = &measure.density {
        for (&theta, &w) in rule.nodes().iter().zip(rule.weights()) {
            let rho = density(theta);
            if !rho.is_finite() || rho < 0.0 {
                return Err(MeasureError::NegativeDensity {
                    theta,
                    value: Complex64::new(rho, 0.0),
                });
            }
            let x = theta.cos();
            let value = f(x).map_err(|e| MeasureError::Node {
                x,
                source: Box::new(e),
            })?;
            total += value * (w * rho);
        }
    }
    for atom in &measure.atoms {
        let value = f(atom.location).map_err(|e| MeasureError::Node {
            x: atom.location,
            source: Box::new(e),
        })?;
        total += value * atom.mass;
    }
    Ok(total)
}

/// Square root of the local measure element at `x`: √ρ(θ) on the interval
/// (with x = cos θ), √m_k at an atom. This is the half-density factor that
/// coupling kernels are weighted with.
///
/// Atoms are matched within 10⁻⁹ relative distance of their location.
///
/// # Errors
///
/// Returns [`MeasureError::UnsupportedPoint`] when `x` lies outside
/// [−1, 1] and matches no atom (or lies inside but the measure has no
/// continuous part), and [`MeasureError::NegativeDensity`] if the density
/// misbehaves at θ(x).
pub fn dm_sqrt_factor(measure: &Measure, x: f64) -> Result<f64, MeasureError> {
    if x.abs() <= 1.0 {
        if let Some(density) = &measure.density {
            let theta = x.acos();
            let rho = density(theta);
            if !rho.is_finite() || rho < 0.0 {
                return Err(MeasureError::NegativeDensity {
                    theta,
                    value: Complex64::new(rho, 0.0),
                });
            }
            return Ok(rho.sqrt());
        }
    }
    for atom in &measure.atoms {
        if (x - atom.location).abs() <= 1e-9 * atom.location.abs().max(1.0) {
            return Ok(atom.mass.sqrt());
        }
    }
    Err(MeasureError::UnsupportedPoint { x })
}
