use crate::error::MeasureError;
use num_complex::Complex64;
use std::f64::consts::PI;

/// A fixed quadrature rule on the angular interval [0, π],
///
/// ```text
/// ∫₀^π g(θ) dθ  ≈  Σ_j w_j g(θ_j),      θ_j ∈ (0, π),  w_j > 0.
/// ```
///
/// Two constructions are provided. [`QuadratureRule::trigonometric`] is
/// the midpoint rule in θ; it integrates cos(kθ) exactly for every
/// 0 ≤ k ≤ 2n − 1 and therefore converges spectrally for densities of the
/// form |·|², which extend to smooth even 2π-periodic functions of θ.
/// [`QuadratureRule::legendre`] is Gauss–Legendre mapped onto [0, π]; it
/// is the right tool for half-density integrands carrying a single
/// modulus |·|, whose even periodic extension has a kink at θ = 0, π that
/// defeats the midpoint rule's symmetry argument.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    /// Midpoint rule with `n` nodes: θ_j = (2j − 1)π/(2n), w_j = π/n.
    ///
    /// # Panics
    ///
    /// Panics when `n` is zero.
    pub fn trigonometric(n: usize) -> Self {
        assert!(n > 0, "quadrature rule needs at least one node");
        let h = PI / n as f64;
        let nodes = (1..=n).map(|j| (2 * j - 1) as f64 * h / 2.0).collect();
        let weights = vec![h; n];
        Self { nodes, weights }
    }

    /// Gauss–Legendre rule with `n` nodes, mapped from [−1, 1] onto
    /// [0, π] via θ = (x + 1)π/2. Exact for polynomials in θ up to
    /// degree 2n − 1.
    ///
    /// # Panics
    ///
    /// Panics when `n` is zero.
    pub fn legendre(n: usize) -> Self {
        assert!(n > 0, "quadrature rule needs at least one node");
        let mut xs = vec![0.0; n];
        let mut ws = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            let mut t = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..60 {
                let (p, dp) = legendre_value_derivative(n, t);
                let step = p / dp;
                t -= step;
                if step.abs() <= 1e-16 * t.abs().max(1.0) {
                    break;
                }
            }
            let (_, dp) = legendre_value_derivative(n, t);
            let w = 2.0 / ((1.0 - t * t) * dp * dp);
            xs[i] = -t;
            xs[n - 1 - i] = t;
            ws[i] = w;
            ws[n - 1 - i] = w;
        }
        let nodes = xs.iter().map(|&x| (x + 1.0) * PI / 2.0).collect();
        let weights = ws.iter().map(|&w| w * PI / 2.0).collect();
        Self { nodes, weights }
    }

    /// Angular nodes in increasing order.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Weights matching [`QuadratureRule::nodes`] position by position.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// ∫₀^π g(θ) dθ for a bare angular integrand, no measure attached.
    ///
    /// # Errors
    ///
    /// Propagates the first integrand failure, wrapped with the node it
    /// occurred at.
    pub fn integrate_theta<F>(&self, mut g: F) -> Result<Complex64, MeasureError>
    where
        F: FnMut(f64) -> Result<Complex64, MeasureError>,
    {
        let mut total = Complex64::new(0.0, 0.0);
        for (&theta, &w) in self.nodes.iter().zip(&self.weights) {
            let value = g(theta).map_err(|e| MeasureError::Node {
                x: theta,
                source: Box::new(e),
            })?;
            total += value * w;
        }
        Ok(total)
    }
}

/// (P_n(x), P_n′(x)) by the three-term recurrence
/// (k + 1) P_{k+1} = (2k + 1) x P_k − k P_{k−1}.
fn legendre_value_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut prev = 1.0;
    let mut here = x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * here - kf * prev) / (kf + 1.0);
        prev = here;
        here = next;
    }
    let dp = n as f64 * (x * here - prev) / (x * x - 1.0);
    (here, dp)
}
