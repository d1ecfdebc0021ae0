use num_complex::Complex64;

use crate::error::QSeriesError;

/// Deformation base held strictly inside (0, 1).
///
/// Callers working in an effective base q² construct a second `QBase` with
/// [`QBase::squared`]; bases q⁻¹ and q⁻² never enter the engine directly —
/// the inverse-base families are rewritten into base-q formulas before any
/// series is summed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QBase(f64);

impl QBase {
    /// # Errors
    ///
    /// Returns [`QSeriesError::InvalidBase`] unless `0 < q < 1` and `q` is finite.
    pub fn new(q: f64) -> Result<Self, QSeriesError> {
        if q.is_finite() && q > 0.0 && q < 1.0 {
            Ok(Self(q))
        } else {
            Err(QSeriesError::InvalidBase(q))
        }
    }

    #[must_use]
    pub fn get(self) -> f64 {
        self.0
    }

    /// The base q², still inside (0, 1).
    #[must_use]
    pub fn squared(self) -> Self {
        Self(self.0 * self.0)
    }

    /// q^n for integer n (n may be negative).
    #[must_use]
    pub fn powi(self, n: i32) -> f64 {
        self.0.powi(n)
    }

    /// q^e for real e.
    #[must_use]
    pub fn powf(self, e: f64) -> f64 {
        self.0.powf(e)
    }

    /// q^w for complex w, via the real logarithm of q.
    #[must_use]
    pub fn powc(self, w: Complex64) -> Complex64 {
        (w * self.0.ln()).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bases_outside_unit_interval() {
        assert!(QBase::new(0.5).is_ok());
        for bad in [0.0, 1.0, -0.3, 1.7, f64::NAN, f64::INFINITY] {
            assert!(QBase::new(bad).is_err(), "q = {bad} must be rejected");
        }
    }

    #[test]
    fn complex_power_matches_real_power_on_the_real_axis() {
        let q = QBase::new(0.37).unwrap();
        let w = Complex64::new(2.5, 0.0);
        let got = q.powc(w);
        assert!((got.re - q.powf(2.5)).abs() < 1e-15);
        assert!(got.im.abs() < 1e-15);
    }

    #[test]
    fn complex_power_of_imaginary_exponent_has_unit_modulus() {
        let q = QBase::new(0.5).unwrap();
        let w = Complex64::new(0.0, 1.4);
        assert!((q.powc(w).norm() - 1.0).abs() < 1e-14);
    }
}
