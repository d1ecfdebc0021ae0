use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded draw helper so every sweep is reproducible from a single u64.
pub struct Draw(ChaCha8Rng);

impl Draw {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.0.next_u64() % ((hi - lo + 1) as u64)) as i64
    }

    pub fn complex_in_disk(&mut self, radius: f64) -> Complex64 {
        loop {
            let re = self.range(-radius, radius);
            let im = self.range(-radius, radius);
            if re * re + im * im <= radius * radius {
                return Complex64::new(re, im);
            }
        }
    }
}

pub fn rel_err(got: Complex64, want: Complex64) -> f64 {
    let scale = got.norm().max(want.norm());
    if scale == 0.0 {
        0.0
    } else {
        (got - want).norm() / scale
    }
}
