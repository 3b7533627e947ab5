//! Seeded Gaussian streams on xoshiro256++.
//!
//! Seeds are expanded with SplitMix64 (`seed_from_u64`); independent
//! substreams are obtained with the generator's `jump` function, so a
//! `(seed, substream)` pair reproduces the same variates on any platform.
//! Normal variates use the Box-Muller transform.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::numeric::{Complex, ComplexMatrix};

#[derive(Debug, Clone)]
pub struct GaussianStream {
    rng: Xoshiro256PlusPlus,
    spare: Option<f64>,
}

impl GaussianStream {
    pub fn new(seed: u64) -> Self {
        Self::substream(seed, 0)
    }

    /// Stream `index` of `seed`: the base generator advanced by `index` jumps
    /// of 2^128 steps each.
    pub fn substream(seed: u64, index: u32) -> Self {
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
        for _ in 0..index {
            rng.jump();
        }
        Self { rng, spare: None }
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    pub fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform on the open interval `(lo, hi)`.
    pub fn uniform_open(&mut self, lo: f64, hi: f64) -> f64 {
        loop {
            let u = self.uniform();
            if u > 0.0 {
                let x = lo + (hi - lo) * u;
                if x > lo && x < hi {
                    return x;
                }
            }
        }
    }

    pub fn gaussian(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        // u1 in (0, 1] keeps ln finite.
        let u1 = 1.0 - self.uniform();
        let u2 = self.uniform();
        let radius = (-2.0 * u1.ln()).sqrt();
        let angle = std::f64::consts::TAU * u2;
        self.spare = Some(radius * angle.sin());
        radius * angle.cos()
    }

    /// Independent standard normal real and imaginary parts.
    pub fn complex_gaussian(&mut self) -> Complex {
        let re = self.gaussian();
        let im = self.gaussian();
        Complex::new(re, im)
    }

    pub fn vector(&mut self, len: usize) -> Vec<Complex> {
        (0..len).map(|_| self.complex_gaussian()).collect()
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> ComplexMatrix {
        let data = (0..rows * cols).map(|_| self.complex_gaussian()).collect();
        ComplexMatrix::new(rows, cols, data).expect("gaussian entries are finite")
    }
}
