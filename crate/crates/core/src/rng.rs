//! Random streams used by the engines.
//!
//! Every run owns one [`SeededStream`] (ChaCha8, seeded from a `u64`), so
//! results are reproducible across platforms and thread counts.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Source of uniform draws consumed by the swarm operators.
pub trait UnitSource {
    /// Uniform real in `[0, 1)`.
    fn unit(&mut self) -> f64;

    /// Uniform index in `0..n`. `n` must be positive.
    fn index(&mut self, n: usize) -> usize {
        ((self.unit() * n as f64) as usize).min(n - 1)
    }

    /// Uniform real in `[lo, hi)`.
    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }
}

impl<R: RngCore> UnitSource for R {
    fn unit(&mut self) -> f64 {
        self.gen::<f64>()
    }

    fn index(&mut self, n: usize) -> usize {
        self.gen_range(0..n)
    }
}

pub type SeededStream = ChaCha8Rng;

pub fn stream_from_seed(seed: u64) -> SeededStream {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Returns the same value for every draw and counts how many were taken.
#[cfg(test)]
#[derive(Debug)]
pub(crate) struct FixedUnit {
    pub value: f64,
    pub draws: usize,
}

#[cfg(test)]
impl FixedUnit {
    pub fn new(value: f64) -> Self {
        Self { value, draws: 0 }
    }
}

#[cfg(test)]
impl UnitSource for FixedUnit {
    fn unit(&mut self) -> f64 {
        self.draws += 1;
        self.value
    }
}
