//! Seeded draws of rational parameters.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::Rational;

/// Bound on numerator and denominator magnitudes.
pub const COMPONENT_BOUND: i64 = 9;

pub struct ParameterSampler {
    rng: ChaCha8Rng,
}

impl ParameterSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Numerator uniform in `[-9, 9]`, denominator uniform in `[-9, 9] \ {0}`.
    pub fn rational(&mut self) -> Rational {
        let num = self.rng.gen_range(-COMPONENT_BOUND..=COMPONENT_BOUND);
        let mut den = self.rng.gen_range(1..=2 * COMPONENT_BOUND);
        if den > COMPONENT_BOUND {
            den = COMPONENT_BOUND - den;
        }
        Rational::new(num, den).expect("nonzero denominator")
    }

    /// An `(a, b)` pair; `b` may be zero.
    pub fn pair(&mut self) -> (Rational, Rational) {
        let a = self.rational();
        let b = self.rational();
        (a, b)
    }

    /// An `(a, b)` pair with `b != 0`, redrawing `b` as needed.
    pub fn nonsingular_pair(&mut self) -> (Rational, Rational) {
        let a = self.rational();
        loop {
            let b = self.rational();
            if !b.is_zero() {
                return (a, b);
            }
        }
    }
}

pub fn random_pairs(seed: u64, count: usize) -> Vec<(Rational, Rational)> {
    let mut sampler = ParameterSampler::new(seed);
    (0..count).map(|_| sampler.pair()).collect()
}

pub fn random_nonsingular_pairs(seed: u64, count: usize) -> Vec<(Rational, Rational)> {
    let mut sampler = ParameterSampler::new(seed);
    (0..count).map(|_| sampler.nonsingular_pair()).collect()
}
