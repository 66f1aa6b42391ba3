//! Seeded uniform stream used for inverse-transform sampling.
//!
//! The generator is xoshiro256** (Blackman & Vigna) with its 256-bit state
//! expanded from the 64-bit seed by SplitMix64, exactly as
//! `rand_xoshiro::Xoshiro256StarStar::seed_from_u64` does. A uniform variate
//! is formed from the top 53 bits of each output: `(x >> 11) * 2^-53`, which
//! lies in `[0, 1)`. Every seed, including 0, is legal.
//!
//! Reference vector for seed 0 (first three raw outputs):
//!
//! ```text
//! 0x99ec5f36cb75f2b4
//! 0xbf6e1f784956452a
//! 0x1a5f849d4933e6e0
//! ```

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

const UNIT_SCALE: f64 = 1.0 / (1u64 << 53) as f64;

/// Deterministic stream of uniform `[0, 1)` variates.
#[derive(Debug, Clone)]
pub struct UnitStream {
    inner: Xoshiro256StarStar,
}

impl UnitStream {
    pub fn new(seed: u64) -> Self {
        Self {
            inner: Xoshiro256StarStar::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    pub fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * UNIT_SCALE
    }
}

impl Iterator for UnitStream {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        Some(self.next_unit())
    }
}
