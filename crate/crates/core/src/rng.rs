//! Seeded random source.
//!
//! All randomized procedures draw from xoshiro256** (Blackman and Vigna),
//! seeded from a single `u64` through SplitMix64, exactly as
//! `rand_xoshiro::Xoshiro256StarStar::seed_from_u64` does. The derived
//! primitives below are fixed here rather than delegated to `rand`'s
//! distributions so the stream of decisions can be reproduced in any
//! language from the same seed:
//!
//! * [`SeededRng::below`]: Lemire's multiply-shift with rejection on the
//!   low 64 bits of the 128-bit product.
//! * [`SeededRng::unit`]: the top 53 bits of one output scaled by `2^-53`.
//! * [`derive_seed`]: the first output of a generator seeded with
//!   `seed + index` (wrapping).

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

#[derive(Debug, Clone)]
pub struct SeededRng(Xoshiro256StarStar);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(Xoshiro256StarStar::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `0..n`. `n` must be nonzero.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "below(0)");
        let threshold = n.wrapping_neg() % n;
        loop {
            let m = (self.next_u64() as u128) * (n as u128);
            if (m as u64) >= threshold {
                return (m >> 64) as u64;
            }
        }
    }

    /// Uniform float in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// In-place Fisher–Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

/// Per-trial seed for trial `index` of a run seeded with `seed`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    SeededRng::new(seed.wrapping_add(index)).next_u64()
}
