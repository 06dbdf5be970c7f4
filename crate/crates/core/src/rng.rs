//! Seeded random source for every generator in this crate.
//!
//! The stream is pinned so that other implementations can reproduce graphs
//! bit for bit:
//!
//! * core: ChaCha with 8 rounds (`rand_chacha::ChaCha8Rng`), keyed by
//!   `seed_from_u64(seed)` (PCG32 expansion of the 64-bit seed into the
//!   256-bit key, as specified by `rand_core`);
//! * stream: `set_stream(stream)`. A single generator call uses stream 0;
//!   ensemble member `s` (Monte-Carlo sample, etc.) uses stream `s`;
//! * `next_f64`: top 53 bits of `next_u64`, times `2^-53`;
//! * `below(n)`: rejection sampling on `next_u64` against the largest
//!   multiple of `n`, then `% n`;
//! * `bernoulli(p)`: `next_f64() < p`.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

#[derive(Debug, Clone)]
pub struct GraphRng {
    inner: ChaCha8Rng,
}

impl GraphRng {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        GraphRng { inner }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `0..n`. Panics if `n == 0`.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "below(0)");
        let n = n as u64;
        let zone = u64::MAX - (u64::MAX % n);
        loop {
            let x = self.next_u64();
            if x < zone {
                return (x % n) as usize;
            }
        }
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }
}
