//! Edge coins. Pair `t` (in row-major order over `i < j`) reads the `t`-th
//! 64-bit word of a ChaCha8 stream keyed by the sample seed, so any pair can
//! be drawn independently of the others.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Row-major index of the pair `{i, j}`, `i < j < n`.
pub fn pair_index(n: usize, i: usize, j: usize) -> u64 {
    debug_assert!(i < j && j < n);
    let (i, j, n) = (i as u64, j as u64, n as u64);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Uniform in `[0, 1)` for pair `index` under `seed`.
pub fn pair_uniform(seed: u64, index: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_word_pos(2 * u128::from(index));
    to_unit(rng.next_u64())
}

pub(crate) struct PairStream(ChaCha8Rng);

impl PairStream {
    pub fn new(seed: u64) -> Self {
        PairStream(ChaCha8Rng::seed_from_u64(seed))
    }

    /// The uniform for the next pair index.
    pub fn next_uniform(&mut self) -> f64 {
        to_unit(self.0.next_u64())
    }
}

fn to_unit(word: u64) -> f64 {
    (word >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}
