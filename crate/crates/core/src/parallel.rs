//! Deterministic trial batches, run on the rayon pool or sequentially.
//!
//! Every trial draws from its own generator seeded by `(seed, index)`, so the
//! results do not depend on the execution mode or the thread count.

use rand_chacha::ChaCha8Rng;

use crate::random::rng_from_seed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether the parallel backend was compiled in.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    /// Mode that will actually be used.
    pub fn effective(self) -> Self {
        if Self::parallel_available() {
            self
        } else {
            Execution::Sequential
        }
    }
}

/// SplitMix64 mix of the batch seed and the trial index.
pub fn trial_seed(seed: u64, index: usize) -> u64 {
    let mut z = seed ^ (index as u64).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Runs `count` trials and returns their results in index order.
pub fn run_trials<T, F>(execution: Execution, seed: u64, count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, &mut ChaCha8Rng) -> T + Sync,
{
    let trial = |i: usize| f(i, &mut rng_from_seed(trial_seed(seed, i)));
    match execution.effective() {
        Execution::Sequential => (0..count).map(trial).collect(),
        Execution::Parallel => parallel_map(count, trial),
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T: Send>(count: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    use rayon::prelude::*;
    (0..count).into_par_iter().map(|i| f(i)).collect()
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T: Send>(count: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    (0..count).map(f).collect()
}
