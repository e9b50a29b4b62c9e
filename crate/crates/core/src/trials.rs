//! Seeded batch runner for randomized trials.
//!
//! Trial `i` of a batch gets its own generator derived from `(seed, i)`, so
//! results do not depend on scheduling. With the `parallel` feature the batch
//! is spread over the rayon pool; otherwise it runs in order on the caller's
//! thread. Both paths return results in trial order.

use num_bigint::BigInt;

use crate::exactla::{IntMatrix, SplitMix64};

/// Generator for trial `index` of the batch seeded with `seed`.
pub fn trial_rng(seed: u64, index: u64) -> SplitMix64 {
    SplitMix64::new(SplitMix64::new(seed.wrapping_add(index)).next_u64())
}

pub fn run_trials_sequential<T, F>(count: usize, seed: u64, f: F) -> Vec<T>
where
    F: Fn(usize, SplitMix64) -> T,
{
    (0..count).map(|i| f(i, trial_rng(seed, i as u64))).collect()
}

#[cfg(feature = "parallel")]
pub fn run_trials_parallel<T, F>(count: usize, seed: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, SplitMix64) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..count)
        .into_par_iter()
        .map(|i| f(i, trial_rng(seed, i as u64)))
        .collect()
}

/// Parallel when the `parallel` feature is on, sequential otherwise.
pub fn run_trials<T, F>(count: usize, seed: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, SplitMix64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        run_trials_parallel(count, seed, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_trials_sequential(count, seed, f)
    }
}

/// Random matrix with `1..=max_rows` rows, `1..=max_cols` columns and entries
/// in `[-bound, bound]`.
///
/// Uniform entries almost always give unit divisors, so each matrix also draws
/// a common factor `k` (entries become `k * x` with `|k * x| <= bound`) and a
/// zero density, which produces rank drops and nontrivial torsion.
pub fn random_matrix(rng: &mut SplitMix64, max_rows: usize, max_cols: usize, bound: i64) -> IntMatrix {
    let rows = 1 + rng.below(max_rows as u64) as usize;
    let cols = 1 + rng.below(max_cols as u64) as usize;
    random_matrix_of_shape(rng, rows, cols, bound)
}

pub fn random_matrix_of_shape(rng: &mut SplitMix64, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let factor = match rng.below(4) {
        0 | 1 => 1,
        2 => 2.min(bound.max(1)),
        _ => 3.min(bound.max(1)),
    };
    let zero_percent = [0, 30, 60][rng.below(3) as usize];
    let reach = bound / factor;
    let entries = (0..rows * cols)
        .map(|_| {
            if rng.below(100) < zero_percent {
                BigInt::from(0)
            } else {
                BigInt::from(factor * rng.range_i64(-reach, reach))
            }
        })
        .collect();
    IntMatrix::from_vec(rows, cols, entries).expect("entry count matches shape")
}
