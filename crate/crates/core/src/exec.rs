//! Execution mode for the data-parallel loops: fuzzing campaigns, exhaustive sweeps and
//! per-size model search.
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] runs on the rayon pool.
//! Without it every mode runs sequentially. Results never depend on the mode: work items are
//! indexed and collected in index order, and random streams are derived from the index.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Whether this mode actually fans out across threads in the current build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// `f` applied to every index in `range`, in index order.
    pub fn map_range<T, F>(self, range: Range<u64>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().map(f).collect();
        }
        range.map(f).collect()
    }

    /// `f` applied to every item, in order.
    pub fn map_slice<I, T, F>(self, items: &[I], f: F) -> Vec<T>
    where
        I: Sync,
        T: Send,
        F: Fn(&I) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Number of indices in `range` satisfying `pred`.
    pub fn count_range<F>(self, range: Range<u64>, pred: F) -> u64
    where
        F: Fn(u64) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().filter(|i| pred(*i)).count() as u64;
        }
        range.filter(|i| pred(*i)).count() as u64
    }

    /// The smallest index in `range` for which `f` returns `Some`, with its value.
    pub fn find_first<T, F>(self, range: Range<u64>, f: F) -> Option<(u64, T)>
    where
        T: Send,
        F: Fn(u64) -> Option<T> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().filter_map(|i| f(i).map(|v| (i, v))).min_by_key(|(i, _)| *i);
        }
        range.into_iter().find_map(|i| f(i).map(|v| (i, v)))
    }
}

/// Derives an independent, reproducible seed for work item `index` of a campaign seeded by `seed`.
pub fn item_seed(seed: u64, index: u64) -> u64 {
    // splitmix64 finaliser
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
