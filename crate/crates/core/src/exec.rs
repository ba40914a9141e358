//! Sequential or data-parallel evaluation of the inner loops.
//!
//! Parallel execution needs the `parallel` feature (on by default). Without
//! it, [`ExecMode::Parallel`] runs sequentially. Both modes produce
//! identical results: maps keep their order and reductions are exact
//! max/min folds.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

impl ExecMode {
    /// Whether this mode really runs on several workers in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == ExecMode::Parallel
    }
}

pub(crate) fn flat_map_range<T, F>(mode: ExecMode, range: Range<usize>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> Vec<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return range.into_par_iter().flat_map_iter(f).collect();
    }
    let _ = mode;
    range.flat_map(f).collect()
}

pub(crate) fn max_over_range<F>(mode: ExecMode, range: Range<usize>, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return range
            .into_par_iter()
            .map(f)
            .reduce(|| f64::NEG_INFINITY, f64::max);
    }
    let _ = mode;
    range.map(f).fold(f64::NEG_INFINITY, f64::max)
}

pub(crate) fn min_over_range<F>(mode: ExecMode, range: Range<usize>, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return range
            .into_par_iter()
            .map(f)
            .reduce(|| f64::INFINITY, f64::min);
    }
    let _ = mode;
    range.map(f).fold(f64::INFINITY, f64::min)
}
