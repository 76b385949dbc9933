//! Execution strategy for the data-parallel sweeps (enumeration, exhaustive
//! checks). With the `parallel` feature disabled every strategy runs
//! sequentially.

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

/// Maps `f` over `range`, keeping the output in index order.
pub fn map_range<R, F>(exec: Exec, range: std::ops::Range<u64>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> R + Send + Sync,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => range.into_par_iter().map(f).collect(),
        _ => range.map(f).collect(),
    }
}

/// Keeps the items of `range` mapped through `f` that come back `Some`, in
/// index order.
pub fn filter_map_range<R, F>(exec: Exec, range: std::ops::Range<u64>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Send + Sync,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => range.into_par_iter().filter_map(f).collect(),
        _ => range.filter_map(f).collect(),
    }
}

pub fn count_range<F>(exec: Exec, range: std::ops::Range<u64>, f: F) -> u64
where
    F: Fn(u64) -> bool + Send + Sync,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => range.into_par_iter().filter(|&i| f(i)).count() as u64,
        _ => range.filter(|&i| f(i)).count() as u64,
    }
}

/// Maps `f` over a slice, keeping the output in slice order.
pub fn map_slice<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Send + Sync,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}
