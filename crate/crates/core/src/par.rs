//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) [`Execution::Parallel`] runs on the
//! rayon global pool; without it every call runs sequentially. Results are
//! identical either way: maps preserve order and reductions break ties by
//! the smallest index.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// `(start..end).map(f).collect()`, in order.
pub fn map_range<T, F>(exec: Execution, start: usize, end: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (start..end).into_par_iter().map(f).collect(),
        _ => (start..end).map(f).collect(),
    }
}

/// Index in `0..len` with the largest key; ties go to the smallest index.
/// Indices where `key` returns `None` are skipped.
pub fn argmax<K, F>(exec: Execution, len: usize, key: F) -> Option<(K, usize)>
where
    K: Ord + Send,
    F: Fn(usize) -> Option<K> + Sync + Send,
{
    fn better<K: Ord>(a: Option<(K, usize)>, b: Option<(K, usize)>) -> Option<(K, usize)> {
        match (a, b) {
            (None, x) | (x, None) => x,
            (Some(a), Some(b)) => {
                if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                    Some(b)
                } else {
                    Some(a)
                }
            }
        }
    }
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..len)
            .into_par_iter()
            .map(|i| key(i).map(|k| (k, i)))
            .reduce(|| None, better),
        _ => (0..len).map(|i| key(i).map(|k| (k, i))).fold(None, better),
    }
}

/// Indices in `0..len` satisfying `pred`, ascending.
pub fn filter_indices<F>(exec: Execution, len: usize, pred: F) -> Vec<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..len).into_par_iter().filter(|&i| pred(i)).collect(),
        _ => (0..len).filter(|&i| pred(i)).collect(),
    }
}
