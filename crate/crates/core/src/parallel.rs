//! Data-parallel helpers with a sequential fallback.
//!
//! Reductions split the input into fixed-size chunks and combine the chunk
//! results in index order, so the parallel and sequential paths return
//! bit-identical sums.

use std::ops::Add;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Number of items summed per chunk in [`chunked_sum`].
pub const CHUNK: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether work will actually be spread across threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// `items.iter().map(f).collect()`, in parallel when enabled.
pub fn map_collect<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// `(0..n).map(f).collect()`, in parallel when enabled.
pub fn map_range<R, F>(exec: Execution, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

/// Deterministic sum of `f(i)` over `0..n`.
pub fn chunked_sum<R, F>(exec: Execution, n: usize, zero: R, f: F) -> R
where
    R: Add<Output = R> + Clone + Send + Sync,
    F: Fn(usize) -> R + Sync + Send,
{
    let chunks = n.div_ceil(CHUNK);
    let partial = map_range(exec, chunks, |c| {
        let lo = c * CHUNK;
        let hi = (lo + CHUNK).min(n);
        (lo..hi).fold(zero.clone(), |acc, i| acc + f(i))
    });
    partial.into_iter().fold(zero, |acc, p| acc + p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums_match_bitwise() {
        let f = |i: usize| ((i as f64) * 0.37).sin() / (1.0 + i as f64);
        let a = chunked_sum(Execution::Sequential, 10_000, 0.0, f);
        let b = chunked_sum(Execution::Parallel, 10_000, 0.0, f);
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn map_preserves_order() {
        let v: Vec<usize> = (0..1000).collect();
        let out = map_collect(Execution::Parallel, &v, |x| x * 2);
        assert!(out.iter().enumerate().all(|(i, &y)| y == 2 * i));
    }
}
