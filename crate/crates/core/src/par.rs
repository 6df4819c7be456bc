//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature these run on the current rayon pool, otherwise
//! (or when [`Execution::Sequential`] is requested) they run inline. Results are
//! always assembled in index order, and floating point reductions use fixed
//! block boundaries, so outputs are identical in both modes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a data-parallel loop should be scheduled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    /// Use rayon when the `parallel` feature is compiled in.
    #[default]
    Parallel,
    Sequential,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

const SUM_BLOCK: usize = 4096;

/// `(0..count).map(f).collect()`, possibly in parallel.
pub fn map_indexed<T, F>(count: usize, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..count).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..count).map(f).collect()
}

/// Runs `f(index)` for every index in `0..count`.
pub fn for_each_index<F>(count: usize, exec: Execution, f: F)
where
    F: Fn(usize) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        (0..count).into_par_iter().for_each(f);
        return;
    }
    let _ = exec;
    (0..count).for_each(f);
}

/// Overwrites `out[i] = f(i)`.
pub fn fill<T, F>(out: &mut [T], exec: Execution, f: F)
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        out.par_iter_mut().enumerate().for_each(|(i, x)| *x = f(i));
        return;
    }
    let _ = exec;
    out.iter_mut().enumerate().for_each(|(i, x)| *x = f(i));
}

/// Replaces `out[i]` with `f(i, out[i])`.
pub fn update<T, F>(out: &mut [T], exec: Execution, f: F)
where
    T: Send + Copy,
    F: Fn(usize, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        out.par_iter_mut()
            .enumerate()
            .for_each(|(i, x)| *x = f(i, *x));
        return;
    }
    let _ = exec;
    out.iter_mut().enumerate().for_each(|(i, x)| *x = f(i, *x));
}

/// Calls `f(chunk_index, chunk)` for consecutive `chunk_size` pieces of `out`.
pub fn for_each_chunk_mut<T, F>(out: &mut [T], chunk_size: usize, exec: Execution, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync + Send,
{
    assert!(chunk_size > 0, "chunk size must be positive");
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        out.par_chunks_mut(chunk_size)
            .enumerate()
            .for_each(|(c, chunk)| f(c, chunk));
        return;
    }
    let _ = exec;
    out.chunks_mut(chunk_size)
        .enumerate()
        .for_each(|(c, chunk)| f(c, chunk));
}

/// Sum of `f(i)` over `0..count` with a reduction order that does not depend
/// on the thread count.
pub fn sum<F>(count: usize, exec: Execution, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    let blocks = count.div_ceil(SUM_BLOCK);
    let partial = map_indexed(blocks, exec, |b| {
        let end = ((b + 1) * SUM_BLOCK).min(count);
        (b * SUM_BLOCK..end).map(&f).sum::<f64>()
    });
    partial.into_iter().sum()
}

/// Sorts in place (unstable); parallel when enabled.
pub fn sort_unstable<T: Ord + Send>(values: &mut [T], exec: Execution) {
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        values.par_sort_unstable();
        return;
    }
    let _ = exec;
    values.sort_unstable();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_matches_across_modes() {
        let f = |i: usize| 1.0 / (1.0 + i as f64);
        let a = sum(100_000, Execution::Parallel, f);
        let b = sum(100_000, Execution::Sequential, f);
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn chunks_see_their_index() {
        let mut v = vec![0usize; 10];
        for_each_chunk_mut(&mut v, 3, Execution::Parallel, |c, chunk| {
            chunk.iter_mut().for_each(|x| *x = c)
        });
        assert_eq!(v, vec![0, 0, 0, 1, 1, 1, 2, 2, 2, 3]);
    }
}
