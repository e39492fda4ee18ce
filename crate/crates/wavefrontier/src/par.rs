//! Thin seam between the data-parallel and sequential execution paths.
//!
//! Everything hot in this crate is an embarrassingly parallel map over grid
//! indices, so one helper covers it. With the `parallel` feature (default)
//! `map_range` fans out over rayon; without it the same call is a plain loop.
//! `map_range_seq` is always sequential — it is the reference path the
//! benchmarks compare against, and the one debug builds of the verification
//! suites use when bisecting a discrepancy.
//!
//! Both paths produce identical bytes: each output slot is written by exactly
//! one index, and any reductions downstream run over the collected `Vec` in
//! index order, so thread scheduling never reorders a floating-point sum.

/// Evaluate `f` on `0..n`, in parallel when the `parallel` feature is on.
#[cfg(feature = "parallel")]
pub fn map_range<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

/// Evaluate `f` on `0..n` sequentially (fallback build).
#[cfg(not(feature = "parallel"))]
pub fn map_range<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Always-sequential variant of [`map_range`], kept unconditionally so the
/// two paths can be diffed against each other in tests and benches.
pub fn map_range_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Pin the rayon pool to `threads` workers. Call at most once, before any
/// parallel work; later calls (or a pool someone else already built) are
/// reported as `false`. A no-op returning `true` in sequential builds.
pub fn configure_threads(threads: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree_bitwise() {
        // A mildly irregular computation: accumulation order inside each slot
        // is fixed, so the two paths must agree exactly, not just closely.
        let f = |i: usize| {
            let x = i as f64 * 0.1;
            (0..20).map(|k| (x + k as f64).sin()).sum::<f64>()
        };
        let a = map_range(257, f);
        let b = map_range_seq(257, f);
        assert_eq!(a, b);
    }

    #[test]
    fn empty_range_is_fine() {
        let v: Vec<f64> = map_range(0, |i| i as f64);
        assert!(v.is_empty());
    }
}
