//! Data-parallel map used by the sweeps and fuzz drivers.
//!
//! With the `parallel` feature (on by default) work is spread over the rayon
//! thread pool; without it, or when a caller asks for sequential execution,
//! the same closure runs in a plain loop. Output order always follows the
//! index order, so results do not depend on the execution mode.

/// Whether this build can run work in parallel.
pub const PARALLEL_AVAILABLE: bool = cfg!(feature = "parallel");

/// Evaluates `f(0), .., f(n - 1)` and collects the results in index order.
pub fn map_indexed<R, F>(n: usize, parallel: bool, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = parallel;
    (0..n).map(f).collect()
}

/// Applies `f` to every element of `items`, preserving order.
pub fn map_slice<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_indexed(items.len(), parallel, |i| f(&items[i]))
}
