//! Optional data parallelism.
//!
//! With the `parallel` feature (on by default) the helpers fan work out
//! over rayon when asked to at runtime; without it they always run
//! sequentially and the `parallel` argument is ignored. Results come back
//! in input order either way, so callers stay deterministic.

/// Whether this build can actually parallelize.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(feature = "parallel")]
pub(crate) fn maybe_par_map<T, U, F>(items: Vec<T>, parallel: bool, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    if parallel {
        items.into_par_iter().map(f).collect()
    } else {
        items.into_iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn maybe_par_map<T, U, F>(items: Vec<T>, _parallel: bool, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
