//! Data-parallel helpers with a sequential fallback.
//!
//! With the default `parallel` feature, the mappers below run on rayon.
//! Compiled with `--no-default-features` everything is sequential. The
//! runtime switch [`force_sequential`] exists so benchmarks can compare both
//! lanes within a single binary; results are bit-identical either way because
//! callers reduce with order-independent, index-tie-broken folds.

use std::sync::atomic::{AtomicBool, Ordering};

static FORCE_SEQ: AtomicBool = AtomicBool::new(false);

/// Globally disable the rayon lane (no-op without the `parallel` feature).
pub fn force_sequential(on: bool) {
    FORCE_SEQ.store(on, Ordering::SeqCst);
}

pub fn is_sequential() -> bool {
    if cfg!(not(feature = "parallel")) {
        return true;
    }
    FORCE_SEQ.load(Ordering::SeqCst)
}

/// Map `f` over `0..n` collecting results in index order.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if !is_sequential() {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    (0..n).map(f).collect()
}

/// Map `f` over a slice collecting results in index order.
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if !is_sequential() {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
    }
    items.iter().map(f).collect()
}
