//! Thin dispatch layer between the rayon-backed data-parallel code paths and
//! their sequential fallbacks (crate feature `parallel`, on by default).

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Ordered parallel map.
#[cfg(feature = "parallel")]
pub(crate) fn par_map<T: Sync, U: Send, F: Fn(&T) -> U + Sync + Send>(items: &[T], f: F) -> Vec<U> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn par_map<T, U, F: Fn(&T) -> U>(items: &[T], f: F) -> Vec<U> {
    items.iter().map(f).collect()
}

/// Ordered parallel map over an index range.
#[cfg(feature = "parallel")]
pub(crate) fn par_map_range<U: Send, F: Fn(usize) -> U + Sync + Send>(n: usize, f: F) -> Vec<U> {
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn par_map_range<U, F: Fn(usize) -> U>(n: usize, f: F) -> Vec<U> {
    (0..n).map(f).collect()
}

/// Fold an index range in chunks and merge: used for accumulator-style
/// workloads (class-matrix counting). Deterministic because the merge is
/// performed in chunk order.
#[cfg(feature = "parallel")]
pub(crate) fn fold_range_chunks<S, I, F>(n: usize, chunk: usize, init: I, fold: F) -> Vec<S>
where
    S: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, usize) + Sync + Send,
{
    let bounds: Vec<(usize, usize)> = (0..n)
        .step_by(chunk.max(1))
        .map(|lo| (lo, (lo + chunk).min(n)))
        .collect();
    bounds
        .par_iter()
        .map(|&(lo, hi)| {
            let mut acc = init();
            for i in lo..hi {
                fold(&mut acc, i);
            }
            acc
        })
        .collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn fold_range_chunks<S, I, F>(n: usize, chunk: usize, init: I, fold: F) -> Vec<S>
where
    I: Fn() -> S,
    F: Fn(&mut S, usize),
{
    let mut out = Vec::new();
    let mut lo = 0;
    while lo < n {
        let hi = (lo + chunk.max(1)).min(n);
        let mut acc = init();
        for i in lo..hi {
            fold(&mut acc, i);
        }
        out.push(acc);
        lo = hi;
    }
    out
}
