//! Parallel execution helpers with a sequential fallback.
//!
//! All tuple scans in the crate go through these functions. With the `parallel`
//! feature (default) they fan out over rayon; without it they are plain loops.
//! The sequential variants are always available so callers (and benches) can
//! compare both paths in a single build.
//!
//! Determinism contract: `map_indexed` writes into pre-assigned slots and
//! `find_map_first` returns the match with the smallest index, so results do
//! not depend on thread scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..len`, preserving index order in the output.
#[cfg(feature = "parallel")]
pub fn map_indexed<T: Send, F: Fn(usize) -> T + Sync + Send>(len: usize, f: F) -> Vec<T> {
    (0..len).into_par_iter().map(f).collect()
}

/// Maps `f` over `0..len`, preserving index order in the output.
#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T: Send, F: Fn(usize) -> T + Sync + Send>(len: usize, f: F) -> Vec<T> {
    map_indexed_seq(len, f)
}

/// Sequential twin of [`map_indexed`].
pub fn map_indexed_seq<T, F: Fn(usize) -> T>(len: usize, f: F) -> Vec<T> {
    (0..len).map(f).collect()
}

/// Returns the `Some` result of `f` at the smallest index, if any.
#[cfg(feature = "parallel")]
pub fn find_map_first<T: Send, F: Fn(usize) -> Option<T> + Sync + Send>(len: usize, f: F) -> Option<T> {
    (0..len).into_par_iter().find_map_first(f)
}

/// Returns the `Some` result of `f` at the smallest index, if any.
#[cfg(not(feature = "parallel"))]
pub fn find_map_first<T: Send, F: Fn(usize) -> Option<T> + Sync + Send>(len: usize, f: F) -> Option<T> {
    find_map_first_seq(len, f)
}

/// Sequential twin of [`find_map_first`].
pub fn find_map_first_seq<T, F: Fn(usize) -> Option<T>>(len: usize, f: F) -> Option<T> {
    (0..len).find_map(f)
}

/// Decodes `index` as `k` base-`n` digits, most significant first.
pub fn decode_tuple(mut index: usize, n: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0usize; k];
    for slot in (0..k).rev() {
        out[slot] = index % n;
        index /= n;
    }
    out
}

/// Number of `k`-tuples over `0..n`.
pub fn tuple_count(n: usize, k: usize) -> usize {
    n.pow(k as u32)
}
