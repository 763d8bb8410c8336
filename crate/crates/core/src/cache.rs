//! A shared bound on the size of the internal memo tables.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::atomic::{AtomicUsize, Ordering};

static LIMIT: AtomicUsize = AtomicUsize::new(usize::MAX);

/// Bound every memo table to at most `n` entries; a full table is cleared
/// before the next insertion. Zero disables memoization.
pub fn set_cache_limit(n: usize) {
    LIMIT.store(n, Ordering::Relaxed);
}

pub fn cache_limit() -> usize {
    LIMIT.load(Ordering::Relaxed)
}

pub(crate) fn insert<K: Hash + Eq, V>(map: &mut HashMap<K, V>, k: K, v: V) {
    let limit = cache_limit();
    if limit == 0 {
        return;
    }
    if map.len() >= limit {
        map.clear();
    }
    map.insert(k, v);
}
