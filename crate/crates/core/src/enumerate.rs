//! Exhaustive generation of small graphs up to isomorphism, level by level:
//! the canonical representatives on n vertices are the deduplicated children
//! of the representatives on n-1 vertices, where a child adds one vertex
//! joined to an arbitrary neighbour subset. Deduplication uses canonical
//! graph6 keys; output order is the sorted key order, so runs are
//! deterministic.

use crate::canon::canonical_key;
use crate::graph::SimpleGraph;
use crate::graph6;
use crate::structure::is_2_connected;
use once_cell::sync::Lazy;
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, Mutex};

/// All graphs on n vertices up to isomorphism (canonical representatives,
/// sorted by canonical graph6 string). Practical for n <= 9.
pub fn enumerate_graphs(n: usize) -> Vec<SimpleGraph> {
    assert!(n >= 1, "need n >= 1");
    let mut level: BTreeSet<String> = BTreeSet::new();
    level.insert(canonical_key(&SimpleGraph::empty(1)));
    for m in 2..=n {
        level = extend_level(&level, m, |_| true);
    }
    level
        .iter()
        .map(|k| graph6::decode(k).expect("keys round-trip"))
        .collect()
}

fn extend_level(
    parents: &BTreeSet<String>,
    m: usize,
    keep: impl Fn(&SimpleGraph) -> bool + Sync,
) -> BTreeSet<String> {
    parents
        .par_iter()
        .map(|key| {
            let p = graph6::decode(key).expect("keys round-trip");
            let mut out = BTreeSet::new();
            let new = m - 1;
            for subset in 0..(1u64 << new) {
                let mut g = SimpleGraph::empty(m);
                for v in 0..new {
                    let row = p.neighbors(v);
                    for w in crate::graph::bits(row) {
                        if w > v {
                            g = g.with_edge(v, w);
                        }
                    }
                }
                for v in crate::graph::bits(subset) {
                    g = g.with_edge(v, new);
                }
                if keep(&g) {
                    out.insert(canonical_key(&g));
                }
            }
            out
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

/// Connected graphs on n vertices up to isomorphism.
pub fn enumerate_connected(n: usize) -> Vec<SimpleGraph> {
    enumerate_graphs(n)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}

/// 2-connected graphs on n vertices up to isomorphism, 3 <= n <= 10.
/// The final level filters before deduplicating, which keeps n = 9
/// affordable; n = 10 works but takes a long time.
pub fn enumerate_2connected(n: usize) -> Vec<SimpleGraph> {
    assert!((3..=10).contains(&n), "supported range is 3..=10");
    let mut level: BTreeSet<String> = BTreeSet::new();
    level.insert(canonical_key(&SimpleGraph::empty(1)));
    for m in 2..n {
        level = extend_level(&level, m, |_| true);
    }
    let last = extend_level(&level, n, is_2_connected);
    last.iter()
        .map(|k| graph6::decode(k).expect("keys round-trip"))
        .collect()
}

type Cache = Lazy<Mutex<BTreeMap<usize, Arc<Vec<SimpleGraph>>>>>;

fn cached(cache: &Cache, n: usize, compute: impl FnOnce() -> Vec<SimpleGraph>) -> Arc<Vec<SimpleGraph>> {
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return Arc::clone(hit);
    }
    // compute outside the lock: enumeration takes seconds at the top sizes
    let fresh = Arc::new(compute());
    Arc::clone(
        cache
            .lock()
            .unwrap()
            .entry(n)
            .or_insert(fresh),
    )
}

static ALL_CACHE: Cache = Lazy::new(|| Mutex::new(BTreeMap::new()));
static CONN_CACHE: Cache = Lazy::new(|| Mutex::new(BTreeMap::new()));
static TWO_CONN_CACHE: Cache = Lazy::new(|| Mutex::new(BTreeMap::new()));

/// Memoized [`enumerate_graphs`]; the sweeps and the acceptance checks
/// share one enumeration per order.
pub fn enumerate_graphs_cached(n: usize) -> Arc<Vec<SimpleGraph>> {
    cached(&ALL_CACHE, n, || enumerate_graphs(n))
}

/// Memoized [`enumerate_connected`].
pub fn enumerate_connected_cached(n: usize) -> Arc<Vec<SimpleGraph>> {
    cached(&CONN_CACHE, n, || enumerate_connected(n))
}

/// Memoized [`enumerate_2connected`].
pub fn enumerate_2connected_cached(n: usize) -> Arc<Vec<SimpleGraph>> {
    cached(&TWO_CONN_CACHE, n, || enumerate_2connected(n))
}
