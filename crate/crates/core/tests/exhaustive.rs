//! Exhaustive small-order cross-checks: enumeration counts against known
//! values, and independent brute-force oracles for connectivity and cycle
//! search over every isomorphism class.

use longcycle_core::enumerate::{
    enumerate_2connected_cached, enumerate_connected_cached, enumerate_graphs_cached,
};
use longcycle_core::graph::SimpleGraph;
use longcycle_core::structure::{
    circumference, cut_vertices, hamiltonian_cycle_search, is_2_connected,
    longest_cycle_through_edge,
};
use rayon::prelude::*;

#[test]
fn enumeration_counts_match_reference_values() {
    // unlabeled graph counts
    for (n, want) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)] {
        assert_eq!(enumerate_graphs_cached(n).len(), want, "all graphs, n={n}");
    }
    for (n, want) in [(4, 6), (5, 21), (6, 112), (7, 853)] {
        assert_eq!(enumerate_connected_cached(n).len(), want, "connected, n={n}");
    }
    for (n, want) in [(4, 3), (5, 10), (6, 56), (7, 468), (8, 7123)] {
        assert_eq!(enumerate_2connected_cached(n).len(), want, "2-connected, n={n}");
    }
}

#[test]
fn enumeration_has_no_isomorphic_duplicates() {
    use std::collections::BTreeSet;
    for n in 1..=7 {
        let keys: BTreeSet<String> = enumerate_graphs_cached(n)
            .iter()
            .map(longcycle_core::canon::canonical_key)
            .collect();
        assert_eq!(keys.len(), enumerate_graphs_cached(n).len(), "n={n}");
    }
}

/// Cut vertices straight from the definition: v is a cut vertex iff G - v
/// has more components than G (restricted to graphs with >= 2 vertices).
fn naive_cut_vertices(g: &SimpleGraph) -> Vec<usize> {
    let base = g.components_within(g.full_mask()).len();
    (0..g.n())
        .filter(|&v| {
            let rest = g.full_mask() & !(1u64 << v);
            g.components_within(rest).len() > base
        })
        .collect()
}

#[test]
fn cut_vertices_match_definition() {
    // cut_vertices is specified for connected graphs on >= 3 vertices only
    for n in 3..=7 {
        for g in enumerate_connected_cached(n).iter() {
            assert_eq!(cut_vertices(g), naive_cut_vertices(g));
        }
    }
}

#[test]
fn two_connectivity_matches_definition() {
    // n >= 3, connected, and no cut vertex
    for n in 3..=7 {
        for g in enumerate_graphs_cached(n).iter() {
            let expect = g.is_connected() && naive_cut_vertices(g).is_empty();
            assert_eq!(is_2_connected(g), expect);
        }
    }
}

/// Exact longest cycle by unpruned DFS; independent of the pruned search.
fn naive_circumference(g: &SimpleGraph) -> usize {
    fn dfs(g: &SimpleGraph, start: usize, cur: usize, used: u64, len: usize, best: &mut usize) {
        for w in 0..g.n() {
            if !g.has_edge(cur, w) {
                continue;
            }
            if w == start && len >= 2 {
                *best = (*best).max(len + 1);
            }
            if used >> w & 1 == 0 && w > start {
                dfs(g, start, w, used | 1 << w, len + 1, best);
            }
        }
    }
    let mut best = 0;
    for start in 0..g.n() {
        dfs(g, start, start, 1 << start, 0, &mut best);
    }
    best
}

#[test]
fn circumference_matches_naive_search_on_all_small_graphs() {
    for n in 3..=7 {
        let graphs = enumerate_graphs_cached(n);
        let bad: Vec<_> = graphs
            .par_iter()
            .filter(|g| circumference(g) != naive_circumference(g))
            .collect();
        assert!(bad.is_empty(), "n={n}: {} mismatches", bad.len());
    }
}

#[test]
fn hamiltonian_search_agrees_with_circumference() {
    for n in 3..=7 {
        for g in enumerate_2connected_cached(n).iter() {
            let ham = hamiltonian_cycle_search(g).is_some();
            assert_eq!(ham, circumference(g) == n);
        }
    }
}

#[test]
fn longest_cycle_through_edge_is_bounded_by_circumference() {
    for g in enumerate_2connected_cached(6).iter() {
        let c = circumference(g);
        let mut best_over_edges = 0;
        for e in g.edges() {
            let through = longest_cycle_through_edge(g, e);
            assert!(through <= c);
            best_over_edges = best_over_edges.max(through);
        }
        // some edge lies on a longest cycle
        assert_eq!(best_over_edges, c);
    }
}
