//! Immutable simple-graph value type on at most 63 vertices.
//!
//! Adjacency is stored as one `u64` bit row per vertex, so neighbor-set
//! intersection and union are single word operations. All operations return
//! new graphs; values are freely shareable between threads.

use std::fmt;
use thiserror::Error;

/// Hard cap on the vertex count, aligned with the graph6 short form.
pub const MAX_VERTICES: usize = 63;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("pair ({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("too many vertices: {0} (maximum {MAX_VERTICES})")]
    TooManyVertices(usize),
}

/// Reference to an edge `{u, v}` with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    pub u: usize,
    pub v: usize,
}

impl EdgeRef {
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "edge endpoints must be distinct");
        EdgeRef {
            u: a.min(b),
            v: a.max(b),
        }
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Simple undirected graph with vertices labeled `0..n-1`.
///
/// Invariants: adjacency is symmetric, irreflexive, and no row has bits at or
/// above `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        SimpleGraph {
            n,
            adj: vec![0; n],
        }
    }

    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = SimpleGraph::empty(n);
        for &(a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange(a, n));
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange(b, n));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            g.adj[a] |= 1 << b;
            g.adj[b] |= 1 << a;
        }
        Ok(g)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::empty(n);
        let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        g
    }

    /// Cycle C_n (requires n >= 3).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::new(n, &edges).unwrap()
    }

    /// Path P_n on n vertices, 0-1-...-(n-1).
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::new(n, &edges).unwrap()
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::with_capacity(a * b);
        for i in 0..a {
            for j in a..a + b {
                edges.push((i, j));
            }
        }
        SimpleGraph::new(a + b, &edges).unwrap()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Bitmask with one bit per vertex.
    #[inline]
    pub fn full_mask(&self) -> u64 {
        if self.n == 0 {
            0
        } else {
            (1u64 << self.n) - 1
        }
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood N[v].
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> u64 {
        self.adj[v] | (1 << v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] & (1 << b) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<EdgeRef> {
        let mut out = Vec::new();
        for u in 0..self.n {
            // n <= 63, so u + 1 <= 63 and the shift is in range
            let mut higher = self.adj[u] & (!0u64 << (u + 1));
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push(EdgeRef { u, v });
            }
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// New graph with edge `{a, b}` added (no-op if present).
    pub fn with_edge(&self, a: usize, b: usize) -> SimpleGraph {
        assert!(a < self.n && b < self.n && a != b);
        let mut g = self.clone();
        g.adj[a] |= 1 << b;
        g.adj[b] |= 1 << a;
        g
    }

    /// New graph with edge `{a, b}` removed (no-op if absent).
    pub fn without_edge(&self, a: usize, b: usize) -> SimpleGraph {
        assert!(a < self.n && b < self.n);
        let mut g = self.clone();
        g.adj[a] &= !(1 << b);
        g.adj[b] &= !(1 << a);
        g
    }

    /// Contract edge `e`, merging both endpoints into `min(u, v)` and shifting
    /// higher labels down by one. Returns the contracted graph together with
    /// the relabel map `old label -> new label` (the removed endpoint maps to
    /// the merged vertex).
    pub fn contract_edge(&self, e: EdgeRef) -> Result<(SimpleGraph, Vec<usize>), GraphError> {
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::NotAnEdge(e.u, e.v));
        }
        let (keep, drop) = (e.u, e.v);
        let merged_nbrs = (self.adj[keep] | self.adj[drop]) & !(1 << keep) & !(1 << drop);
        let mut map = vec![0usize; self.n];
        let mut next = 0usize;
        for (v, entry) in map.iter_mut().enumerate() {
            if v == drop {
                *entry = keep; // merged vertex keeps min label, which is < drop
            } else {
                *entry = next;
                next += 1;
            }
        }
        // keep < drop so keep's new label equals keep
        let mut g = SimpleGraph::empty(self.n - 1);
        for v in 0..self.n {
            if v == drop || v == keep {
                continue;
            }
            let nv = map[v];
            let mut row = self.adj[v] & !(1 << drop) & !(1 << keep);
            while row != 0 {
                let w = row.trailing_zeros() as usize;
                row &= row - 1;
                let nw = map[w];
                if nv != nw {
                    g.adj[nv] |= 1 << nw;
                    g.adj[nw] |= 1 << nv;
                }
            }
        }
        let mk = map[keep];
        let mut row = merged_nbrs;
        while row != 0 {
            let w = row.trailing_zeros() as usize;
            row &= row - 1;
            let nw = map[w];
            g.adj[mk] |= 1 << nw;
            g.adj[nw] |= 1 << mk;
        }
        Ok((g, map))
    }

    /// Induced subgraph on the vertex set `mask`; also returns the map from
    /// old labels to new contiguous labels (unlisted vertices map to `usize::MAX`).
    pub fn induced(&self, mask: u64) -> (SimpleGraph, Vec<usize>) {
        debug_assert_eq!(mask & !self.full_mask(), 0, "vertex out of range");
        let mut map = vec![usize::MAX; self.n];
        let mut order = Vec::new();
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            map[v] = order.len();
            order.push(v);
        }
        let mut g = SimpleGraph::empty(order.len());
        for (i, &v) in order.iter().enumerate() {
            let mut row = self.adj[v] & mask;
            while row != 0 {
                let w = row.trailing_zeros() as usize;
                row &= row - 1;
                g.adj[i] |= 1 << map[w];
            }
        }
        (g, map)
    }

    /// Delete the vertex set `mask`: induced subgraph on the complement.
    pub fn delete(&self, mask: u64) -> (SimpleGraph, Vec<usize>) {
        self.induced(self.full_mask() & !mask)
    }

    /// Join: disjoint union of `self` and `other` plus all cross edges.
    /// Vertices of `other` are shifted up by `self.n()`.
    pub fn join(&self, other: &SimpleGraph) -> SimpleGraph {
        let n = self.n + other.n;
        assert!(n <= MAX_VERTICES);
        let mut g = SimpleGraph::empty(n);
        let left_mask = self.full_mask();
        let right_mask = other.full_mask() << self.n;
        for v in 0..self.n {
            g.adj[v] = self.adj[v] | right_mask;
        }
        for v in 0..other.n {
            g.adj[self.n + v] = (other.adj[v] << self.n) | left_mask;
        }
        g
    }

    /// Disjoint union without cross edges.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let n = self.n + other.n;
        assert!(n <= MAX_VERTICES);
        let mut g = SimpleGraph::empty(n);
        for v in 0..self.n {
            g.adj[v] = self.adj[v];
        }
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        g
    }

    /// Number of triangles containing edge `e`: |N(u) ∩ N(v)|.
    pub fn triangles_on_edge(&self, e: EdgeRef) -> Result<usize, GraphError> {
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::NotAnEdge(e.u, e.v));
        }
        Ok((self.adj[e.u] & self.adj[e.v]).count_ones() as usize)
    }

    /// T(G): minimum of `triangles_on_edge` over all edges.
    pub fn min_triangle_count(&self) -> Result<usize, GraphError> {
        let mut best = None;
        for e in self.edges() {
            let t = (self.adj[e.u] & self.adj[e.v]).count_ones() as usize;
            best = Some(best.map_or(t, |b: usize| b.min(t)));
        }
        best.ok_or(GraphError::NoEdges)
    }

    /// Rebuild from raw adjacency rows (callers must supply a symmetric,
    /// loop-free matrix).
    pub fn from_rows(n: usize, rows: Vec<u64>) -> SimpleGraph {
        assert_eq!(rows.len(), n);
        let g = SimpleGraph { n, adj: rows };
        debug_assert!((0..n).all(|v| {
            g.adj[v] & (1 << v) == 0
                && bits(g.adj[v]).all(|w| w < n && g.adj[w] & (1 << v) != 0)
        }));
        g
    }

    /// Apply a relabeling permutation: `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = SimpleGraph::empty(self.n);
        for v in 0..self.n {
            let mut row = self.adj[v];
            while row != 0 {
                let w = row.trailing_zeros() as usize;
                row &= row - 1;
                g.adj[perm[v]] |= 1 << perm[w];
            }
        }
        g
    }

    /// Vertices reachable from `start` while staying inside `allowed`
    /// (start must be in `allowed`).
    pub fn reachable_within(&self, start: usize, allowed: u64) -> u64 {
        debug_assert!(allowed & (1 << start) != 0);
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v] & allowed & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.reachable_within(0, self.full_mask()) == self.full_mask()
    }

    /// Vertex sets of the components of the subgraph induced on `mask`.
    pub fn components_within(&self, mask: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let comp = self.reachable_within(v, rest);
            out.push(comp);
            rest &= !comp;
        }
        out
    }
}

/// All s-element subsets of {0..n} as bitmasks in increasing numeric
/// (= colex) order, via Gosper's hack.
pub fn masks_of_size(n: usize, s: usize) -> impl Iterator<Item = u64> {
    assert!(n <= 63);
    let limit = 1u64 << n;
    let first = if s == 0 { 0 } else { (1u64 << s) - 1 };
    std::iter::successors(Some(first), move |&m| {
        if m == 0 {
            return None;
        }
        let c = m & m.wrapping_neg();
        let r = m + c;
        Some(((r ^ m) >> (2 + c.trailing_zeros())) | r)
    })
    .take_while(move |&m| m < limit)
}

/// Iterate the set bits of a mask as vertex labels.
pub fn bits(mask: u64) -> impl Iterator<Item = usize> {
    std::iter::successors(
        if mask == 0 { None } else { Some(mask) },
        |m| {
            let m = m & (m - 1);
            if m == 0 {
                None
            } else {
                Some(m)
            }
        },
    )
    .map(|m| m.trailing_zeros() as usize)
}

/// Mask with the bits of `verts` set.
pub fn mask_of(verts: &[usize]) -> u64 {
    verts.iter().fold(0u64, |m, &v| m | (1 << v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_graph_basic() {
        let k3 = SimpleGraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        let empty = SimpleGraph::new(4, &[]).unwrap();
        assert_eq!(empty.edge_count(), 0);
        let c5 = SimpleGraph::cycle(5);
        assert!(c5.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn make_graph_errors() {
        assert_eq!(
            SimpleGraph::new(3, &[(0, 3)]).unwrap_err(),
            GraphError::VertexOutOfRange(3, 3)
        );
        assert_eq!(
            SimpleGraph::new(3, &[(1, 1)]).unwrap_err(),
            GraphError::SelfLoop(1)
        );
    }

    #[test]
    fn contract_c4_gives_c3() {
        let c4 = SimpleGraph::cycle(4);
        let (g, _) = c4.contract_edge(EdgeRef::new(0, 1)).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3); // parallel edges merged
    }

    #[test]
    fn contract_k4_gives_k3() {
        let k4 = SimpleGraph::complete(4);
        let (g, _) = k4.contract_edge(EdgeRef::new(1, 3)).unwrap();
        assert_eq!(g, SimpleGraph::complete(3));
    }

    #[test]
    fn contract_p4_gives_p3() {
        let p4 = SimpleGraph::path(4);
        let (g, _) = p4.contract_edge(EdgeRef::new(1, 2)).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn contract_merged_neighborhood() {
        // neighborhood of x*y must be N(x) ∪ N(y) \ {x,y}
        let g = SimpleGraph::new(5, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3)]).unwrap();
        let (h, map) = g.contract_edge(EdgeRef::new(0, 1)).unwrap();
        assert_eq!(h.n(), 4);
        let merged = map[1];
        let expect = mask_of(&[map[2], map[3], map[4]]);
        assert_eq!(h.neighbors(merged), expect);
    }

    #[test]
    fn contract_non_edge_errors() {
        let c4 = SimpleGraph::cycle(4);
        assert!(c4.contract_edge(EdgeRef::new(0, 2)).is_err());
    }

    #[test]
    fn induced_and_delete() {
        let k5 = SimpleGraph::complete(5);
        let (g, _) = k5.induced(mask_of(&[0, 2, 4]));
        assert_eq!(g, SimpleGraph::complete(3));
        let c6 = SimpleGraph::cycle(6);
        let (p5, _) = c6.delete(1 << 3);
        assert_eq!(p5.n(), 5);
        assert_eq!(p5.edge_count(), 4);
        assert!(p5.is_connected());
    }

    #[test]
    fn join_edge_counts() {
        let w4 = SimpleGraph::complete(1).join(&SimpleGraph::cycle(4));
        assert_eq!(w4.edge_count(), 8);
        let k33 = SimpleGraph::empty(3).join(&SimpleGraph::empty(3));
        assert_eq!(k33, SimpleGraph::complete_bipartite(3, 3));
        assert_eq!(k33.edge_count(), 9);
        // K̄_t + K̄_{n−t}: e = t(n−t)
        let g = SimpleGraph::empty(4).join(&SimpleGraph::empty(7));
        assert_eq!(g.edge_count(), 28);
    }

    #[test]
    fn triangle_counts() {
        let k4 = SimpleGraph::complete(4);
        assert_eq!(k4.triangles_on_edge(EdgeRef::new(0, 1)).unwrap(), 2);
        assert_eq!(k4.min_triangle_count().unwrap(), 2);
        let c5 = SimpleGraph::cycle(5);
        assert_eq!(c5.triangles_on_edge(EdgeRef::new(0, 1)).unwrap(), 0);
        assert_eq!(c5.min_triangle_count().unwrap(), 0);
        assert_eq!(
            SimpleGraph::empty(3).min_triangle_count().unwrap_err(),
            GraphError::NoEdges
        );
    }

    #[test]
    fn components() {
        let g = SimpleGraph::new(5, &[(0, 1), (2, 3)]).unwrap();
        let comps = g.components_within(g.full_mask());
        assert_eq!(comps.len(), 3);
        assert!(!g.is_connected());
    }
}
