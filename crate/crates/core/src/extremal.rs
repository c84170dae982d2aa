//! Closed-form bound values and deterministic constructors for the extremal
//! families: H_{n,k,a}, the classes G1..G8, and the bipartite-based families
//! F0..F4 / F4'.
//!
//! Part-label layout is deterministic: A first, then C, then B, then J (star
//! components of J in declaration order), so serialized output is
//! reproducible.

use crate::graph::SimpleGraph;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("parameter violation: {0}")]
    Params(String),
}

fn bad(msg: impl Into<String>) -> ExtremalError {
    ExtremalError::Params(msg.into())
}

/// t = floor((k-1)/2), the half-threshold parameter.
pub fn t_of(k: usize) -> usize {
    (k - 1) / 2
}

fn choose2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// h(n,k,a) = C(k-a, 2) + a(n-k+a), the edge count of H_{n,k,a}.
pub fn h_value(n: usize, k: usize, a: usize) -> Result<usize, ExtremalError> {
    check_h_params(n, k, a)?;
    Ok(choose2(k - a) + a * (n - k + a))
}

fn check_h_params(n: usize, k: usize, a: usize) -> Result<(), ExtremalError> {
    if n < k {
        return Err(bad(format!("need n >= k, got n={n}, k={k}")));
    }
    if a < 1 || 2 * a >= k {
        return Err(bad(format!("need 1 <= a < k/2, got a={a}, k={k}")));
    }
    Ok(())
}

/// Erdős bound: max{ C(n-d,2)+d^2, C(ceil((n+1)/2),2) + floor((n-1)/2)^2 }.
pub fn ell_value(n: usize, d: usize) -> Result<usize, ExtremalError> {
    if d < 1 || n <= 2 * d {
        return Err(bad(format!("need d >= 1 and n > 2d, got n={n}, d={d}")));
    }
    let first = choose2(n - d) + d * d;
    let half_up = (n + 1).div_ceil(2);
    let half_down = (n - 1) / 2;
    let second = choose2(half_up) + half_down * half_down;
    Ok(first.max(second))
}

/// Family tag attached to a labeled construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyLabel {
    H { n: usize, k: usize, a: usize },
    /// Class G_i(n, k); `i` in 1..=8.
    G { i: usize, n: usize, k: usize },
    F0,
    F1,
    F2,
    F3,
    F3General,
    F4,
    F4Prime,
}

impl std::fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilyLabel::H { n, k, a } => write!(f, "H({n},{k},{a})"),
            FamilyLabel::G { i, n, k } => write!(f, "G{i}({n},{k})"),
            FamilyLabel::F0 => write!(f, "F0"),
            FamilyLabel::F1 => write!(f, "F1"),
            FamilyLabel::F2 => write!(f, "F2"),
            FamilyLabel::F3 => write!(f, "F3"),
            FamilyLabel::F3General => write!(f, "F3gen"),
            FamilyLabel::F4 => write!(f, "F4"),
            FamilyLabel::F4Prime => write!(f, "F4'"),
        }
    }
}

/// A constructed graph together with its labeled partition.
#[derive(Debug, Clone)]
pub struct LabeledConstruction {
    pub graph: SimpleGraph,
    pub parts: BTreeMap<String, Vec<usize>>,
    pub family: FamilyLabel,
}

impl LabeledConstruction {
    pub fn part(&self, name: &str) -> &[usize] {
        self.parts.get(name).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn single(&self, name: &str) -> usize {
        self.parts[name][0]
    }
}

// ---------------------------------------------------------------------------
// H_{n,k,a}
// ---------------------------------------------------------------------------

/// Build H_{n,k,a}: |A| = a, |C| = k-2a, |B| = n-k+a; all edges inside
/// A ∪ C plus the complete bipartite A x B. Layout: A, then C, then B.
pub fn build_h(n: usize, k: usize, a: usize) -> Result<LabeledConstruction, ExtremalError> {
    check_h_params(n, k, a)?;
    let c_end = k - a; // A ∪ C occupies 0..k-a
    let mut g = SimpleGraph::empty(n);
    for u in 0..c_end {
        for v in u + 1..c_end {
            g = g.with_edge(u, v);
        }
    }
    for u in 0..a {
        for v in c_end..n {
            g = g.with_edge(u, v);
        }
    }
    let mut parts = BTreeMap::new();
    parts.insert("A".into(), (0..a).collect());
    parts.insert("C".into(), (a..c_end).collect());
    parts.insert("B".into(), (c_end..n).collect());
    Ok(LabeledConstruction {
        graph: g,
        parts,
        family: FamilyLabel::H { n, k, a },
    })
}

// ---------------------------------------------------------------------------
// Classes G1..G8
// ---------------------------------------------------------------------------

/// Shape of one star component hanging off the host: `size` vertices
/// (center plus leaves), leaves anchored at `anchor` (index into the
/// component's allowed endpoint pair).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarShape {
    pub size: usize,
    /// 0 or 1: which of the two allowed endpoints the leaves attach to.
    pub anchor: usize,
}

/// Parameters selecting one edge-maximal member of a class G_i(n,k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassSpec {
    /// G1(n,k) = { H_{n,k,t} }.
    G1 { n: usize, k: usize },
    /// G2(n,k): |A| = t, B complete to A and independent, J vertices each
    /// adjacent exactly to {a1, b1}.
    G2 { n: usize, k: usize, j: usize },
    /// G3(n,k): |A| = t, A' = {a1, a2}; star components of J attach to A'.
    G3 {
        n: usize,
        k: usize,
        stars: Vec<StarShape>,
    },
    /// G4(n,10): |A| = 3, G - A a star forest fully attached to A
    /// (leaves of big stars to a single anchor vertex of A).
    G4 {
        n: usize,
        stars: Vec<StarShape>,
    },
    /// G5(n,8): A = K_3; every component of G - A is attached to a1.
    /// Bridges: (shape, other endpoint index in 1..=2). Singles: other
    /// endpoint index in 1..=2.
    G5 {
        n: usize,
        bridges: Vec<(StarShape, usize)>,
        singles: Vec<usize>,
    },
    /// G6(n,8): A = K_4; all J3-bridges at {a1,a2}; every isolated vertex
    /// has a1 among its two A-neighbors (other endpoint index in 1..=3).
    G6 {
        n: usize,
        bridges: Vec<StarShape>,
        singles: Vec<usize>,
    },
    /// G7(n,8): A = K_4; all J3-bridges at {a1,a2}; isolated vertices all
    /// adjacent exactly to {a3, a4}.
    G7 {
        n: usize,
        bridges: Vec<StarShape>,
        n_singles: usize,
    },
    /// G8(n,8): A = K_5; every component of G - A attaches exactly to
    /// {a1, a2}.
    G8 {
        n: usize,
        bridges: Vec<StarShape>,
        n_singles: usize,
    },
}

impl ClassSpec {
    pub fn label(&self) -> FamilyLabel {
        match *self {
            ClassSpec::G1 { n, k } => FamilyLabel::G { i: 1, n, k },
            ClassSpec::G2 { n, k, .. } => FamilyLabel::G { i: 2, n, k },
            ClassSpec::G3 { n, k, .. } => FamilyLabel::G { i: 3, n, k },
            ClassSpec::G4 { n, .. } => FamilyLabel::G { i: 4, n, k: 10 },
            ClassSpec::G5 { n, .. } => FamilyLabel::G { i: 5, n, k: 8 },
            ClassSpec::G6 { n, .. } => FamilyLabel::G { i: 6, n, k: 8 },
            ClassSpec::G7 { n, .. } => FamilyLabel::G { i: 7, n, k: 8 },
            ClassSpec::G8 { n, .. } => FamilyLabel::G { i: 8, n, k: 8 },
        }
    }
}

/// Attach one star component to the host graph.
///
/// `endpoints` are the two host vertices the component may touch. For a
/// star on >= 3 vertices the center is joined to both endpoints and every
/// leaf to `endpoints[shape.anchor]`; a 2-vertex component has both its
/// vertices joined to both endpoints; a singleton handled by callers.
fn attach_star(
    g: &mut SimpleGraph,
    next: &mut usize,
    shape: StarShape,
    endpoints: [usize; 2],
) -> Result<Vec<usize>, ExtremalError> {
    if shape.size < 2 {
        return Err(bad("star component needs at least 2 vertices"));
    }
    if shape.anchor > 1 {
        return Err(bad("star anchor must be 0 or 1"));
    }
    let verts: Vec<usize> = (*next..*next + shape.size).collect();
    *next += shape.size;
    let center = verts[0];
    let mut h = g.clone();
    if shape.size == 2 {
        let other = verts[1];
        h = h.with_edge(center, other);
        for e in endpoints {
            h = h.with_edge(center, e).with_edge(other, e);
        }
    } else {
        let a_s = endpoints[shape.anchor];
        for &leaf in &verts[1..] {
            h = h.with_edge(center, leaf).with_edge(leaf, a_s);
        }
        h = h.with_edge(center, endpoints[0]).with_edge(center, endpoints[1]);
    }
    *g = h;
    Ok(verts)
}

/// Build the edge-maximal member of a class for the given shape parameters.
pub fn build_class_member(spec: &ClassSpec) -> Result<LabeledConstruction, ExtremalError> {
    match spec {
        ClassSpec::G1 { n, k } => {
            let t = t_of(*k);
            let mut c = build_h(*n, *k, t)?;
            c.family = FamilyLabel::G { i: 1, n: *n, k: *k };
            Ok(c)
        }
        ClassSpec::G2 { n, k, j } => {
            let t = t_of(*k);
            if t + j + 1 > *n {
                return Err(bad("G2: need at least one B vertex"));
            }
            let b_len = n - t - j;
            let mut g = SimpleGraph::empty(*n);
            // A = 0..t (clique), B = t..t+b_len (complete to A), J rest
            for u in 0..t {
                for v in u + 1..t {
                    g = g.with_edge(u, v);
                }
                for v in t..t + b_len {
                    g = g.with_edge(u, v);
                }
            }
            let (a1, b1) = (0, t);
            for c in t + b_len..*n {
                g = g.with_edge(c, a1).with_edge(c, b1);
            }
            let mut parts = BTreeMap::new();
            parts.insert("A".into(), (0..t).collect());
            parts.insert("B".into(), (t..t + b_len).collect());
            parts.insert("J".into(), (t + b_len..*n).collect());
            parts.insert("a1".into(), vec![a1]);
            parts.insert("b1".into(), vec![b1]);
            Ok(LabeledConstruction {
                graph: g,
                parts,
                family: spec.label(),
            })
        }
        ClassSpec::G3 { n, k, stars } => {
            let t = t_of(*k);
            if t < 2 {
                return Err(bad("G3: need t >= 2"));
            }
            if stars.len() < 2 {
                return Err(bad("G3: J must have more than one component"));
            }
            let j_total: usize = stars.iter().map(|s| s.size).sum();
            if t + j_total > *n {
                return Err(bad("G3: parts exceed n"));
            }
            let b_len = n - t - j_total;
            let mut g = SimpleGraph::empty(*n);
            for u in 0..t {
                for v in u + 1..t {
                    g = g.with_edge(u, v);
                }
                for v in t..t + b_len {
                    g = g.with_edge(u, v);
                }
            }
            let mut next = t + b_len;
            let mut parts = BTreeMap::new();
            for (idx, s) in stars.iter().enumerate() {
                let verts = attach_star(&mut g, &mut next, *s, [0, 1])?;
                parts.insert(format!("S{idx}"), verts);
            }
            parts.insert("A".into(), (0..t).collect());
            parts.insert("B".into(), (t..t + b_len).collect());
            parts.insert("J".into(), (t + b_len..*n).collect());
            parts.insert("A'".into(), vec![0, 1]);
            Ok(LabeledConstruction {
                graph: g,
                parts,
                family: spec.label(),
            })
        }
        ClassSpec::G4 { n, stars } => {
            let a_len = 3;
            let total: usize = stars.iter().map(|s| s.size).sum();
            if a_len + total > *n {
                return Err(bad("G4: parts exceed n"));
            }
            let mut g = SimpleGraph::empty(*n);
            for u in 0..a_len {
                for v in u + 1..a_len {
                    g = g.with_edge(u, v);
                }
            }
            let mut next = a_len;
            let mut parts = BTreeMap::new();
            for (idx, s) in stars.iter().enumerate() {
                if s.size == 1 {
                    // singleton: adjacent to all of A
                    for a in 0..a_len {
                        g = g.with_edge(next, a);
                    }
                    parts.insert(format!("S{idx}"), vec![next]);
                    next += 1;
                } else if s.size == 2 {
                    let verts = attach_star(&mut g, &mut next, *s, [0, 1])?;
                    // both vertices may also see a3
                    for &v in &verts {
                        g = g.with_edge(v, 2);
                    }
                    parts.insert(format!("S{idx}"), verts);
                } else {
                    // center to all of A, leaves to the anchor a(S)
                    let verts: Vec<usize> = (next..next + s.size).collect();
                    next += s.size;
                    let center = verts[0];
                    if s.anchor >= a_len {
                        return Err(bad("G4: anchor out of range"));
                    }
                    for a in 0..a_len {
                        g = g.with_edge(center, a);
                    }
                    for &leaf in &verts[1..] {
                        g = g.with_edge(center, leaf).with_edge(leaf, s.anchor);
                    }
                    parts.insert(format!("S{idx}"), verts);
                }
            }
            // remaining vertices: singletons adjacent to all of A
            while next < *n {
                for a in 0..a_len {
                    g = g.with_edge(next, a);
                }
                next += 1;
            }
            parts.insert("A".into(), (0..a_len).collect());
            Ok(LabeledConstruction {
                graph: g,
                parts,
                family: spec.label(),
            })
        }
        ClassSpec::G5 { n, bridges, singles } => {
            build_bridge_class(spec, *n, 3, bridges_g5(bridges)?, singles_g5(singles)?)
        }
        ClassSpec::G6 { n, bridges, singles } => {
            let b: Vec<(StarShape, [usize; 2])> =
                bridges.iter().map(|s| (*s, [0usize, 1usize])).collect();
            let s: Result<Vec<[usize; 2]>, _> = singles
                .iter()
                .map(|&o| {
                    if (1..=3).contains(&o) {
                        Ok([0, o])
                    } else {
                        Err(bad("G6: singleton endpoint index must be 1..=3"))
                    }
                })
                .collect();
            build_bridge_class(spec, *n, 4, b, s?)
        }
        ClassSpec::G7 { n, bridges, n_singles } => {
            let b: Vec<(StarShape, [usize; 2])> =
                bridges.iter().map(|s| (*s, [0usize, 1usize])).collect();
            let s = vec![[2usize, 3usize]; *n_singles];
            build_bridge_class(spec, *n, 4, b, s)
        }
        ClassSpec::G8 { n, bridges, n_singles } => {
            let b: Vec<(StarShape, [usize; 2])> =
                bridges.iter().map(|s| (*s, [0usize, 1usize])).collect();
            let s = vec![[0usize, 1usize]; *n_singles];
            build_bridge_class(spec, *n, 5, b, s)
        }
    }
}

fn bridges_g5(
    bridges: &[(StarShape, usize)],
) -> Result<Vec<(StarShape, [usize; 2])>, ExtremalError> {
    bridges
        .iter()
        .map(|&(s, other)| {
            if other == 1 || other == 2 {
                Ok((s, [0, other]))
            } else {
                Err(bad("G5: bridge endpoint index must be 1 or 2"))
            }
        })
        .collect()
}

fn singles_g5(singles: &[usize]) -> Result<Vec<[usize; 2]>, ExtremalError> {
    singles
        .iter()
        .map(|&o| {
            if o == 1 || o == 2 {
                Ok([0, o])
            } else {
                Err(bad("G5: singleton endpoint index must be 1 or 2"))
            }
        })
        .collect()
}

/// Common builder for G5..G8: complete A, then J3-bridges and isolated
/// vertices attached to the given endpoint pairs (indices into A).
fn build_bridge_class(
    spec: &ClassSpec,
    n: usize,
    a_len: usize,
    bridges: Vec<(StarShape, [usize; 2])>,
    singles: Vec<[usize; 2]>,
) -> Result<LabeledConstruction, ExtremalError> {
    let total: usize = bridges.iter().map(|(s, _)| s.size).sum::<usize>() + singles.len();
    if a_len + total != n {
        return Err(bad(format!(
            "bridge class: parts sum to {}, need n = {n}",
            a_len + total
        )));
    }
    let mut g = SimpleGraph::empty(n);
    for u in 0..a_len {
        for v in u + 1..a_len {
            g = g.with_edge(u, v);
        }
    }
    let mut next = a_len;
    let mut parts = BTreeMap::new();
    for (idx, (shape, eps)) in bridges.iter().enumerate() {
        let verts = attach_star(&mut g, &mut next, *shape, *eps)?;
        parts.insert(format!("S{idx}"), verts);
    }
    let mut single_verts = Vec::new();
    for eps in &singles {
        g = g.with_edge(next, eps[0]).with_edge(next, eps[1]);
        single_verts.push(next);
        next += 1;
    }
    parts.insert("A".into(), (0..a_len).collect());
    parts.insert("singles".into(), single_verts);
    Ok(LabeledConstruction {
        graph: g,
        parts,
        family: spec.label(),
    })
}

// ---------------------------------------------------------------------------
// F families
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FFamily {
    F0,
    F1,
    F2,
    F3,
    F3General,
    F4,
    F4Prime,
}

/// Parameters selecting a member of an F family. `deletions` are (A index,
/// B index) pairs of bipartite edges to remove. `a1`/`a2` index subsets of A
/// for the general F(A,B,A1,A2) form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FFamilySpec {
    pub family: FFamily,
    pub t: usize,
    pub deletions: Vec<(usize, usize)>,
    /// F3General only: |B| may differ from t.
    pub b_len: Option<usize>,
    pub a1: Vec<usize>,
    pub a2: Vec<usize>,
}

impl FFamilySpec {
    pub fn plain(family: FFamily, t: usize) -> Self {
        let (a1, a2) = match family {
            FFamily::F3 => (vec![0, 1], vec![2, 3]),
            FFamily::F4Prime => (vec![0, 1, 2], vec![0, 1, 2]),
            _ => (vec![], vec![]),
        };
        FFamilySpec {
            family,
            t,
            deletions: vec![],
            b_len: None,
            a1,
            a2,
        }
    }

    pub fn with_deletions(mut self, del: Vec<(usize, usize)>) -> Self {
        self.deletions = del;
        self
    }
}

/// Build the specified F-family member. Layout: A = 0..t, then B, then the
/// attachment vertices c1 (and c2).
pub fn build_f_member(spec: &FFamilySpec) -> Result<LabeledConstruction, ExtremalError> {
    let t = spec.t;
    let (b_len, budget, extra, label) = match spec.family {
        FFamily::F0 => (t + 1, t.saturating_sub(3), 0, FamilyLabel::F0),
        FFamily::F1 => (t + 2, t.saturating_sub(4), 0, FamilyLabel::F1),
        FFamily::F2 => (t + 2, t.saturating_sub(4), 1, FamilyLabel::F2),
        FFamily::F3 => (t, t.saturating_sub(4), 2, FamilyLabel::F3),
        FFamily::F3General => (
            spec.b_len.unwrap_or(t),
            t.saturating_sub(4),
            2,
            FamilyLabel::F3General,
        ),
        FFamily::F4 => {
            if t != 4 {
                return Err(bad("F4 is defined only for t = 4"));
            }
            (6, 0, 0, FamilyLabel::F4)
        }
        FFamily::F4Prime => {
            if t != 4 {
                return Err(bad("F4' is defined only for t = 4"));
            }
            (4, 0, 2, FamilyLabel::F4Prime)
        }
    };
    if spec.deletions.len() > budget {
        return Err(bad(format!(
            "deletion budget exceeded: {} > {budget}",
            spec.deletions.len()
        )));
    }
    let a_len = if spec.family == FFamily::F4 { 3 } else { t };
    let n = a_len + b_len + extra;
    let mut g = SimpleGraph::empty(n);
    for u in 0..a_len {
        for v in a_len..a_len + b_len {
            g = g.with_edge(u, v);
        }
    }
    let mut parts: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    parts.insert("A".into(), (0..a_len).collect());
    parts.insert("B".into(), (a_len..a_len + b_len).collect());
    match spec.family {
        FFamily::F2 => {
            // subdivide a1-b1 with c1
            let (a1, b1, c1) = (0, a_len, a_len + b_len);
            g = g.without_edge(a1, b1).with_edge(a1, c1).with_edge(c1, b1);
            parts.insert("a1".into(), vec![a1]);
            parts.insert("b1".into(), vec![b1]);
            parts.insert("c1".into(), vec![c1]);
        }
        FFamily::F3 | FFamily::F3General | FFamily::F4Prime => {
            let (c1, c2) = (a_len + b_len, a_len + b_len + 1);
            validate_a_sides(t, &spec.a1, &spec.a2, spec.family)?;
            g = g.with_edge(c1, c2);
            for &a in &spec.a1 {
                g = g.with_edge(c1, a);
            }
            for &a in &spec.a2 {
                g = g.with_edge(c2, a);
            }
            parts.insert("c1".into(), vec![c1]);
            parts.insert("c2".into(), vec![c2]);
            parts.insert("A1".into(), spec.a1.clone());
            parts.insert("A2".into(), spec.a2.clone());
        }
        FFamily::F4 => {
            // three independent edges in the 6-side
            for i in 0..3 {
                g = g.with_edge(a_len + 2 * i, a_len + 2 * i + 1);
            }
        }
        _ => {}
    }
    for &(ai, bi) in &spec.deletions {
        if ai >= a_len || bi >= b_len {
            return Err(bad("deletion index out of range"));
        }
        let (u, v) = (ai, a_len + bi);
        if spec.family == FFamily::F2 && (u, v) == (0, a_len) {
            return Err(bad("F2: the subdivided pair is already a non-edge"));
        }
        if !g.has_edge(u, v) {
            return Err(bad("deletion repeats or targets a non-edge"));
        }
        g = g.without_edge(u, v);
    }
    Ok(LabeledConstruction {
        graph: g,
        parts,
        family: label,
    })
}

fn validate_a_sides(
    t: usize,
    a1: &[usize],
    a2: &[usize],
    family: FFamily,
) -> Result<(), ExtremalError> {
    if a1.is_empty() || a2.is_empty() {
        return Err(bad("A1 and A2 must be non-empty"));
    }
    if a1.iter().chain(a2).any(|&v| v >= t) {
        return Err(bad("A1/A2 indices must lie in A"));
    }
    let union: std::collections::BTreeSet<_> = a1.iter().chain(a2).collect();
    if union.len() < 3 {
        return Err(bad("need |A1 ∪ A2| >= 3"));
    }
    let disjoint = a1.iter().all(|v| !a2.contains(v));
    if a1.len().min(a2.len()) == 1 && !disjoint {
        return Err(bad("A1 and A2 must be disjoint when one side has size 1"));
    }
    if family == FFamily::F3 && !(a1.len() == 2 && a2.len() == 2 && disjoint) {
        return Err(bad("F3 proper: |A1| = |A2| = 2 and disjoint"));
    }
    if family == FFamily::F4Prime && !(a1.len() == 3 && a1 == a2) {
        return Err(bad("F4': A1 = A2 with |A1| = 3"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{circumference, is_2_connected};

    #[test]
    fn h_values_from_text() {
        assert_eq!(h_value(7, 7, 2).unwrap(), 14);
        assert_eq!(h_value(8, 8, 2).unwrap(), 19);
        // derived oracle: edge count of the built graph
        assert_eq!(h_value(14, 9, 4).unwrap(), build_h(14, 9, 4).unwrap().graph.edge_count());
        assert!(h_value(5, 7, 2).is_err());
        assert!(h_value(9, 7, 4).is_err());
    }

    #[test]
    fn ell_values() {
        assert_eq!(ell_value(5, 2).unwrap(), 7);
        assert_eq!(ell_value(10, 3).unwrap(), 31);
        assert_eq!(
            ell_value(12, 2).unwrap(),
            h_value(12, 12, 2).unwrap().max(h_value(12, 12, 5).unwrap())
        );
        assert!(ell_value(4, 2).is_err());
    }

    #[test]
    fn build_h_examples() {
        let h = build_h(10, 8, 3).unwrap();
        assert_eq!(h.graph.n(), 10);
        assert_eq!(h.graph.edge_count(), 25);
        let h552 = build_h(5, 5, 2).unwrap();
        assert_eq!(h552.graph.edge_count(), 7); // K_5 - E(K_3)
        let h1494 = build_h(14, 9, 4).unwrap();
        assert_eq!(h1494.graph.min_degree(), 4);
        for &b in h1494.part("B") {
            assert_eq!(h1494.graph.degree(b), 4);
        }
    }

    #[test]
    fn build_h_induced_ac_is_clique() {
        let h = build_h(10, 8, 3).unwrap();
        let mask = h
            .part("A")
            .iter()
            .chain(h.part("C"))
            .fold(0u64, |m, &v| m | (1 << v));
        let (sub, _) = h.graph.induced(mask);
        assert_eq!(sub, SimpleGraph::complete(5));
    }

    #[test]
    fn h_triangles() {
        let h = build_h(10, 8, 3).unwrap();
        // edge inside A has k-a-2 = 8 common neighbors... count directly
        use crate::graph::EdgeRef;
        assert_eq!(
            h.graph.triangles_on_edge(EdgeRef::new(0, 1)).unwrap(),
            8
        );
        let h2 = build_h(14, 9, 4).unwrap();
        assert_eq!(h2.graph.min_triangle_count().unwrap(), 3);
    }

    #[test]
    fn g2_example() {
        // G2(9,8) with |B|=3, |J|=3: 18 edges, circumference < 8
        let c = build_class_member(&ClassSpec::G2 { n: 9, k: 8, j: 3 }).unwrap();
        assert_eq!(c.graph.edge_count(), 3 + 9 + 6);
        assert!(is_2_connected(&c.graph));
        assert!(circumference(&c.graph) < 8);
    }

    #[test]
    fn g1_is_h() {
        let c = build_class_member(&ClassSpec::G1 { n: 9, k: 8 }).unwrap();
        assert_eq!(c.graph, build_h(9, 8, 3).unwrap().graph);
    }

    #[test]
    fn g8_example() {
        // A = K_5, two 2-vertex J3-bridges at {a1, a2}
        let c = build_class_member(&ClassSpec::G8 {
            n: 9,
            bridges: vec![StarShape { size: 2, anchor: 0 }, StarShape { size: 2, anchor: 0 }],
            n_singles: 0,
        })
        .unwrap();
        assert!(is_2_connected(&c.graph));
        assert!(circumference(&c.graph) < 8);
    }

    #[test]
    fn f_family_examples() {
        let f0 = build_f_member(&FFamilySpec::plain(FFamily::F0, 4)).unwrap();
        assert_eq!(f0.graph, SimpleGraph::complete_bipartite(4, 5));
        assert_eq!(f0.graph.edge_count(), 20);

        let f4 = build_f_member(&FFamilySpec::plain(FFamily::F4, 4)).unwrap();
        assert_eq!(f4.graph.n(), 9);
        assert_eq!(f4.graph.edge_count(), 21);
        // the 9-cycle (b1 b2 a1 b3 b4 a2 b5 b6 a3): B = 3..9, A = 0..3
        let cyc = [3, 4, 0, 5, 6, 1, 7, 8, 2];
        assert!(crate::structure::validate_cycle_witness(&f4.graph, &cyc));

        let f3 = build_f_member(&FFamilySpec::plain(FFamily::F3, 4)).unwrap();
        assert_eq!(f3.graph.n(), 10);
        assert_eq!(f3.graph.edge_count(), 21);
    }

    #[test]
    fn f_family_budgets() {
        // F0 at t=4 allows one deletion
        assert!(build_f_member(
            &FFamilySpec::plain(FFamily::F0, 4).with_deletions(vec![(0, 0)])
        )
        .is_ok());
        assert!(build_f_member(
            &FFamilySpec::plain(FFamily::F0, 4).with_deletions(vec![(0, 0), (0, 1)])
        )
        .is_err());
        // F1 at t=4 allows none
        assert!(build_f_member(
            &FFamilySpec::plain(FFamily::F1, 4).with_deletions(vec![(0, 0)])
        )
        .is_err());
    }

    #[test]
    fn f4_prime_shape() {
        let f = build_f_member(&FFamilySpec::plain(FFamily::F4Prime, 4)).unwrap();
        assert_eq!(f.graph.n(), 10);
        // K_{4,4} (16) + c1c2 + 3 + 3
        assert_eq!(f.graph.edge_count(), 23);
    }
}
