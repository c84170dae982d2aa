//! Safe contractions and the guarded reduction procedure: repeatedly
//! contract low-triangle edges (R2) or strip a separated K_{t-1} (R3)
//! while preserving 2-connectivity, with a full trace for auditing, plus
//! the reverse-direction vertex-split preservation check.

use crate::extremal::{h_value, t_of, FFamily};
use crate::family::contains_family_member;
use crate::graph::{bits, EdgeRef, SimpleGraph};
use crate::recognize::embeds_in_h;
use crate::structure::{has_cycle_at_least, is_2_connected};
use rayon::prelude::*;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ContractionError {
    #[error("precondition violation: {0}")]
    Precondition(String),
    #[error("parameter violation: {0}")]
    Params(String),
    #[error("no admissible edge")]
    NoAdmissibleEdge,
}

/// One reduction step.
#[derive(Debug, Clone)]
pub enum StepRule {
    /// Contraction of `edge` with the recorded triangle count.
    R2 { edge: EdgeRef, t_value: usize },
    /// Deletion of a separated K_{t-1} component, found at `edge`.
    R3 { edge: EdgeRef, removed: Vec<usize> },
}

#[derive(Debug, Clone)]
pub struct StepRecord {
    pub rule: StepRule,
    pub pre_n: usize,
    pub post_n: usize,
    pub pre_e: usize,
    pub post_e: usize,
    pub pre_2conn: bool,
    pub post_2conn: bool,
    /// Graph after the step, for replay checks.
    pub after: SimpleGraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopRule {
    /// Reached j = k.
    R1,
    /// Neither R2 nor R3 applicable.
    R4,
}

#[derive(Debug, Clone)]
pub struct ProcedureTrace {
    pub k: usize,
    pub t: usize,
    pub initial: SimpleGraph,
    pub final_graph: SimpleGraph,
    pub steps: Vec<StepRecord>,
    pub stop_rule: StopRule,
    /// Set when the input misses the edge-count hypothesis; the run is
    /// exploratory and the audit skips the per-step edge bound.
    pub out_of_hypotheses: bool,
}

// ---------------------------------------------------------------------------
// safe_partner
// ---------------------------------------------------------------------------

/// A neighbor w of v such that G/vw stays 2-connected, preferring partners
/// whose closed neighborhood does not swallow N[v]; smallest label wins.
pub fn safe_partner(g: &SimpleGraph, v: usize) -> Result<usize, ContractionError> {
    if g.n() < 4 || !is_2_connected(g) {
        return Err(ContractionError::Precondition(
            "need a 2-connected graph on >= 4 vertices".into(),
        ));
    }
    let mut fallback = None;
    for w in bits(g.neighbors(v)) {
        let e = EdgeRef::new(v, w);
        let (c, _) = g.contract_edge(e).expect("edge exists");
        if !is_2_connected(&c) {
            continue;
        }
        let nv = g.closed_neighbors(v);
        let nw = g.closed_neighbors(w);
        if nv & !nw != 0 {
            return Ok(w); // w in W(v): N[v] not contained in N[w]
        }
        fallback.get_or_insert(w);
    }
    fallback.ok_or(ContractionError::NoAdmissibleEdge)
}

// ---------------------------------------------------------------------------
// basic_procedure
// ---------------------------------------------------------------------------

fn triangles(g: &SimpleGraph, e: EdgeRef) -> usize {
    (g.neighbors(e.u) & g.neighbors(e.v)).count_ones() as usize
}

/// The R2 choice on G_j: the 2-connectivity-preserving edge with at most
/// t-2 triangles, minimizing (triangle count, min endpoint degree), ties
/// lexicographic.
fn pick_r2(g: &SimpleGraph, t: usize) -> Option<(EdgeRef, usize)> {
    let mut best: Option<(usize, usize, EdgeRef)> = None;
    for e in g.edges() {
        let tv = triangles(g, e);
        if tv + 2 > t {
            continue;
        }
        let (c, _) = g.contract_edge(e).expect("edge exists");
        if !is_2_connected(&c) {
            continue;
        }
        let key = (tv, g.degree(e.u).min(g.degree(e.v)), e);
        if best.is_none_or(|b| key < b) {
            best = Some(key);
        }
    }
    best.map(|(tv, _, e)| (e, tv))
}

/// The R3 choice: first edge uv (lexicographic) such that G - u - v has at
/// least three components, one of which is a K_{t-1}; returns that
/// component's vertex set.
fn pick_r3(g: &SimpleGraph, t: usize) -> Option<(EdgeRef, u64)> {
    if t < 2 {
        return None;
    }
    for e in g.edges() {
        let rest = g.full_mask() & !(1u64 << e.u) & !(1u64 << e.v);
        let comps = g.components_within(rest);
        if comps.len() < 3 {
            continue;
        }
        for &comp in &comps {
            let size = comp.count_ones() as usize;
            if size != t - 1 {
                continue;
            }
            let (sub, _) = g.induced(comp);
            if sub.edge_count() == size * (size - 1) / 2 {
                return Some((e, comp));
            }
        }
    }
    None
}

/// Run the reduction procedure from G down to G_m, recording every step.
pub fn basic_procedure(g: &SimpleGraph, k: usize) -> Result<ProcedureTrace, ContractionError> {
    let t = t_of(k);
    if t < 2 {
        return Err(ContractionError::Params(format!("need k >= 5, got {k}")));
    }
    let n = g.n();
    if n < k {
        return Err(ContractionError::Precondition(format!(
            "need n >= k, got n={n}, k={k}"
        )));
    }
    if !is_2_connected(g) {
        return Err(ContractionError::Precondition("graph must be 2-connected".into()));
    }
    // the order bound, the cycle bound and the edge bound are soft:
    // exploratory runs are allowed but stamped, and the audit downgrades
    // its assertions
    let threshold = h_value(n, k, t - 1).map_err(|e| ContractionError::Params(e.to_string()))?;
    let out_of_hypotheses =
        2 * n < 3 * k || g.edge_count() < threshold + 1 || has_cycle_at_least(g, k);

    let mut cur = g.clone();
    let mut steps = Vec::new();
    let stop_rule = loop {
        let j = cur.n();
        if j == k {
            break StopRule::R1;
        }
        let (pre_n, pre_e) = (j, cur.edge_count());
        if let Some((e, tv)) = pick_r2(&cur, t) {
            let (next, _) = cur.contract_edge(e).expect("edge exists");
            steps.push(StepRecord {
                rule: StepRule::R2 { edge: e, t_value: tv },
                pre_n,
                post_n: next.n(),
                pre_e,
                post_e: next.edge_count(),
                pre_2conn: true,
                post_2conn: is_2_connected(&next),
                after: next.clone(),
            });
            cur = next;
            continue;
        }
        if j >= k + t - 1 {
            if let Some((e, comp)) = pick_r3(&cur, t) {
                let (next, _) = cur.delete(comp);
                steps.push(StepRecord {
                    rule: StepRule::R3 {
                        edge: e,
                        removed: bits(comp).collect(),
                    },
                    pre_n,
                    post_n: next.n(),
                    pre_e,
                    post_e: next.edge_count(),
                    pre_2conn: true,
                    post_2conn: is_2_connected(&next),
                    after: next.clone(),
                });
                cur = next;
                continue;
            }
        }
        break StopRule::R4;
    };
    Ok(ProcedureTrace {
        k,
        t,
        initial: g.clone(),
        final_graph: cur,
        steps,
        stop_rule,
        out_of_hypotheses,
    })
}

// ---------------------------------------------------------------------------
// audit_trace
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Default)]
pub struct AuditReport {
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Re-verify every invariant of a trace: replay, 2-connectivity, cycle
/// bound, per-step edge losses, the edge-count lower bound, the
/// no-R2-after-R3 rule, the final minimum degree and the terminal
/// structure (G_m inside H_{m,k,t}, or F_4 inside G_m when m > k = 10).
pub fn audit_trace(trace: &ProcedureTrace, k: usize) -> AuditReport {
    let mut rep = AuditReport::default();
    let t = trace.t;
    let mut prev = trace.initial.clone();
    let mut seen_r3 = false;
    for (i, step) in trace.steps.iter().enumerate() {
        // replay
        let replayed = match &step.rule {
            StepRule::R2 { edge, t_value } => {
                if seen_r3 {
                    rep.violations.push(format!("step {i}: R2 fired after R3"));
                }
                let exact = triangles(&prev, *edge);
                if exact != *t_value {
                    rep.violations
                        .push(format!("step {i}: recorded T={t_value}, actual {exact}"));
                }
                if step.pre_e - step.post_e != t_value + 1 {
                    rep.violations
                        .push(format!("step {i}: R2 must lose exactly T+1 edges"));
                }
                if step.pre_e - step.post_e > t - 1 {
                    rep.violations.push(format!("step {i}: R2 lost more than t-1 edges"));
                }
                match prev.contract_edge(*edge) {
                    Ok((g, _)) => Some(g),
                    Err(e) => {
                        rep.violations.push(format!("step {i}: replay failed: {e}"));
                        None
                    }
                }
            }
            StepRule::R3 { removed, .. } => {
                seen_r3 = true;
                if removed.len() != t - 1 {
                    rep.violations
                        .push(format!("step {i}: R3 must remove exactly t-1 vertices"));
                }
                if step.pre_e - step.post_e > t * (t + 1) / 2 - 1 {
                    rep.violations
                        .push(format!("step {i}: R3 lost more than C(t+1,2)-1 edges"));
                }
                if step.pre_n < k + t - 1 {
                    rep.violations.push(format!("step {i}: R3 fired with j < k+t-1"));
                }
                let mask = crate::graph::mask_of(removed);
                Some(prev.delete(mask).0)
            }
        };
        let Some(replayed) = replayed else { break };
        if replayed != step.after {
            rep.violations.push(format!("step {i}: replay mismatch"));
        }
        if !is_2_connected(&step.after) {
            rep.violations.push(format!("step {i}: result not 2-connected"));
        }
        if has_cycle_at_least(&step.after, k) {
            let msg = format!("step {i}: result has a cycle of length >= {k}");
            if trace.out_of_hypotheses {
                rep.notes.push(msg);
            } else {
                rep.violations.push(msg);
            }
        }
        if !trace.out_of_hypotheses {
            let bound = h_value(step.post_n, k, t - 1);
            match bound {
                Ok(b) if step.post_e > b => {}
                Ok(b) => rep.violations.push(format!(
                    "step {i}: edge bound broken: {} < {}",
                    step.post_e,
                    b + 1
                )),
                Err(e) => rep.notes.push(format!("step {i}: bound undefined: {e}")),
            }
        }
        // after any R3, no R2-admissible edge may exist
        if seen_r3 && pick_r2(&step.after, t).is_some() {
            rep.violations
                .push(format!("step {i}: R2-admissible edge exists after R3"));
        }
        prev = step.after.clone();
    }
    if prev != trace.final_graph {
        rep.violations.push("final graph does not match replay".into());
    }
    let gm = &trace.final_graph;
    let m = gm.n();
    if seen_r3 && gm.min_degree() < t {
        rep.violations
            .push(format!("final min degree {} below t={t}", gm.min_degree()));
    }
    if trace.out_of_hypotheses {
        rep.notes.push("out of theorem hypotheses: terminal structure not asserted".into());
        return rep;
    }
    // terminal dichotomy
    let in_h = embeds_in_h(gm, k, t).ok().flatten().is_some();
    let f4 = m > k && k == 10 && contains_family_member(gm, FFamily::F4, 4).is_some();
    if t >= 4 {
        if !in_h && !f4 {
            rep.violations.push("terminal graph fits neither H_{m,k,t} nor the F_4 case".into());
        }
    } else {
        rep.notes.push(format!(
            "t={t} < 4: terminal structure advisory only (in_H={in_h}, f4={f4})"
        ));
    }
    rep
}

// ---------------------------------------------------------------------------
// guarded_contraction_step
// ---------------------------------------------------------------------------

/// One contraction following the selection rules: (i) result 2-connected,
/// (ii) fewest triangles on the contracted edge, (iii) incident to a vertex
/// of minimum degree; ties lexicographic. The degree bound `h` is carried
/// for callers checking the descent property but does not restrict the
/// choice.
pub fn guarded_contraction_step(
    g: &SimpleGraph,
    _h: usize,
) -> Result<(SimpleGraph, EdgeRef), ContractionError> {
    if !is_2_connected(g) {
        return Err(ContractionError::Precondition("graph must be 2-connected".into()));
    }
    let mut best: Option<(usize, usize, EdgeRef)> = None;
    for e in g.edges() {
        let (c, _) = g.contract_edge(e).expect("edge exists");
        if !is_2_connected(&c) {
            continue;
        }
        let key = (triangles(g, e), g.degree(e.u).min(g.degree(e.v)), e);
        if best.is_none_or(|b| key < b) {
            best = Some(key);
        }
    }
    let (_, _, e) = best.ok_or(ContractionError::NoAdmissibleEdge)?;
    Ok((g.contract_edge(e).expect("edge exists").0, e))
}

// ---------------------------------------------------------------------------
// split_preservation_check
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Default)]
pub struct SplitReport {
    pub supergraphs: usize,
    pub splits_checked: usize,
    pub violations: Vec<String>,
}

impl SplitReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The family union that a split must fall back into, per k's parity.
fn split_targets(k: usize) -> Vec<FFamily> {
    if k % 2 == 1 {
        vec![FFamily::F0]
    } else {
        vec![
            FFamily::F1,
            FFamily::F2,
            FFamily::F3,
            FFamily::F4,
            FFamily::F4Prime,
        ]
    }
}

/// All single-vertex splits of F: replace u by an adjacent pair x, y and
/// distribute N(u) over x / y / both. Returns only 2-connected results.
fn vertex_splits(f: &SimpleGraph, u: usize) -> Vec<SimpleGraph> {
    let n = f.n();
    let nbrs: Vec<usize> = bits(f.neighbors(u)).collect();
    let d = nbrs.len();
    let mut out = Vec::new();
    // x keeps label u, y becomes label n; assignment digit: 0 -> x, 1 -> y,
    // 2 -> both
    let mut assign = vec![0u8; d];
    loop {
        let mut g = SimpleGraph::empty(n + 1);
        for e in f.edges() {
            if e.u != u && e.v != u {
                g = g.with_edge(e.u, e.v);
            }
        }
        g = g.with_edge(u, n);
        for (i, &w) in nbrs.iter().enumerate() {
            match assign[i] {
                0 => g = g.with_edge(u, w),
                1 => g = g.with_edge(n, w),
                _ => g = g.with_edge(u, w).with_edge(n, w),
            }
        }
        if is_2_connected(&g) {
            out.push(g);
        }
        // next assignment
        let mut i = 0;
        loop {
            if i == d {
                return out;
            }
            assign[i] += 1;
            if assign[i] < 3 {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

/// Exhaustively verify that splitting any vertex of any supergraph (at most
/// `extra_edges` additions) of the given family member cannot escape the
/// target family union while staying 2-connected with circumference < k.
pub fn split_preservation_check(
    member: &SimpleGraph,
    t: usize,
    k: usize,
    extra_edges: usize,
) -> Result<SplitReport, ContractionError> {
    if k != 2 * t + 1 && k != 2 * t + 2 {
        return Err(ContractionError::Params(format!(
            "need k in {{2t+1, 2t+2}}, got k={k}, t={t}"
        )));
    }
    let targets = split_targets(k);
    // supergraphs: add up to extra_edges non-edges, dedup by canonical key
    let n = member.n();
    let mut non_edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !member.has_edge(u, v) {
                non_edges.push((u, v));
            }
        }
    }
    let mut supers: BTreeSet<String> = BTreeSet::new();
    let mut frontier = vec![member.clone()];
    supers.insert(crate::canon::canonical_key(member));
    for _ in 0..extra_edges {
        let mut next = Vec::new();
        for f in &frontier {
            for &(u, v) in &non_edges {
                if !f.has_edge(u, v) {
                    let g = f.with_edge(u, v);
                    if supers.insert(crate::canon::canonical_key(&g)) {
                        next.push(g);
                    }
                }
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    let all_supers: Vec<SimpleGraph> = supers
        .iter()
        .map(|s| crate::graph6::decode(s).expect("keys round-trip"))
        .collect();

    let results: Vec<(usize, Vec<String>)> = all_supers
        .par_iter()
        .map(|f| {
            let mut seen: BTreeSet<String> = BTreeSet::new();
            let mut violations = Vec::new();
            let mut checked = 0;
            for u in 0..f.n() {
                for split in vertex_splits(f, u) {
                    if !seen.insert(crate::canon::canonical_key(&split)) {
                        continue;
                    }
                    if has_cycle_at_least(&split, k) {
                        continue;
                    }
                    checked += 1;
                    let hit = targets
                        .iter()
                        .any(|&fam| contains_family_member(&split, fam, t).is_some());
                    if !hit {
                        violations.push(format!(
                            "split of vertex {u} escapes the family union: {}",
                            crate::graph6::encode(&split).unwrap_or_default()
                        ));
                    }
                }
            }
            (checked, violations)
        })
        .collect();

    let mut rep = SplitReport {
        supergraphs: all_supers.len(),
        ..Default::default()
    };
    for (c, v) in results {
        rep.splits_checked += c;
        rep.violations.extend(v);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{build_h, h_value};

    #[test]
    fn safe_partner_basics() {
        assert!(safe_partner(&SimpleGraph::complete(4), 0).is_ok());
        let c4 = SimpleGraph::cycle(4);
        let w = safe_partner(&c4, 0).unwrap();
        assert!(c4.has_edge(0, w));
        assert!(safe_partner(&SimpleGraph::path(4), 0).is_err());
    }

    #[test]
    fn procedure_immediate_stop() {
        let h = build_h(9, 9, 3).unwrap().graph;
        let tr = basic_procedure(&h, 9).unwrap();
        assert_eq!(tr.stop_rule, StopRule::R1);
        assert!(tr.steps.is_empty());
        assert_eq!(tr.final_graph, h);
    }

    #[test]
    fn procedure_r4_on_h() {
        // every edge of H_{14,9,4} lies in >= 3 = t-1 triangles, so R2
        // never fires and R3 finds no separated K_3
        let h = build_h(14, 9, 4).unwrap().graph;
        assert!(h.min_triangle_count().unwrap() >= 3);
        let tr = basic_procedure(&h, 9).unwrap();
        assert_eq!(tr.stop_rule, StopRule::R4);
        assert_eq!(tr.final_graph, h);
        assert!(!tr.out_of_hypotheses);
        let rep = audit_trace(&tr, 9);
        assert!(rep.passed(), "{:?}", rep.violations);
    }

    #[test]
    fn procedure_contracts_pendant_pair() {
        // H_{13,9,4} plus a new vertex adjacent to two B-vertices: the
        // new edges have T = 0, so the first step contracts one of them
        let h = build_h(13, 9, 4).unwrap();
        let b = h.part("B");
        let g = {
            let base = h.graph.clone();
            let mut g = SimpleGraph::empty(14);
            for e in base.edges() {
                g = g.with_edge(e.u, e.v);
            }
            g.with_edge(13, b[0]).with_edge(13, b[1])
        };
        let tr = basic_procedure(&g, 9).unwrap();
        assert!(!tr.steps.is_empty());
        match &tr.steps[0].rule {
            StepRule::R2 { t_value, .. } => assert_eq!(*t_value, 0),
            r => panic!("expected R2 first, got {r:?}"),
        }
        assert_eq!(tr.final_graph.n(), 13);
        let rep = audit_trace(&tr, 9);
        assert!(rep.passed(), "{:?}", rep.violations);
    }

    #[test]
    fn edge_bound_difference_identity() {
        // h(j,k,t-1) - h(j-1,k,t-1) = t-1 at (14, 9, t=4)
        assert_eq!(
            h_value(14, 9, 3).unwrap() - h_value(13, 9, 3).unwrap(),
            3
        );
    }

    #[test]
    fn forged_trace_flagged() {
        let h = build_h(14, 9, 4).unwrap().graph;
        let mut tr = basic_procedure(&h, 9).unwrap();
        // forge a step claiming a contraction that never happened
        let bogus = h.contract_edge(EdgeRef::new(0, 1)).unwrap().0;
        tr.steps.push(StepRecord {
            rule: StepRule::R2 {
                edge: EdgeRef::new(0, 2),
                t_value: 0,
            },
            pre_n: 14,
            post_n: 13,
            pre_e: h.edge_count(),
            post_e: bogus.edge_count(),
            pre_2conn: true,
            post_2conn: true,
            after: bogus,
        });
        let rep = audit_trace(&tr, 9);
        assert!(!rep.passed());
    }

    #[test]
    fn guarded_step_examples() {
        let (g, _) = guarded_contraction_step(&SimpleGraph::complete(4), 2).unwrap();
        assert_eq!(g, SimpleGraph::complete(3));
        let (g, e) = guarded_contraction_step(&SimpleGraph::cycle(5), 2).unwrap();
        assert_eq!(g, SimpleGraph::cycle(4));
        assert_eq!(e, EdgeRef::new(0, 1));
    }

    #[test]
    fn split_counts_sane() {
        // C_4: splitting any vertex yields 2-connected graphs only when
        // both neighbors stay attached on each side appropriately
        let c4 = SimpleGraph::cycle(4);
        let splits = vertex_splits(&c4, 0);
        assert!(!splits.is_empty());
        for s in &splits {
            assert!(is_2_connected(s));
            assert_eq!(s.n(), 5);
        }
    }
}
