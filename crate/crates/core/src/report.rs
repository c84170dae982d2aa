//! Verification reports: outcome tallies, counterexample records, and
//! deterministic JSON / CSV / text emission.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Bumped whenever the serialized layout changes incompatibly.
pub const SCHEMA_VERSION: u32 = 1;

/// A graph that failed the predicate under test, with a human-readable
/// explanation. The graph is stored in graph6 so reports are self-contained
/// and re-verifiable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub diagnosis: String,
}

/// Outcome tallies. `checked` counts every graph that met the sweep's
/// hypotheses; each checked graph lands in exactly one other bucket.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub checked: u64,
    /// Satisfied the predicate without being sorted into a named class.
    pub passed: u64,
    /// Below the theorem's edge threshold (nothing further asserted).
    pub below_bound: u64,
    /// Classified graphs, keyed by class label.
    pub class_member: BTreeMap<String, u64>,
    pub violations: u64,
}

impl Counts {
    /// `checked` must equal the sum of the outcome buckets.
    pub fn consistent(&self) -> bool {
        let members: u64 = self.class_member.values().sum();
        self.checked == self.passed + self.below_bound + members + self.violations
    }
}

/// Result of one theorem sweep over one graph source.
///
/// Field order is fixed and all maps are ordered, so serialization is
/// byte-deterministic for equal reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    /// Stable theorem identifier, e.g. "stability-small" or "dirac".
    pub theorem: String,
    /// Numeric parameters of the sweep (n, k, seeds, empirical maxima...).
    pub params: BTreeMap<String, i64>,
    pub counts: Counts,
    pub violations: Vec<Violation>,
    pub runtime_ms: u64,
    /// "exhaustive" when the source covers every isomorphism class in
    /// range, "property-based" for grids/samples, "file" for external data.
    pub coverage_mode: String,
}

impl VerificationReport {
    pub fn new(theorem: impl Into<String>, coverage_mode: impl Into<String>) -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            theorem: theorem.into(),
            params: BTreeMap::new(),
            counts: Counts::default(),
            violations: Vec::new(),
            runtime_ms: 0,
            coverage_mode: coverage_mode.into(),
        }
    }

    pub fn with_param(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.into(), value);
        self
    }

    pub fn set_param(&mut self, key: &str, value: i64) {
        self.params.insert(key.into(), value);
    }

    pub fn note_pass(&mut self) {
        self.counts.checked += 1;
        self.counts.passed += 1;
    }

    pub fn note_below_bound(&mut self) {
        self.counts.checked += 1;
        self.counts.below_bound += 1;
    }

    pub fn note_class_member(&mut self, label: &str) {
        self.counts.checked += 1;
        *self.counts.class_member.entry(label.into()).or_insert(0) += 1;
    }

    pub fn note_violation(&mut self, graph6: impl Into<String>, diagnosis: impl Into<String>) {
        self.counts.checked += 1;
        self.counts.violations += 1;
        self.violations.push(Violation {
            graph6: graph6.into(),
            diagnosis: diagnosis.into(),
        });
    }

    /// Merge a per-worker partial report into this one (same sweep).
    pub fn absorb(&mut self, other: &VerificationReport) {
        self.counts.checked += other.counts.checked;
        self.counts.passed += other.counts.passed;
        self.counts.below_bound += other.counts.below_bound;
        for (label, c) in &other.counts.class_member {
            *self.counts.class_member.entry(label.clone()).or_insert(0) += c;
        }
        self.counts.violations += other.counts.violations;
        self.violations.extend(other.violations.iter().cloned());
        for (key, v) in &other.params {
            self.params.insert(key.clone(), *v);
        }
    }

    pub fn ok(&self) -> bool {
        self.counts.violations == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// One summary row per report; see [`csv_header`].
    pub fn csv_row(&self) -> String {
        let get = |key: &str| {
            self.params
                .get(key)
                .map(|v| v.to_string())
                .unwrap_or_default()
        };
        let members: u64 = self.counts.class_member.values().sum();
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.theorem,
            get("n"),
            get("k"),
            self.counts.checked,
            self.counts.passed,
            self.counts.below_bound,
            members,
            self.counts.violations,
            self.runtime_ms,
            self.coverage_mode,
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "[{}] {} checked={} passed={} below_bound={} violations={} ({} ms)\n",
            if self.ok() { "ok" } else { "FAIL" },
            self.theorem,
            self.counts.checked,
            self.counts.passed,
            self.counts.below_bound,
            self.counts.violations,
            self.runtime_ms,
        );
        if !self.params.is_empty() {
            let params: Vec<String> = self
                .params
                .iter()
                .map(|(key, v)| format!("{key}={v}"))
                .collect();
            out.push_str(&format!("  params: {}\n", params.join(" ")));
        }
        for (label, c) in &self.counts.class_member {
            out.push_str(&format!("  class {label}: {c}\n"));
        }
        for v in &self.violations {
            out.push_str(&format!("  violation {}: {}\n", v.graph6, v.diagnosis));
        }
        out
    }
}

pub fn csv_header() -> &'static str {
    "theorem,n,k,checked,passed,below_bound,class_members,violations,runtime_ms,coverage_mode"
}

/// CSV summary: header plus one row per report.
pub fn emit_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from(csv_header());
    out.push('\n');
    for r in reports {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_consistency() {
        let mut r = VerificationReport::new("demo", "exhaustive");
        r.note_pass();
        r.note_below_bound();
        r.note_class_member("H(9,7,3)");
        r.note_violation("Bw", "forged");
        assert!(r.counts.consistent());
        assert_eq!(r.counts.checked, 4);
        assert!(!r.ok());
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let mut r = VerificationReport::new("demo", "exhaustive").with_param("n", 7);
        r.note_violation("Cl", "negative control");
        r.runtime_ms = 12;
        let j1 = r.to_json();
        let back = VerificationReport::from_json(&j1).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), j1);
    }

    #[test]
    fn empty_sweep_report() {
        let r = VerificationReport::new("demo", "exhaustive");
        assert_eq!(r.counts.checked, 0);
        assert!(r.ok());
        assert!(r.counts.consistent());
    }

    #[test]
    fn csv_layout() {
        let mut r = VerificationReport::new("demo", "exhaustive")
            .with_param("n", 8)
            .with_param("k", 6);
        r.note_pass();
        let csv = emit_csv(&[r]);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), csv_header());
        assert_eq!(lines.next().unwrap(), "demo,8,6,1,1,0,0,0,0,exhaustive");
    }

    #[test]
    fn absorb_merges_tallies() {
        let mut a = VerificationReport::new("demo", "exhaustive");
        a.note_class_member("X");
        let mut b = VerificationReport::new("demo", "exhaustive");
        b.note_class_member("X");
        b.note_violation("Bw", "d");
        a.absorb(&b);
        assert_eq!(a.counts.class_member["X"], 2);
        assert_eq!(a.counts.violations, 1);
        assert!(a.counts.consistent());
    }
}
