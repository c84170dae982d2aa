//! Exact structural analysis of long cycles and paths in small graphs:
//! bitset graphs, exact circumference/path search, extremal constructions,
//! class recognizers, a guarded contraction procedure, exhaustive
//! enumeration, and verification sweeps.

pub mod canon;
pub mod contraction;
pub mod enumerate;
pub mod extremal;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod recognize;
pub mod report;
pub mod source;
pub mod structure;
pub mod sweep;
