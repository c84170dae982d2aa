//! End-to-end tests of the `longcycle` binary: flag parsing, output
//! formats, trace files, and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_longcycle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("longcycle-cli-{}-{name}", std::process::id()))
}

#[test]
fn construct_emits_decodable_graph6_with_labels() {
    let out = run(&[
        "construct", "--family", "h", "--n", "10", "--k", "7", "--a", "3", "--labels",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    let g = longcycle_core::graph6::decode(lines.next().unwrap()).unwrap();
    assert_eq!(g.n(), 10);
    assert_eq!(
        g.edge_count(),
        longcycle_core::extremal::h_value(10, 7, 3).unwrap()
    );
    assert!(text.contains("H(10,7,3) A:"));
}

#[test]
fn construct_rejects_missing_parameters() {
    let out = run(&["construct", "--family", "h", "--n", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_classifies_the_extremal_graph() {
    let build = run(&["construct", "--family", "h", "--n", "9", "--k", "7", "--a", "3"]);
    let code = stdout(&build).trim().to_string();
    let out = run(&["check", "--graph6", &code, "--k", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("2-connected=true"));
    assert!(text.contains("c=6"));
    assert!(text.contains("class=H(9,7,3)"));
}

#[test]
fn verify_builtin_sweep_is_clean_and_reports_json() {
    let out = run(&[
        "verify", "--mode", "theorem-t3small", "--k", "6", "--source", "builtin", "--n", "7",
        "--format", "json",
    ]);
    assert!(out.status.success(), "expected exit 0 on a clean sweep");
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["theorem"], "stability-small");
    assert_eq!(report["coverage_mode"], "exhaustive");
    assert_eq!(report["counts"]["violations"], 0);
    assert!(report["counts"]["checked"].as_u64().unwrap() > 0);
}

#[test]
fn verify_csv_has_the_documented_header() {
    let out = run(&[
        "verify", "--mode", "kopylov", "--k", "5", "--source", "builtin", "--n", "6",
        "--format", "csv",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("theorem,n,k,checked,"));
}

#[test]
fn verify_rejects_unknown_mode_and_source() {
    assert_eq!(
        run(&["verify", "--mode", "nope", "--k", "6", "--source", "builtin", "--n", "6"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--mode", "kopylov", "--k", "6", "--source", "nope"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_writes_report_to_file() {
    let path = temp_path("report.json");
    let out = run(&[
        "verify", "--mode", "theorem-t3small", "--k", "5", "--source", "builtin", "--n", "6",
        "--format", "json", "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["counts"]["violations"], 0);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn procedure_writes_a_replayable_trace() {
    let build = run(&["construct", "--family", "h", "--n", "12", "--k", "9", "--a", "4"]);
    let code = stdout(&build).trim().to_string();
    let path = temp_path("trace.json");
    let out = run(&[
        "procedure", "--graph6", &code, "--k", "9", "--trace", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("audit=ok"));
    let trace: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(trace["k"], 9);
    assert_eq!(trace["initial"], code.as_str());
    longcycle_core::graph6::decode(trace["final"].as_str().unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn oracle_suite_is_clean_on_small_orders() {
    let out = run(&["oracle", "--source", "builtin", "--n", "5", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for id in ["dirac", "chvatal-index", "degree-closure", "forced-cycle"] {
        assert!(text.lines().any(|l| l.starts_with(id)), "missing row {id}");
    }
}

#[test]
fn file_source_round_trips_through_verify() {
    let path = temp_path("input.g6");
    let graphs = vec![
        longcycle_core::graph::SimpleGraph::cycle(5),
        longcycle_core::graph::SimpleGraph::complete(4),
    ];
    longcycle_core::source::write_graph6(&graphs, &path).unwrap();
    let out = run(&[
        "verify", "--mode", "theorem-t3small", "--k", "6", "--source", "file", "--file",
        path.to_str().unwrap(), "--format", "json",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["coverage_mode"], "file");
    std::fs::remove_file(&path).unwrap();
}
