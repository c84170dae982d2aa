//! `longcycle` — construct extremal graphs, check single graphs, run
//! theorem-verification sweeps, drive the contraction procedure, and run
//! the classical oracle suite.
//!
//! Exit codes: 0 = success / no violations, 1 = violations found,
//! 2 = usage or I/O error.

use clap::{Args, Parser, Subcommand};
use longcycle_core::contraction::{audit_trace, basic_procedure, ProcedureTrace, StepRule, StopRule};
use longcycle_core::extremal::{
    build_class_member, build_f_member, build_h, ClassSpec, FFamily, FFamilySpec,
    LabeledConstruction, StarShape,
};
use longcycle_core::graph::SimpleGraph;
use longcycle_core::graph6;
use longcycle_core::recognize::{classify_stability, StabilityVerdict};
use longcycle_core::report::{emit_csv, VerificationReport};
use longcycle_core::source::{grid_members, read_graph6, GraphSource};
use longcycle_core::structure::{circumference, is_2_connected, is_3_connected};
use longcycle_core::sweep::{
    classical_suite, verify_kopylov_sweep, verify_path_theorems, verify_stability_sweep,
    StabilityMode,
};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "longcycle",
    version,
    about = "Exact verification toolkit for long cycles and paths in small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named extremal graph and print it as graph6
    Construct(ConstructArgs),
    /// Inspect a single graph: connectivity, circumference, classification
    Check(CheckArgs),
    /// Run a theorem sweep over a graph source
    Verify(VerifyArgs),
    /// Run and audit the contraction procedure on one graph
    Procedure(ProcedureArgs),
    /// Run the classical oracle suite over a graph source
    Oracle(OracleArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// h, g1..g8 (via --k/--n shape flags), grid, f0..f3, f4, f4p
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// clique-side size for the h family
    #[arg(long)]
    a: Option<usize>,
    /// number of attached degree-2 vertices (g2)
    #[arg(long)]
    j: Option<usize>,
    /// star shapes as size:anchor pairs, e.g. "3:0,2:1" (g3, g4)
    #[arg(long)]
    stars: Option<String>,
    /// parameter t for the f families
    #[arg(long)]
    t: Option<usize>,
    /// also print the labeled vertex parts
    #[arg(long)]
    labels: bool,
}

#[derive(Args)]
struct CheckArgs {
    /// graph6 string
    #[arg(long, conflicts_with = "input")]
    graph6: Option<String>,
    /// newline-delimited graph6 file
    #[arg(long)]
    input: Option<PathBuf>,
    /// classify against the stability classes for this threshold
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args, Clone)]
struct SourceArgs {
    /// builtin | file | grid | random
    #[arg(long, default_value = "builtin")]
    source: String,
    /// vertex count (builtin, random)
    #[arg(long)]
    n: Option<usize>,
    /// graph6 file (source = file)
    #[arg(long)]
    file: Option<PathBuf>,
    /// vertex range (source = grid)
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    /// RNG seed (source = random)
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// edge density (source = random)
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    /// sample count (source = random)
    #[arg(long, default_value_t = 1000)]
    count: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// theorem-t3 | theorem-main | theorem-t3small | corollary-3con |
    /// kopylov | paths
    #[arg(long)]
    mode: String,
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    source: SourceArgs,
    /// worker threads (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
    /// json | csv | text
    #[arg(long, default_value = "text")]
    format: String,
    /// write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ProcedureArgs {
    #[arg(long, conflicts_with = "input")]
    graph6: Option<String>,
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    k: usize,
    /// write the full trace as JSON
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value = "text")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Print a line to stdout, exiting quietly if the reader went away
/// (e.g. the output is piped into `head`).
fn out(line: std::fmt::Arguments) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if writeln!(stdout, "{line}").is_err() {
        std::process::exit(0);
    }
}

macro_rules! outln {
    ($($arg:tt)*) => { out(format_args!($($arg)*)) };
}

/// Usage / I/O failure (exit 2), distinct from "violations found" (exit 1).
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(args) => construct(args),
        Command::Check(args) => check(args),
        Command::Verify(args) => verify(args),
        Command::Procedure(args) => procedure(args),
        Command::Oracle(args) => oracle(args),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_stars(text: &str) -> Result<Vec<StarShape>, UsageError> {
    text.split(',')
        .map(|item| {
            let (size, anchor) = item
                .split_once(':')
                .ok_or_else(|| UsageError(format!("bad star {item:?}; expected size:anchor")))?;
            Ok(StarShape {
                size: size.trim().parse().map_err(|_| UsageError(format!("bad star size {size:?}")))?,
                anchor: anchor
                    .trim()
                    .parse()
                    .map_err(|_| UsageError(format!("bad star anchor {anchor:?}")))?,
            })
        })
        .collect()
}

fn need(value: Option<usize>, flag: &str) -> Result<usize, UsageError> {
    value.ok_or_else(|| UsageError(format!("--{flag} is required for this family")))
}

fn print_construction(c: &LabeledConstruction, labels: bool) -> Result<(), UsageError> {
    outln!("{}", graph6::encode(&c.graph)?);
    if labels {
        for (name, verts) in &c.parts {
            outln!("# {} {name}: {verts:?}", c.family);
        }
    }
    Ok(())
}

fn construct(args: ConstructArgs) -> Result<ExitCode, UsageError> {
    let family = args.family.to_lowercase();
    match family.as_str() {
        "h" => {
            let c = build_h(need(args.n, "n")?, need(args.k, "k")?, need(args.a, "a")?)?;
            print_construction(&c, args.labels)?;
        }
        "g1" => {
            let c = build_class_member(&ClassSpec::G1 {
                n: need(args.n, "n")?,
                k: need(args.k, "k")?,
            })?;
            print_construction(&c, args.labels)?;
        }
        "g2" => {
            let c = build_class_member(&ClassSpec::G2 {
                n: need(args.n, "n")?,
                k: need(args.k, "k")?,
                j: need(args.j, "j")?,
            })?;
            print_construction(&c, args.labels)?;
        }
        "g3" => {
            let stars = parse_stars(args.stars.as_deref().unwrap_or_default())?;
            let c = build_class_member(&ClassSpec::G3 {
                n: need(args.n, "n")?,
                k: need(args.k, "k")?,
                stars,
            })?;
            print_construction(&c, args.labels)?;
        }
        "g4" => {
            let stars = parse_stars(args.stars.as_deref().unwrap_or_default())?;
            let c = build_class_member(&ClassSpec::G4 {
                n: need(args.n, "n")?,
                stars,
            })?;
            print_construction(&c, args.labels)?;
        }
        "grid" => {
            let n = need(args.n, "n")?;
            let k = need(args.k, "k")?;
            for c in grid_members(k, n) {
                print_construction(&c, args.labels)?;
            }
        }
        "f0" | "f1" | "f2" | "f3" | "f4" | "f4p" => {
            let f = match family.as_str() {
                "f0" => FFamily::F0,
                "f1" => FFamily::F1,
                "f2" => FFamily::F2,
                "f3" => FFamily::F3,
                "f4" => FFamily::F4,
                _ => FFamily::F4Prime,
            };
            let c = build_f_member(&FFamilySpec::plain(f, need(args.t, "t")?))?;
            print_construction(&c, args.labels)?;
        }
        other => {
            return Err(UsageError(format!(
                "unknown family {other:?}; expected h, g1..g4, grid, f0..f4, f4p"
            )))
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn load_graphs(graph6: &Option<String>, input: &Option<PathBuf>) -> Result<Vec<SimpleGraph>, UsageError> {
    match (graph6, input) {
        (Some(s), None) => Ok(vec![longcycle_core::graph6::decode(s.trim())?]),
        (None, Some(path)) => Ok(read_graph6(path)?),
        _ => Err(UsageError("provide exactly one of --graph6 / --input".into())),
    }
}

fn check(args: CheckArgs) -> Result<ExitCode, UsageError> {
    let graphs = load_graphs(&args.graph6, &args.input)?;
    for g in &graphs {
        let key = graph6::encode(g)?;
        let mut line = format!(
            "{key}: n={} e={} connected={} 2-connected={} 3-connected={} c={}",
            g.n(),
            g.edge_count(),
            g.is_connected(),
            is_2_connected(g),
            is_3_connected(g),
            circumference(g),
        );
        if let Some(k) = args.k {
            match classify_stability(g, k) {
                Ok(StabilityVerdict::ClassMember(w)) => {
                    line.push_str(&format!(" class={}", w.label))
                }
                Ok(StabilityVerdict::BelowBound) => line.push_str(" class=below-bound"),
                Ok(StabilityVerdict::Violation) => line.push_str(" class=VIOLATION"),
                Err(e) => line.push_str(&format!(" class=n/a ({e})")),
            }
        }
        outln!("{line}");
    }
    Ok(ExitCode::SUCCESS)
}

fn build_source(args: &SourceArgs) -> Result<GraphSource, UsageError> {
    match args.source.as_str() {
        "builtin" => Ok(GraphSource::Builtin {
            n: need(args.n, "n")?,
        }),
        "file" => Ok(GraphSource::Graph6File {
            path: args
                .file
                .clone()
                .ok_or_else(|| UsageError("--file is required for source=file".into()))?,
        }),
        "grid" => Err(UsageError(
            "source=grid needs --k; it is constructed inside verify".into(),
        )),
        "random" => Ok(GraphSource::Random {
            seed: args.seed,
            n: need(args.n, "n")?,
            density: args.density,
            count: args.count,
        }),
        other => Err(UsageError(format!(
            "unknown source {other:?}; expected builtin, file, grid, random"
        ))),
    }
}

fn build_source_with_k(args: &SourceArgs, k: usize) -> Result<GraphSource, UsageError> {
    if args.source == "grid" {
        let n_min = args.n_min.or(args.n).unwrap_or(k);
        let n_max = args.n_max.or(args.n).unwrap_or(n_min);
        return Ok(GraphSource::ConstructionGrid { k, n_min, n_max });
    }
    build_source(args)
}

fn configure_jobs(jobs: Option<usize>) -> Result<(), UsageError> {
    if let Some(j) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| UsageError(e.to_string()))?;
    }
    Ok(())
}

fn emit_reports(
    reports: &[VerificationReport],
    format: &str,
    out: &Option<PathBuf>,
) -> Result<(), UsageError> {
    let text = match format {
        "json" => {
            if reports.len() == 1 {
                reports[0].to_json()
            } else {
                let items: Vec<serde_json::Value> = reports
                    .iter()
                    .map(|r| serde_json::from_str(&r.to_json()).expect("round trip"))
                    .collect();
                serde_json::to_string_pretty(&items).expect("serialize")
            }
        }
        "csv" => emit_csv(reports),
        "text" => reports.iter().map(|r| r.to_text()).collect::<Vec<_>>().join(""),
        other => return Err(UsageError(format!("unknown format {other:?}"))),
    };
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => outln!("{}", text.trim_end_matches('\n')),
    }
    Ok(())
}

fn exit_by_violations(reports: &[VerificationReport]) -> ExitCode {
    if reports.iter().all(|r| r.ok()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn verify(args: VerifyArgs) -> Result<ExitCode, UsageError> {
    configure_jobs(args.jobs)?;
    let source = build_source_with_k(&args.source, args.k)?;
    let reports = match args.mode.as_str() {
        "kopylov" => vec![verify_kopylov_sweep(&source, args.k)?],
        "paths" => vec![verify_path_theorems(&source, args.k)?],
        mode => {
            let mode: StabilityMode = mode.parse().map_err(UsageError)?;
            vec![verify_stability_sweep(&source, args.k, mode)?]
        }
    };
    emit_reports(&reports, &args.format, &args.out)?;
    Ok(exit_by_violations(&reports))
}

fn trace_json(trace: &ProcedureTrace) -> Result<serde_json::Value, UsageError> {
    let steps: Result<Vec<serde_json::Value>, UsageError> = trace
        .steps
        .iter()
        .map(|s| {
            let (rule, edge, extra) = match &s.rule {
                StepRule::R2 { edge, t_value } => {
                    ("R2", edge.to_string(), serde_json::json!({ "t_value": t_value }))
                }
                StepRule::R3 { edge, removed } => {
                    ("R3", edge.to_string(), serde_json::json!({ "removed": removed }))
                }
            };
            Ok(serde_json::json!({
                "rule": rule,
                "edge": edge,
                "detail": extra,
                "pre_n": s.pre_n,
                "post_n": s.post_n,
                "pre_e": s.pre_e,
                "post_e": s.post_e,
                "pre_2connected": s.pre_2conn,
                "post_2connected": s.post_2conn,
                "after": graph6::encode(&s.after)?,
            }))
        })
        .collect();
    Ok(serde_json::json!({
        "schema_version": 1,
        "k": trace.k,
        "t": trace.t,
        "initial": graph6::encode(&trace.initial)?,
        "final": graph6::encode(&trace.final_graph)?,
        "stop_rule": match trace.stop_rule { StopRule::R1 => "R1", StopRule::R4 => "R4" },
        "out_of_hypotheses": trace.out_of_hypotheses,
        "steps": steps?,
    }))
}

fn procedure(args: ProcedureArgs) -> Result<ExitCode, UsageError> {
    let graphs = load_graphs(&args.graph6, &args.input)?;
    let mut all_passed = true;
    let mut traces = Vec::new();
    for g in &graphs {
        let trace = basic_procedure(g, args.k)?;
        let audit = audit_trace(&trace, args.k);
        outln!(
            "{}: steps={} stop={:?} m={} out_of_hypotheses={} audit={}",
            graph6::encode(g)?,
            trace.steps.len(),
            trace.stop_rule,
            trace.final_graph.n(),
            trace.out_of_hypotheses,
            if audit.passed() { "ok" } else { "FAIL" },
        );
        for v in &audit.violations {
            outln!("  violation: {v}");
        }
        for note in &audit.notes {
            outln!("  note: {note}");
        }
        all_passed &= audit.passed();
        traces.push(trace_json(&trace)?);
    }
    if let Some(path) = &args.trace {
        let value = if traces.len() == 1 {
            traces.pop().expect("one trace")
        } else {
            serde_json::Value::Array(traces)
        };
        std::fs::write(path, serde_json::to_string_pretty(&value).expect("serialize"))?;
    }
    Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn oracle(args: OracleArgs) -> Result<ExitCode, UsageError> {
    configure_jobs(args.jobs)?;
    let source = build_source(&args.source)?;
    let reports = classical_suite(&source)?;
    emit_reports(&reports, &args.format, &args.out)?;
    Ok(exit_by_violations(&reports))
}
