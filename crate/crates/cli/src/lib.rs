//! Command line front end for the `indmatch` library.
//!
//! The whole CLI lives behind [`run_cli`], which takes argv and returns the
//! exit code plus both output streams as strings; `main` only prints them.
//! That keeps every code path — including exit codes and byte-exact JSON —
//! testable in-process.
//!
//! Exit codes: 0 success, 1 bad input or violated precondition, 2 a
//! guarantee or verification failure, 3 an exhausted search budget.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use indmatch::bounds::{conjecture_scan, ScanSummary};
use indmatch::engine::{
    self, BoundOutcome, EngineConfig, EngineError, TraceStep, DEFAULT_EXACT_THRESHOLD,
};
use indmatch::families::{self, BlownCycleSpec};
use indmatch::graph::Edge;
use indmatch::io::{encode_graph6, encode_report, parse_edge_list, parse_graph6};
use indmatch::matching::{self, DEFAULT_NODE_BUDGET};
use indmatch::Graph;
use serde::Serialize;
use std::ffi::OsString;
use std::fmt::Write as _;

/// The result of a CLI run: exit code and captured streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliRun {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Everything that aborts a command: exit code plus a message for stderr.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

type CmdResult = Result<(i32, String), Failure>;

#[derive(Parser)]
#[command(
    name = "indmatch",
    version,
    about = "Induced matchings in graphs of maximum degree 4",
    long_about = "Constructive lower bounds with verifiable traces, exact solving, \
                  family generators, and a scanner for the 17*nu >= m conjecture."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a guaranteed induced matching and its derivation trace
    Bound {
        #[command(flatten)]
        src: Source,
        /// Print the full report as JSON
        #[arg(long)]
        json: bool,
        /// Solve components up to this order exactly
        #[arg(long, value_name = "N", default_value_t = DEFAULT_EXACT_THRESHOLD)]
        exact_threshold: usize,
        /// Fail instead of solving a component exactly when the reduction
        /// search comes up empty
        #[arg(long)]
        no_fallback: bool,
        /// Node budget for exact solves
        #[arg(long, value_name = "NODES", default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
    },
    /// Compute the exact induced matching number (small graphs)
    Exact {
        #[command(flatten)]
        src: Source,
        /// Print the result as JSON
        #[arg(long)]
        json: bool,
        /// Node budget for the branch-and-bound search
        #[arg(long, value_name = "NODES", default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
    },
    /// Check whether an edge set is an induced matching of a graph
    Verify {
        #[command(flatten)]
        src: Source,
        /// The edges to check, as "u v,u v,..."
        #[arg(long, value_name = "EDGES")]
        edges: String,
        /// Print the verdict as JSON
        #[arg(long)]
        json: bool,
    },
    /// Emit a graph as a graph6 line
    Gen {
        #[command(flatten)]
        src: Source,
    },
    /// Rate a file of graph6 lines by 17*nu/m and report the minimum
    Scan {
        /// File of graph6 lines, or '-' for stdin
        #[arg(long, value_name = "PATH")]
        file: String,
        /// Solve each graph exactly instead of using the engine bound
        #[arg(long)]
        exact: bool,
        /// Print the summary as JSON
        #[arg(long)]
        json: bool,
    },
}

/// Where a graph comes from; exactly one alternative must be given.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// File path or '-' for stdin; edge-list and graph6 content is
    /// autodetected
    #[arg(long, value_name = "PATH")]
    file: Option<String>,
    /// Inline graph6 line
    #[arg(long, value_name = "LINE")]
    g6: Option<String>,
    /// Named graph: c5sq, k33plus, h, doubleh, tripend,
    /// blown:A,B,C,D,E, or random:N,DENSITY,SEED
    #[arg(long, value_name = "NAME")]
    family: Option<String>,
}

/// Parses argv and runs the selected command.
pub fn run_cli<I, T>(argv: I) -> CliRun
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliRun {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => CliRun {
                    code: 1,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    let outcome = match cli.cmd {
        Cmd::Bound {
            src,
            json,
            exact_threshold,
            no_fallback,
            node_budget,
        } => cmd_bound(&src, json, exact_threshold, no_fallback, node_budget),
        Cmd::Exact {
            src,
            json,
            node_budget,
        } => cmd_exact(&src, json, node_budget),
        Cmd::Verify { src, edges, json } => cmd_verify(&src, &edges, json),
        Cmd::Gen { src } => cmd_gen(&src),
        Cmd::Scan { file, exact, json } => cmd_scan(&file, exact, json),
    };
    match outcome {
        Ok((code, stdout)) => CliRun {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(failure) => CliRun {
            code: failure.code,
            stdout: String::new(),
            stderr: failure.message + "\n",
        },
    }
}

fn cmd_bound(
    src: &Source,
    json: bool,
    exact_threshold: usize,
    no_fallback: bool,
    node_budget: u64,
) -> CmdResult {
    let g = load_source(src)?;
    let cfg = EngineConfig {
        exact_threshold,
        fallback_exact: !no_fallback,
        node_budget,
    };
    let out = engine::bounded_induced_matching_with(&g, &cfg).map_err(engine_failure)?;
    // Never print an unchecked result: re-verify the matching and the trace
    // independently of the engine.
    if let Err(v) = matching::check_induced_matching(&g, out.matching.edges()) {
        return Err(Failure {
            code: 2,
            message: format!("result failed re-verification: {v}"),
        });
    }
    if let Err(v) = engine::verify_trace(&g, &out.trace, &out.matching) {
        return Err(Failure {
            code: 2,
            message: format!("trace failed verification: {v}"),
        });
    }
    let stdout = if json {
        let line = encode_report(&out.report, &out.matching, &out.trace)
            .map_err(|e| Failure::input(e.to_string()))?;
        line + "\n"
    } else {
        render_bound(&out)
    };
    let code = if out.report.guarantee_ok { 0 } else { 2 };
    Ok((code, stdout))
}

fn render_bound(out: &BoundOutcome) -> String {
    let r = &out.report;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "n={} m={} isolated={} c5sq_components={}",
        r.n, r.m, r.isolated, r.c5sq_components
    );
    let _ = writeln!(s, "matching size {}{}", r.matching_size, render_edges(&out.matching));
    let _ = writeln!(
        s,
        "guarantee: 9*{} = {} >= {} = n - isolated - c5sq  [{}]",
        r.matching_size,
        9 * r.matching_size,
        r.demand(),
        ok(r.guarantee_ok)
    );
    let _ = writeln!(
        s,
        "corollary m/20: {} >= {}  [{}]",
        20 * r.matching_size,
        r.m,
        ok(r.m20_ok)
    );
    if r.m18_applicable {
        let _ = writeln!(
            s,
            "corollary m/18: {} >= {}  [{}]",
            18 * r.matching_size,
            r.m,
            ok(r.m18_ok)
        );
    } else {
        let _ = writeln!(s, "corollary m/18: not applicable (C5^2 components present)");
    }
    match r.conjecture_ratio {
        Some(ratio) => {
            let _ = writeln!(s, "conjecture ratio: {} (~{:.4})", ratio, ratio.to_f64());
        }
        None => {
            let _ = writeln!(s, "conjecture ratio: undefined");
        }
    }
    let isolated_leaves = out
        .trace
        .steps
        .iter()
        .filter(|t| matches!(t, TraceStep::IsolatedLeaf { .. }))
        .count();
    let _ = writeln!(s, "trace:");
    for step in &out.trace.steps {
        match step {
            TraceStep::Reduction(red) => {
                let _ = writeln!(
                    s,
                    "  reduction k={} ball={} isolated={} (budget {} <= {})",
                    red.marked.len(),
                    red.ball.len(),
                    red.isolated_after,
                    red.budget_lhs,
                    red.budget_rhs
                );
            }
            TraceStep::ExactLeaf {
                vertices,
                edges,
                fallback,
            } => {
                let _ = writeln!(
                    s,
                    "  exact leaf on {} vertices -> {} edge(s){}",
                    vertices.len(),
                    edges.len(),
                    if *fallback { " (reduction fallback)" } else { "" }
                );
            }
            TraceStep::C5SquaredLeaf { vertices, .. } => {
                let _ = writeln!(s, "  c5sq leaf on {} vertices -> 1 edge", vertices.len());
            }
            TraceStep::IsolatedLeaf { .. } => {}
        }
    }
    if isolated_leaves > 0 {
        let _ = writeln!(s, "  isolated leaves: {isolated_leaves}");
    }
    s
}

fn render_edges(m: &indmatch::InducedMatching) -> String {
    if m.is_empty() {
        return String::new();
    }
    let list: Vec<String> = m.edges().iter().map(|e| e.to_string()).collect();
    format!(": {}", list.join(" "))
}

fn ok(flag: bool) -> &'static str {
    if flag {
        "ok"
    } else {
        "FAIL"
    }
}

#[derive(Serialize)]
struct ExactDoc {
    n: usize,
    m: usize,
    matching_size: usize,
    matching: Vec<[usize; 2]>,
}

fn cmd_exact(src: &Source, json: bool, node_budget: u64) -> CmdResult {
    let g = load_source(src)?;
    let m = matching::exact_max_induced_matching(&g, node_budget).map_err(|e| Failure {
        code: 3,
        message: e.to_string(),
    })?;
    let stdout = if json {
        let doc = ExactDoc {
            n: g.order(),
            m: g.size(),
            matching_size: m.len(),
            matching: m.edges().iter().map(|e| [e.a(), e.b()]).collect(),
        };
        to_json_line(&doc)?
    } else {
        format!(
            "n={} m={}\nexact induced matching number {}{}\n",
            g.order(),
            g.size(),
            m.len(),
            render_edges(&m)
        )
    };
    Ok((0, stdout))
}

#[derive(Serialize)]
struct VerifyDoc {
    valid: bool,
    size: usize,
    violation: Option<String>,
}

fn cmd_verify(src: &Source, edges_arg: &str, json: bool) -> CmdResult {
    let g = load_source(src)?;
    let edges = parse_edges_arg(edges_arg).map_err(Failure::input)?;
    let verdict = matching::check_induced_matching(&g, &edges);
    let (valid, violation) = match &verdict {
        Ok(()) => (true, None),
        Err(v) => (false, Some(v.to_string())),
    };
    let stdout = if json {
        to_json_line(&VerifyDoc {
            valid,
            size: edges.len(),
            violation: violation.clone(),
        })?
    } else if valid {
        format!("valid induced matching of size {}\n", edges.len())
    } else {
        format!("invalid: {}\n", violation.expect("invalid has a violation"))
    };
    Ok((if valid { 0 } else { 1 }, stdout))
}

fn cmd_gen(src: &Source) -> CmdResult {
    let g = load_source(src)?;
    let line = encode_graph6(&g).map_err(|e| Failure::input(e.to_string()))?;
    Ok((0, line + "\n"))
}

#[derive(Serialize)]
struct ScanDoc {
    scanned: usize,
    skipped: Vec<SkipDoc>,
    minimum: Option<MinDoc>,
    counterexample: bool,
}

#[derive(Serialize)]
struct SkipDoc {
    index: usize,
    reason: String,
}

#[derive(Serialize)]
struct MinDoc {
    index: usize,
    ratio: String,
    ratio_float: f64,
    graph6: String,
    exact: bool,
}

fn cmd_scan(path: &str, exact: bool, json: bool) -> CmdResult {
    let text = read_input(path)?;
    let mut graphs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line)
            .map_err(|e| Failure::input(format!("line {}: {e}", idx + 1)))?;
        graphs.push(g);
    }
    let summary = conjecture_scan(&graphs, exact);
    let stdout = if json {
        let doc = ScanDoc {
            scanned: summary.scanned,
            skipped: summary
                .skipped
                .iter()
                .map(|s| SkipDoc {
                    index: s.index,
                    reason: s.reason.clone(),
                })
                .collect(),
            minimum: summary.minimum.as_ref().map(|m| MinDoc {
                index: m.index,
                ratio: m.ratio.to_string(),
                ratio_float: m.ratio.to_f64(),
                graph6: m.graph6.clone(),
                exact: m.exact,
            }),
            counterexample: summary.counterexample,
        };
        to_json_line(&doc)?
    } else {
        render_scan(&summary)
    };
    Ok((0, stdout))
}

fn render_scan(summary: &ScanSummary) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "scanned {} graph(s), skipped {}",
        summary.scanned,
        summary.skipped.len()
    );
    for skip in &summary.skipped {
        let _ = writeln!(s, "  skip {}: {}", skip.index, skip.reason);
    }
    match &summary.minimum {
        Some(min) => {
            let _ = writeln!(
                s,
                "minimum ratio {} (~{:.4}) at graph {} [{}]: {}",
                min.ratio,
                min.ratio.to_f64(),
                min.index,
                if min.exact { "exact" } else { "lower bound" },
                min.graph6
            );
        }
        None => {
            let _ = writeln!(s, "no graph received a ratio");
        }
    }
    let _ = writeln!(
        s,
        "{}",
        if summary.counterexample {
            "COUNTEREXAMPLE: an exact ratio fell below 1"
        } else {
            "no counterexample"
        }
    );
    s
}

fn to_json_line<T: Serialize>(doc: &T) -> Result<String, Failure> {
    serde_json::to_string(doc)
        .map(|s| s + "\n")
        .map_err(|e| Failure::input(e.to_string()))
}

/// Maps engine errors onto exit codes: violated preconditions are input
/// errors, a failed reduction search is a guarantee failure, and an
/// exhausted budget has its own code.
fn engine_failure(e: EngineError) -> Failure {
    let code = match &e {
        EngineError::TheoremViolation { .. } => 2,
        EngineError::Solve(_) => 3,
        _ => 1,
    };
    Failure {
        code,
        message: e.to_string(),
    }
}

fn load_source(src: &Source) -> Result<Graph, Failure> {
    if let Some(path) = &src.file {
        let text = read_input(path)?;
        return parse_graph_text(&text).map_err(Failure::input);
    }
    if let Some(line) = &src.g6 {
        return parse_graph6(line.trim()).map_err(|e| Failure::input(e.to_string()));
    }
    let name = src.family.as_deref().expect("clap enforces one source");
    family_graph(name).map_err(Failure::input)
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut text)
            .map_err(|e| Failure::input(format!("cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("cannot read {path}: {e}")))
    }
}

/// Autodetects the format of graph input text. Edge lists start with a
/// digit or a comment; graph6 bytes never do.
fn parse_graph_text(text: &str) -> Result<Graph, String> {
    let mut lines = text
        .lines()
        .map(|l| l.trim_end_matches('\r'))
        .filter(|l| !l.trim().is_empty());
    let Some(first) = lines.next() else {
        return Err("empty input".to_string());
    };
    let lead = first.trim_start().as_bytes()[0];
    if lead == b'#' || lead.is_ascii_digit() {
        parse_edge_list(text).map_err(|e| e.to_string())
    } else {
        if lines.next().is_some() {
            return Err(
                "input holds more than one graph6 line; use the scan subcommand".to_string()
            );
        }
        parse_graph6(first.trim()).map_err(|e| e.to_string())
    }
}

fn family_graph(name: &str) -> Result<Graph, String> {
    match name {
        "c5sq" => Ok(families::c5_squared()),
        "k33plus" => Ok(families::k33_plus()),
        "h" => Ok(families::h_graph()),
        "doubleh" => Ok(families::double_h()),
        "tripend" => Ok(families::triangle_pendants()),
        _ => {
            if let Some(spec) = name.strip_prefix("blown:") {
                let parts: Vec<usize> = spec
                    .split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| format!("blown spec needs five numbers, got {spec:?}"))?;
                let sizes: [usize; 5] = parts
                    .try_into()
                    .map_err(|_| format!("blown spec needs five numbers, got {spec:?}"))?;
                let spec = BlownCycleSpec::new(sizes).map_err(|e| e.to_string())?;
                Ok(families::blown_c5(&spec))
            } else if let Some(args) = name.strip_prefix("random:") {
                let toks: Vec<&str> = args.split(',').map(str::trim).collect();
                let [n, density, seed] = toks.as_slice() else {
                    return Err(format!("random spec needs N,DENSITY,SEED, got {args:?}"));
                };
                let n: usize = n.parse().map_err(|_| format!("bad vertex count {n:?}"))?;
                let density: f64 = density
                    .parse()
                    .map_err(|_| format!("bad density {density:?}"))?;
                if !(0.0..=1.0).contains(&density) {
                    return Err(format!("density {density} outside [0, 1]"));
                }
                let seed: u64 = seed.parse().map_err(|_| format!("bad seed {seed:?}"))?;
                Ok(families::random_max_deg4(n, density, seed))
            } else {
                Err(format!(
                    "unknown family {name:?}; expected c5sq, k33plus, h, doubleh, tripend, \
                     blown:A,B,C,D,E, or random:N,DENSITY,SEED"
                ))
            }
        }
    }
}

fn parse_edges_arg(arg: &str) -> Result<Vec<Edge>, String> {
    let trimmed = arg.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    let mut edges = Vec::new();
    for item in trimmed.split(',') {
        let toks: Vec<&str> = item.split_whitespace().collect();
        let [a, b] = toks.as_slice() else {
            return Err(format!("expected an edge `u v`, got {item:?}"));
        };
        let a: usize = a.parse().map_err(|_| format!("bad vertex {a:?}"))?;
        let b: usize = b.parse().map_err(|_| format!("bad vertex {b:?}"))?;
        if a == b {
            return Err(format!("an edge needs two distinct endpoints, got {a} {b}"));
        }
        edges.push(Edge::new(a, b));
    }
    Ok(edges)
}
