//! Bound evaluation: the main guarantee, its edge-count corollaries, and a
//! scanner for the `17 nu_s(G) >= m(G)` conjecture.
//!
//! All ratios are exact rationals ([`Ratio`]): a scan looking for a
//! counterexample with ratio exactly 1 (the double-H value) must not hinge
//! on floating point.
//!
//! The corollaries follow from the main bound through the degree cap: with
//! maximum degree 4 every non-isolated vertex carries at most 4 edge
//! endpoints, so `m <= 2 (n - i)`, giving `nu_s >= (m/2 - n5) / 9 >= m/20`
//! in general and `nu_s >= m/18` when no `C5^2` component exists.

use crate::engine::{self, EngineConfig};
use crate::families;
use crate::graph::Graph;
use crate::io::graph6::encode_graph6;
use crate::matching::{self, DEFAULT_NODE_BUDGET};
use rayon::prelude::*;
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

/// An exact nonnegative rational, always stored reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    /// Builds `num/den` in lowest terms. Panics on a zero denominator.
    pub fn new(num: u64, den: u64) -> Ratio {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    /// The rational 1.
    pub fn one() -> Ratio {
        Ratio { num: 1, den: 1 }
    }

    /// Reduced numerator.
    pub fn num(&self) -> u64 {
        self.num
    }

    /// Reduced denominator.
    pub fn den(&self) -> u64 {
        self.den
    }

    /// Whether the value is exactly 1.
    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Nearest floating point value, for display only.
    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        // Cross multiply in 128 bits: no overflow, no rounding.
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// How a matching of a given size relates to the guarantees for its graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub isolated: usize,
    pub c5sq_components: usize,
    pub matching_size: usize,
    /// `9 * matching_size >= n - isolated - c5sq_components`.
    pub guarantee_ok: bool,
    /// `20 * matching_size >= m`.
    pub m20_ok: bool,
    /// The `m/18` corollary only applies without `C5^2` components.
    pub m18_applicable: bool,
    /// `18 * matching_size >= m`; vacuously true when not applicable.
    pub m18_ok: bool,
    /// `17 * matching_size / m`, defined when `m > 0` and no `C5^2`
    /// component exists.
    pub conjecture_ratio: Option<Ratio>,
}

impl BoundReport {
    /// The right-hand side of the main guarantee.
    pub fn demand(&self) -> usize {
        self.n - self.isolated - self.c5sq_components
    }
}

/// Evaluates every bound for a matching of `matching_size` edges on `g`.
pub fn bound_report(g: &Graph, matching_size: usize) -> BoundReport {
    let n = g.order();
    let m = g.size();
    let isolated = g.isolated_count();
    let c5sq_components = families::c5sq_component_count(g);
    let m18_applicable = c5sq_components == 0;
    BoundReport {
        n,
        m,
        isolated,
        c5sq_components,
        matching_size,
        guarantee_ok: 9 * matching_size >= n - isolated - c5sq_components,
        m20_ok: 20 * matching_size >= m,
        m18_applicable,
        m18_ok: !m18_applicable || 18 * matching_size >= m,
        conjecture_ratio: (m > 0 && m18_applicable)
            .then(|| Ratio::new(17 * matching_size as u64, m as u64)),
    }
}

/// A violated corollary, carrying the numbers that break it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorollaryViolation {
    /// Degree-4 graphs satisfy `m <= 2 (n - isolated)`.
    #[error("{m} = m > 2 (n - isolated) = 2 ({n} - {isolated})")]
    EdgeCount { m: usize, n: usize, isolated: usize },
    /// `20 nu_s >= m` fails.
    #[error("20 * {size} < {m}: the m/20 corollary fails")]
    MOver20 { size: usize, m: usize },
    /// `18 nu_s >= m` fails on a `C5^2`-free graph.
    #[error("18 * {size} < {m}: the m/18 corollary fails without C5^2 components")]
    MOver18 { size: usize, m: usize },
}

/// Checks the edge-count corollaries recorded in a report.
pub fn corollary_check(report: &BoundReport) -> Result<(), CorollaryViolation> {
    if report.m > 2 * (report.n - report.isolated) {
        return Err(CorollaryViolation::EdgeCount {
            m: report.m,
            n: report.n,
            isolated: report.isolated,
        });
    }
    if !report.m20_ok {
        return Err(CorollaryViolation::MOver20 {
            size: report.matching_size,
            m: report.m,
        });
    }
    if report.m18_applicable && !report.m18_ok {
        return Err(CorollaryViolation::MOver18 {
            size: report.matching_size,
            m: report.m,
        });
    }
    Ok(())
}

/// A graph the scanner refused to rate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkippedGraph {
    /// Index into the scanned slice.
    pub index: usize,
    pub reason: String,
}

/// The minimizing graph of a scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanMinimum {
    /// Index into the scanned slice.
    pub index: usize,
    /// `17 * nu / m`, where `nu` is exact or a lower bound per `exact`.
    pub ratio: Ratio,
    /// The graph in graph6, the tiebreaker between equal ratios.
    pub graph6: String,
    /// Whether `nu` was computed exactly.
    pub exact: bool,
}

/// Outcome of a conjecture scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanSummary {
    /// Graphs that received a ratio.
    pub scanned: usize,
    pub skipped: Vec<SkippedGraph>,
    pub minimum: Option<ScanMinimum>,
    /// Set only when an *exact* value dips below 1; engine lower bounds
    /// below 1 prove nothing and never set this.
    pub counterexample: bool,
}

enum ScanRow {
    Skip(String),
    Rated {
        ratio: Ratio,
        graph6: String,
        exact: bool,
    },
}

/// Rates every graph by `17 nu_s / m` and reports the minimum.
///
/// Graphs of maximum degree above 4, without edges, or with a `C5^2`
/// component are skipped with a reason. With `use_exact` the induced
/// matching number is solved exactly (falling back to the engine bound if
/// the solver budget runs out); otherwise the engine's constructive lower
/// bound is used. Rating runs in parallel, but the merge is sequential in
/// input order, so the summary is deterministic.
pub fn conjecture_scan(graphs: &[Graph], use_exact: bool) -> ScanSummary {
    let rows: Vec<ScanRow> = graphs
        .par_iter()
        .map(|g| rate_graph(g, use_exact))
        .collect();

    let mut summary = ScanSummary {
        scanned: 0,
        skipped: Vec::new(),
        minimum: None,
        counterexample: false,
    };
    for (index, row) in rows.into_iter().enumerate() {
        match row {
            ScanRow::Skip(reason) => summary.skipped.push(SkippedGraph { index, reason }),
            ScanRow::Rated {
                ratio,
                graph6,
                exact,
            } => {
                summary.scanned += 1;
                if exact && ratio < Ratio::one() {
                    summary.counterexample = true;
                }
                let better = match &summary.minimum {
                    None => true,
                    Some(min) => {
                        ratio < min.ratio || (ratio == min.ratio && graph6 < min.graph6)
                    }
                };
                if better {
                    summary.minimum = Some(ScanMinimum {
                        index,
                        ratio,
                        graph6,
                        exact,
                    });
                }
            }
        }
    }
    summary
}

fn rate_graph(g: &Graph, use_exact: bool) -> ScanRow {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) > 4) {
        return ScanRow::Skip(format!(
            "vertex {v} has degree {}, above the degree-4 regime",
            g.degree(v)
        ));
    }
    if g.size() == 0 {
        return ScanRow::Skip("no edges, ratio undefined".to_string());
    }
    let c5sq = families::c5sq_component_count(g);
    if c5sq > 0 {
        return ScanRow::Skip(format!(
            "{c5sq} C5^2 component(s); the conjecture excludes them"
        ));
    }
    let (size, exact) = if use_exact {
        match matching::exact_max_induced_matching(g, DEFAULT_NODE_BUDGET) {
            Ok(m) => (m.len(), true),
            Err(_) => (engine_lower_bound(g), false),
        }
    } else {
        (engine_lower_bound(g), false)
    };
    ScanRow::Rated {
        ratio: Ratio::new(17 * size as u64, g.size() as u64),
        graph6: encode_graph6(g).expect("scanned graphs fit the graph6 range"),
        exact,
    }
}

/// The engine's constructive matching size, with greedy as the last resort
/// if even the fallback exact solves blow their budget.
fn engine_lower_bound(g: &Graph) -> usize {
    let cfg = EngineConfig {
        fallback_exact: true,
        ..EngineConfig::default()
    };
    match engine::bounded_induced_matching_with(g, &cfg) {
        Ok(out) => out.matching.len(),
        Err(_) => matching::greedy_maximal_induced_matching(g).len(),
    }
}
