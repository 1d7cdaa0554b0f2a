//! JSON serialization of a bound run.
//!
//! The document layout is part of the crate's contract: fields serialize in
//! declaration order, the matching is sorted canonically, and trace rows
//! appear in engine order, so the same input always produces byte-identical
//! output. Ratios are exact rationals in memory but plain floats (or null)
//! in JSON, where consumers expect numbers.

use crate::bounds::BoundReport;
use crate::engine::{ReductionTrace, TraceStep};
use crate::graph::VertexId;
use crate::matching::InducedMatching;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors while rendering a report.
#[derive(Debug, Error)]
pub enum ReportError {
    #[error("serialization failed: {0}")]
    Serialize(#[from] serde_json::Error),
}

/// The JSON shape of a bound run. Field order is the serialization order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub n: usize,
    pub m: usize,
    pub isolated: usize,
    pub c5sq_components: usize,
    pub matching_size: usize,
    pub guarantee_ok: bool,
    pub ratio_m_over_20_ok: bool,
    /// `17 * matching_size / m` as a float, or null where undefined.
    pub conjecture_ratio: Option<f64>,
    /// Matching edges as `[a, b]` pairs in canonical order.
    pub matching: Vec<[VertexId; 2]>,
    /// One row per contributing step; isolated-vertex leaves carry no
    /// information beyond the report fields and are omitted.
    pub trace: Vec<TraceRow>,
}

/// One trace step in JSON form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    /// `"reduction"`, `"exact"`, or `"c5sq"`.
    pub kind: String,
    /// Marked edges for a reduction; contributed edges for a leaf.
    pub k: usize,
    /// Deleted ball for a reduction; component order for a leaf.
    pub ball_size: usize,
    /// Vertices isolated by a reduction; 0 for leaves.
    pub isolated_after: usize,
}

/// Assembles the document from the engine's outputs.
pub fn report_document(
    report: &BoundReport,
    matching: &InducedMatching,
    trace: &ReductionTrace,
) -> ReportDocument {
    let rows = trace
        .steps
        .iter()
        .filter_map(|step| match step {
            TraceStep::Reduction(r) => Some(TraceRow {
                kind: "reduction".to_string(),
                k: r.marked.len(),
                ball_size: r.ball.len(),
                isolated_after: r.isolated_after,
            }),
            TraceStep::ExactLeaf {
                vertices, edges, ..
            } => Some(TraceRow {
                kind: "exact".to_string(),
                k: edges.len(),
                ball_size: vertices.len(),
                isolated_after: 0,
            }),
            TraceStep::C5SquaredLeaf { vertices, .. } => Some(TraceRow {
                kind: "c5sq".to_string(),
                k: 1,
                ball_size: vertices.len(),
                isolated_after: 0,
            }),
            TraceStep::IsolatedLeaf { .. } => None,
        })
        .collect();
    ReportDocument {
        n: report.n,
        m: report.m,
        isolated: report.isolated,
        c5sq_components: report.c5sq_components,
        matching_size: report.matching_size,
        guarantee_ok: report.guarantee_ok,
        ratio_m_over_20_ok: report.m20_ok,
        conjecture_ratio: report.conjecture_ratio.map(|r| r.to_f64()),
        matching: matching
            .edges()
            .iter()
            .map(|e| [e.a(), e.b()])
            .collect(),
        trace: rows,
    }
}

/// Renders the document as a single JSON line.
pub fn encode_report(
    report: &BoundReport,
    matching: &InducedMatching,
    trace: &ReductionTrace,
) -> Result<String, ReportError> {
    Ok(serde_json::to_string(&report_document(
        report, matching, trace,
    ))?)
}
