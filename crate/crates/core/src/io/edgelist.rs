//! Plain-text edge lists.
//!
//! The format is line oriented: `#` starts a comment that runs to the end of
//! the line, blank lines are ignored, the first data line is `n m`, and
//! exactly `m` data lines `u v` follow. The explicit vertex count means
//! isolated vertices survive serialization, which graph formats keyed on
//! edges alone would lose.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

/// Errors produced while parsing edge lists.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    /// A line does not consist of the expected whitespace-separated numbers.
    #[error("line {line}: expected {expected}, found {found:?}")]
    BadToken {
        line: usize,
        expected: &'static str,
        found: String,
    },
    /// The number of edge lines does not match the header.
    #[error("header announced {announced} edges, found {found}")]
    CountMismatch { announced: usize, found: usize },
    /// An edge is structurally invalid (endpoint range, self-loop).
    #[error("line {line}: {source}")]
    BadEdge {
        line: usize,
        #[source]
        source: GraphError,
    },
}

/// Parses the edge-list format described in the module docs.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut data_lines = text.lines().enumerate().filter_map(|(idx, raw)| {
        let stripped = raw.split('#').next().unwrap_or("").trim();
        (!stripped.is_empty()).then_some((idx + 1, stripped))
    });

    let Some((line, header)) = data_lines.next() else {
        return Err(EdgeListError::BadToken {
            line: 1,
            expected: "a header line `n m`",
            found: String::new(),
        });
    };
    let (n, m) = parse_pair(line, header, "a header line `n m`")?;

    let mut edges = Vec::with_capacity(m);
    let mut edge_lines = Vec::with_capacity(m);
    for (line, body) in data_lines {
        let (u, v) = parse_pair(line, body, "an edge line `u v`")?;
        edges.push((u, v));
        edge_lines.push(line);
    }
    if edges.len() != m {
        return Err(EdgeListError::CountMismatch {
            announced: m,
            found: edges.len(),
        });
    }
    Graph::build(n, &edges).map_err(|source| {
        let bad = match source {
            GraphError::VertexOutOfRange { v, .. } => v,
            GraphError::SelfLoop(v) => v,
            GraphError::NotAnEdge(e) => e.a(),
        };
        let line = edges
            .iter()
            .position(|&(u, v)| u == bad || v == bad)
            .map(|i| edge_lines[i])
            .unwrap_or(0);
        EdgeListError::BadEdge { line, source }
    })
}

/// Renders a graph in the same format, one edge per line in canonical order.
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.a(), e.b()));
    }
    out
}

/// Parses exactly two usize tokens from a stripped line.
fn parse_pair(
    line: usize,
    body: &str,
    expected: &'static str,
) -> Result<(usize, usize), EdgeListError> {
    let bad = || EdgeListError::BadToken {
        line,
        expected,
        found: body.to_string(),
    };
    let mut tokens = body.split_whitespace();
    let a = tokens.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
    let b = tokens.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
    if tokens.next().is_some() {
        return Err(bad());
    }
    Ok((a, b))
}
