//! The reduction engine: a constructive proof of the degree-4 bound.
//!
//! For a graph `G` with maximum degree at most 4 the induced matching number
//! satisfies `9 nu_s(G) >= n(G) - i(G) - n5(G)`, where `i` counts isolated
//! vertices and `n5` counts `C5^2` components. The engine turns that bound
//! into an algorithm. Each connected component is handled by one of four
//! moves:
//!
//! * an isolated vertex is a leaf that contributes nothing (it is excused
//!   by the `i` term);
//! * a `C5^2` component is a leaf contributing exactly one edge (excused by
//!   the `n5` term: nine of its ten vertices are paid for by that edge);
//! * a component of order at most [`EngineConfig::exact_threshold`] is
//!   solved exactly;
//! * otherwise [`find_reduction`] produces `k` marked edges (`k` is 1 or 2)
//!   whose closed neighborhood ball `S` satisfies the budget
//!   `|S| + i' <= 9k`, where `i'` counts the vertices isolated by deleting
//!   `S`. The marked edges join the matching, the ball is deleted, and the
//!   engine recurses on what remains.
//!
//! The budget telescopes: every deleted or isolated vertex is paid for at a
//! rate of at most nine per matching edge, which is exactly the bound. The
//! recursion never meets a `C5^2` component, because every component of the
//! remainder contains a vertex that lost a neighbor to the ball and `C5^2`
//! is 4-regular.
//!
//! Every run yields a [`ReductionTrace`] that [`verify_trace`] can check
//! independently, so the engine never has to be trusted — only the checker.

use crate::bounds::{self, BoundReport};
use crate::families::is_c5_squared;
use crate::graph::{Edge, Graph, GraphError, VertexId};
use crate::matching::{self, InducedMatching, MatchingViolation, SolveError};
use thiserror::Error;

/// Components up to this order are solved exactly by default. The reduction
/// search is only guaranteed to succeed on larger components, and exact
/// search at this size is still fast.
pub const DEFAULT_EXACT_THRESHOLD: usize = 18;

/// Phase 2 of [`find_reduction`] only tries marked pairs whose endpoint
/// distance is at most this; useful pairs are local, so the cheap phase
/// almost always wins before the all-pairs phase runs.
const PAIR_DISTANCE_CAP: usize = 6;

/// Tuning knobs for [`bounded_induced_matching_with`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineConfig {
    /// Components of at most this order go to the exact solver directly.
    pub exact_threshold: usize,
    /// When the reduction search fails on a component (which the degree-4
    /// bound says cannot happen), solve that component exactly instead of
    /// failing; the trace records the detour.
    pub fallback_exact: bool,
    /// Node budget for exact solves.
    pub node_budget: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            exact_threshold: DEFAULT_EXACT_THRESHOLD,
            fallback_exact: false,
            node_budget: matching::DEFAULT_NODE_BUDGET,
        }
    }
}

/// A budget-satisfying reduction step on a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    /// The marked edges (1 or 2, pairwise independent).
    pub marked: Vec<Edge>,
    /// The closed ball around the marked edges, sorted.
    pub ball: Vec<VertexId>,
    /// Vertices outside the ball that deleting it isolates.
    pub isolated_after: usize,
    /// `|ball| + isolated_after`.
    pub budget_lhs: usize,
    /// `9 * marked.len()`.
    pub budget_rhs: usize,
}

/// One move of the engine, in the vertex ids of the original graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceStep {
    /// Marked edges joined the matching and their ball left the graph.
    Reduction(Reduction),
    /// A whole component was solved exactly; `fallback` records whether it
    /// got here because the reduction search failed on it.
    ExactLeaf {
        vertices: Vec<VertexId>,
        edges: Vec<Edge>,
        fallback: bool,
    },
    /// A `C5^2` component contributed one canonical edge.
    C5SquaredLeaf { vertices: Vec<VertexId>, edge: Edge },
    /// An isolated vertex contributed nothing.
    IsolatedLeaf { vertex: VertexId },
}

impl TraceStep {
    /// The vertices this step disposes of. Steps of a valid trace cover the
    /// graph exactly once.
    pub fn covered(&self) -> Vec<VertexId> {
        match self {
            TraceStep::Reduction(r) => r.ball.clone(),
            TraceStep::ExactLeaf { vertices, .. } => vertices.clone(),
            TraceStep::C5SquaredLeaf { vertices, .. } => vertices.clone(),
            TraceStep::IsolatedLeaf { vertex } => vec![*vertex],
        }
    }

    /// The matching edges this step contributed.
    pub fn contributed_edges(&self) -> Vec<Edge> {
        match self {
            TraceStep::Reduction(r) => r.marked.clone(),
            TraceStep::ExactLeaf { edges, .. } => edges.clone(),
            TraceStep::C5SquaredLeaf { edge, .. } => vec![*edge],
            TraceStep::IsolatedLeaf { .. } => Vec::new(),
        }
    }
}

/// The full derivation of a bound run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    /// Order of the graph the trace describes.
    pub graph_order: usize,
    /// Steps in the order the engine performed them.
    pub steps: Vec<TraceStep>,
}

/// Everything a bound run produces.
#[derive(Debug, Clone)]
pub struct BoundOutcome {
    pub matching: InducedMatching,
    pub trace: ReductionTrace,
    pub report: BoundReport,
}

/// Errors of the engine and the reduction search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    /// The whole machinery requires maximum degree 4.
    #[error("vertex {v} has degree {degree}; maximum degree 4 is required")]
    MaxDegreeExceeded { v: VertexId, degree: usize },
    /// Reduction search needs at least one edge to mark.
    #[error("graph of order {order} is too small for a reduction")]
    OrderTooSmall { order: usize },
    /// Reduction search operates on connected graphs only.
    #[error("reduction search requires a connected graph")]
    Disconnected,
    /// `C5^2` admits no budget reduction; it must be handled as a leaf.
    #[error("the component is C5^2, which admits no budget reduction")]
    IsC5Squared,
    /// No budget-satisfying reduction was found, contradicting the degree-4
    /// bound; carries the component for post-mortems.
    #[error(
        "no budget reduction in a component of order {} with {} edges; \
         the degree-4 bound guarantees one exists",
        component.order(),
        component.size()
    )]
    TheoremViolation { component: Box<Graph> },
    /// An exact leaf ran out of search nodes.
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Computes the reduction data (ball, isolation count, budget sides) for a
/// given set of marked edges without committing to it.
pub fn probe_reduction(g: &Graph, marked: &[Edge]) -> Result<Reduction, GraphError> {
    assert!(!marked.is_empty(), "no marked edges");
    let mut in_ball = vec![false; g.order()];
    for &e in marked {
        if !g.contains(e) {
            return Err(GraphError::NotAnEdge(e));
        }
        for x in [e.a(), e.b()] {
            in_ball[x] = true;
            for &w in g.neighbors(x) {
                in_ball[w] = true;
            }
        }
    }
    let ball: Vec<VertexId> = (0..g.order()).filter(|&v| in_ball[v]).collect();
    let isolated_after = (0..g.order())
        .filter(|&v| !in_ball[v] && g.neighbors(v).iter().all(|&w| in_ball[w]))
        .count();
    Ok(Reduction {
        budget_lhs: ball.len() + isolated_after,
        budget_rhs: 9 * marked.len(),
        marked: marked.to_vec(),
        ball,
        isolated_after,
    })
}

/// Searches a connected component for a budget-satisfying reduction.
///
/// Phase 1 tries single marked edges, ordered by the smaller endpoint degree
/// (a pendant edge has a small ball) and canonically within ties. Phase 2
/// tries independent pairs of edges at endpoint distance at most 6, and
/// phase 3 all independent pairs. The first candidate whose budget holds
/// wins, so the result is deterministic.
pub fn find_reduction(c: &Graph) -> Result<Reduction, EngineError> {
    if let Some(v) = (0..c.order()).find(|&v| c.degree(v) > 4) {
        return Err(EngineError::MaxDegreeExceeded {
            v,
            degree: c.degree(v),
        });
    }
    if c.order() < 2 {
        return Err(EngineError::OrderTooSmall { order: c.order() });
    }
    if c.components().len() != 1 {
        return Err(EngineError::Disconnected);
    }
    if is_c5_squared(c) {
        return Err(EngineError::IsC5Squared);
    }

    let mut candidates: Vec<Edge> = c.edges().collect();
    candidates.sort_by_key(|e| (c.degree(e.a()).min(c.degree(e.b())), *e));

    for &e in &candidates {
        let red = probe_reduction(c, &[e]).expect("candidate edge is in c");
        if red.budget_lhs <= red.budget_rhs {
            return Ok(red);
        }
    }

    for cap in [Some(PAIR_DISTANCE_CAP), None] {
        for (i, &e) in candidates.iter().enumerate() {
            for &f in &candidates[i + 1..] {
                if !c.edges_independent(e, f).expect("candidates are in c") {
                    continue;
                }
                if let Some(cap) = cap {
                    let close = c
                        .edge_distance(e, f)
                        .expect("candidates are in c")
                        .is_some_and(|d| d <= cap);
                    if !close {
                        continue;
                    }
                }
                let red = probe_reduction(c, &[e, f]).expect("candidates are in c");
                if red.budget_lhs <= red.budget_rhs {
                    return Ok(red);
                }
            }
        }
    }

    Err(EngineError::TheoremViolation {
        component: Box::new(c.clone()),
    })
}

/// Runs the engine with the default configuration.
pub fn bounded_induced_matching(g: &Graph) -> Result<BoundOutcome, EngineError> {
    bounded_induced_matching_with(g, &EngineConfig::default())
}

/// Runs the engine: produces an induced matching of size at least
/// `(n - i - n5) / 9`, the trace deriving it, and the bound report.
pub fn bounded_induced_matching_with(
    g: &Graph,
    cfg: &EngineConfig,
) -> Result<BoundOutcome, EngineError> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) > 4) {
        return Err(EngineError::MaxDegreeExceeded {
            v,
            degree: g.degree(v),
        });
    }
    let mut steps = Vec::new();
    let mut edges: Vec<Edge> = Vec::new();
    for comp in g.components() {
        let (sub, _) = g.induced_subgraph(&comp);
        process_component(&sub, &comp, cfg, &mut steps, &mut edges)?;
    }
    let matching = InducedMatching::new(edges);
    assert!(
        matching::is_induced_matching(g, matching.edges()),
        "engine produced a dependent edge set; this is a bug"
    );
    let report = bounds::bound_report(g, matching.len());
    let trace = ReductionTrace {
        graph_order: g.order(),
        steps,
    };
    Ok(BoundOutcome {
        matching,
        trace,
        report,
    })
}

/// Handles one connected component. `to_root` translates the component's
/// dense ids back to the original graph.
fn process_component(
    c: &Graph,
    to_root: &[VertexId],
    cfg: &EngineConfig,
    steps: &mut Vec<TraceStep>,
    edges: &mut Vec<Edge>,
) -> Result<(), EngineError> {
    let lift = |e: Edge| Edge::new(to_root[e.a()], to_root[e.b()]);

    if c.order() == 1 {
        steps.push(TraceStep::IsolatedLeaf {
            vertex: to_root[0],
        });
        return Ok(());
    }
    if is_c5_squared(c) {
        let edge = lift(c.edges().next().expect("C5^2 has edges"));
        edges.push(edge);
        steps.push(TraceStep::C5SquaredLeaf {
            vertices: to_root.to_vec(),
            edge,
        });
        return Ok(());
    }
    if c.order() <= cfg.exact_threshold {
        return exact_leaf(c, to_root, cfg, steps, edges, false);
    }
    match find_reduction(c) {
        Ok(red) => {
            let removal = c
                .remove_closed_ball(&red.marked)
                .expect("reduction edges are in c");
            let lifted = Reduction {
                marked: red.marked.iter().map(|&e| lift(e)).collect(),
                ball: red.ball.iter().map(|&v| to_root[v]).collect(),
                ..red
            };
            edges.extend(lifted.marked.iter().copied());
            steps.push(TraceStep::Reduction(lifted));
            for comp in removal.remainder.components() {
                let (sub, _) = removal.remainder.induced_subgraph(&comp);
                // Every remainder component lost a neighbor to the ball, so
                // it is not 4-regular, let alone C5^2.
                debug_assert!(!is_c5_squared(&sub));
                let to_root2: Vec<VertexId> = comp
                    .iter()
                    .map(|&v| to_root[removal.map.to_old(v)])
                    .collect();
                process_component(&sub, &to_root2, cfg, steps, edges)?;
            }
            Ok(())
        }
        Err(EngineError::TheoremViolation { .. }) if cfg.fallback_exact => {
            exact_leaf(c, to_root, cfg, steps, edges, true)
        }
        Err(e) => Err(e),
    }
}

/// Solves a component exactly and records it as a leaf.
fn exact_leaf(
    c: &Graph,
    to_root: &[VertexId],
    cfg: &EngineConfig,
    steps: &mut Vec<TraceStep>,
    edges: &mut Vec<Edge>,
    fallback: bool,
) -> Result<(), EngineError> {
    let solved = matching::exact_max_induced_matching(c, cfg.node_budget)?;
    let lifted: Vec<Edge> = solved
        .edges()
        .iter()
        .map(|e| Edge::new(to_root[e.a()], to_root[e.b()]))
        .collect();
    edges.extend(lifted.iter().copied());
    steps.push(TraceStep::ExactLeaf {
        vertices: to_root.to_vec(),
        edges: lifted,
        fallback,
    });
    Ok(())
}

/// How a trace fails verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceViolation {
    /// The trace describes a graph of a different order.
    #[error("trace records order {trace}, graph has order {graph}")]
    OrderMismatch { trace: usize, graph: usize },
    /// A step names a vertex the graph does not have.
    #[error("step {step} names vertex {vertex}, which is not in the graph")]
    ForeignVertex { step: usize, vertex: VertexId },
    /// The steps do not partition the vertex set.
    #[error("vertex {vertex} is covered {count} times by the trace, expected exactly once")]
    CoverageBroken { vertex: VertexId, count: usize },
    /// A reduction step's budget arithmetic is wrong or over budget.
    #[error("step {step}: {detail}")]
    BudgetBroken { step: usize, detail: String },
    /// The contributed edges do not add up to the matching.
    #[error("the union of contributed edges does not equal the matching")]
    EdgeUnionMismatch,
    /// The matching is not an induced matching of the graph.
    #[error("matching invalid: {0}")]
    NotInduced(#[from] MatchingViolation),
    /// The matching is too small for the bound the trace claims to prove.
    #[error("9 * {matching} < {demand} = n - isolated - c5sq")]
    BoundNotMet { matching: usize, demand: usize },
}

/// Independently verifies a bound run: the steps partition the vertex set,
/// every reduction respects its budget, the contributed edges are exactly
/// the matching, the matching is an induced matching of `g`, and its size
/// meets the degree-4 bound recomputed from `g` alone.
pub fn verify_trace(
    g: &Graph,
    trace: &ReductionTrace,
    m: &InducedMatching,
) -> Result<(), TraceViolation> {
    let n = g.order();
    if trace.graph_order != n {
        return Err(TraceViolation::OrderMismatch {
            trace: trace.graph_order,
            graph: n,
        });
    }

    // (a) The steps cover every vertex exactly once.
    let mut cover = vec![0usize; n];
    for (idx, step) in trace.steps.iter().enumerate() {
        for v in step.covered() {
            if v >= n {
                return Err(TraceViolation::ForeignVertex { step: idx, vertex: v });
            }
            cover[v] += 1;
        }
    }
    for (v, &count) in cover.iter().enumerate() {
        if count != 1 {
            return Err(TraceViolation::CoverageBroken { vertex: v, count });
        }
    }

    // (b) Budget arithmetic of every reduction step.
    for (idx, step) in trace.steps.iter().enumerate() {
        let TraceStep::Reduction(r) = step else {
            continue;
        };
        let k = r.marked.len();
        let detail = if !(1..=2).contains(&k) {
            Some(format!("{k} marked edges, expected 1 or 2"))
        } else if r.budget_rhs != 9 * k {
            Some(format!("budget rhs {} is not 9 * {k}", r.budget_rhs))
        } else if r.budget_lhs != r.ball.len() + r.isolated_after {
            Some(format!(
                "budget lhs {} is not |ball| {} + isolated {}",
                r.budget_lhs,
                r.ball.len(),
                r.isolated_after
            ))
        } else if r.budget_lhs > r.budget_rhs {
            Some(format!(
                "budget exceeded: {} > {}",
                r.budget_lhs, r.budget_rhs
            ))
        } else if r
            .marked
            .iter()
            .any(|e| !r.ball.contains(&e.a()) || !r.ball.contains(&e.b()))
        {
            Some("a marked edge lies outside its own ball".to_string())
        } else {
            None
        };
        if let Some(detail) = detail {
            return Err(TraceViolation::BudgetBroken { step: idx, detail });
        }
    }

    // (c) Contributed edges add up to the matching.
    let mut contributed: Vec<Edge> = trace
        .steps
        .iter()
        .flat_map(|s| s.contributed_edges())
        .collect();
    contributed.sort_unstable();
    if contributed != m.edges() {
        return Err(TraceViolation::EdgeUnionMismatch);
    }

    // (d) The matching is an induced matching of g.
    matching::check_induced_matching(g, m.edges())?;

    // (e) The size meets the bound, recomputed from g alone.
    let demand = n - g.isolated_count() - crate::families::c5sq_component_count(g);
    if 9 * m.len() < demand {
        return Err(TraceViolation::BoundNotMet {
            matching: m.len(),
            demand,
        });
    }
    Ok(())
}
