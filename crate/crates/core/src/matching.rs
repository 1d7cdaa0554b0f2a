//! Induced matchings: validity checking, a greedy baseline, and an exact
//! branch-and-bound solver for small instances.
//!
//! Two edges are *independent* when they share no endpoint and no edge joins
//! their endpoints; an induced matching is a set of pairwise independent
//! edges. Deciding the maximum size is NP-hard in general, so the exact
//! solver is budgeted: it aborts with [`SolveError::BudgetExhausted`] instead
//! of running away on inputs it was never meant for.

use crate::graph::{Edge, Graph};
use thiserror::Error;

/// Default number of search nodes the exact solver may expand.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// A set of pairwise independent edges, stored sorted in canonical order.
///
/// The constructor sorts and deduplicates but does not validate independence;
/// use [`check_induced_matching`] against a concrete graph for that.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InducedMatching {
    edges: Vec<Edge>,
}

impl InducedMatching {
    /// Wraps a set of edges, normalizing order and dropping duplicates.
    pub fn new(mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        InducedMatching { edges }
    }

    /// The edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    /// Whether the matching is empty.
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Why a set of edges fails to be an induced matching of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingViolation {
    /// The edge does not exist in the graph.
    #[error("{0} is not an edge of the graph")]
    NotAnEdge(Edge),
    /// Two of the listed edges are not independent; the pair is the witness.
    #[error("edges {0} and {1} are not independent")]
    Dependent(Edge, Edge),
}

/// Errors from the exact solver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    /// The branch-and-bound search exceeded its node budget.
    #[error("exact search exhausted its budget of {0} nodes")]
    BudgetExhausted(u64),
}

/// Checks that `edges` forms an induced matching of `g`, reporting the
/// first offending edge or pair otherwise. Duplicate entries fail as a
/// dependent pair (an edge is never independent of itself).
pub fn check_induced_matching(g: &Graph, edges: &[Edge]) -> Result<(), MatchingViolation> {
    for &e in edges {
        if !g.contains(e) {
            return Err(MatchingViolation::NotAnEdge(e));
        }
    }
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            let independent = g
                .edges_independent(e, f)
                .expect("edges were checked above");
            if !independent {
                return Err(MatchingViolation::Dependent(e, f));
            }
        }
    }
    Ok(())
}

/// Whether `edges` is an induced matching of `g`.
pub fn is_induced_matching(g: &Graph, edges: &[Edge]) -> bool {
    check_induced_matching(g, edges).is_ok()
}

/// Greedy maximal induced matching: sweep the edges in canonical order and
/// keep every edge independent of everything kept so far. The result is
/// maximal (no edge of `g` can be added) and deterministic.
pub fn greedy_maximal_induced_matching(g: &Graph) -> InducedMatching {
    let mut chosen: Vec<Edge> = Vec::new();
    for e in g.edges() {
        let ok = chosen
            .iter()
            .all(|&c| g.edges_independent(c, e).expect("both edges exist"));
        if ok {
            chosen.push(e);
        }
    }
    InducedMatching::new(chosen)
}

/// Exact maximum induced matching by branch and bound.
///
/// The graph itself never changes during the search — independence is always
/// judged against `g`, because deleting edges would weaken the conflict
/// relation (two edges joined only by a deleted edge would wrongly count as
/// independent). The search state is the set of still-allowed edges.
/// Branching picks the allowed edge with the largest endpoint degree (ties
/// broken toward the canonically least edge) and splits on "take it" — drop
/// every edge conflicting with it — versus "forbid it" — drop just that
/// edge. A greedy matching seeds the incumbent, and a node is pruned when a
/// greedy clique cover of the conflict structure on the allowed edges cannot
/// lift the current selection past the incumbent.
///
/// Every search node costs one unit of `node_budget`; the search aborts with
/// [`SolveError::BudgetExhausted`] when the budget runs out rather than
/// stalling on an oversized instance.
pub fn exact_max_induced_matching(
    g: &Graph,
    node_budget: u64,
) -> Result<InducedMatching, SolveError> {
    let mut best = greedy_maximal_induced_matching(g).edges.clone();
    let allowed: Vec<Edge> = g.edges().collect();
    let mut search = Search {
        g,
        best: &mut best,
        nodes: 0,
        budget: node_budget,
    };
    search.run(&allowed, &mut Vec::new())?;
    Ok(InducedMatching::new(best))
}

struct Search<'a> {
    g: &'a Graph,
    /// Incumbent: the best induced matching found so far.
    best: &'a mut Vec<Edge>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Explores the subproblem where exactly `allowed` may still be picked;
    /// `chosen` holds the edges taken so far, each independent of everything
    /// in `allowed`.
    fn run(&mut self, allowed: &[Edge], chosen: &mut Vec<Edge>) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SolveError::BudgetExhausted(self.budget));
        }
        if chosen.len() > self.best.len() {
            self.best.clone_from(chosen);
        }
        if allowed.is_empty() {
            return Ok(());
        }
        let optimistic = chosen.len() + clique_cover_bound(self.g, allowed);
        if optimistic <= self.best.len() {
            return Ok(());
        }
        let e = branch_edge(self.g, allowed);
        let independent = |f: Edge| {
            self.g
                .edges_independent(e, f)
                .expect("allowed edges are in g")
        };

        // Take e: only edges independent of it stay allowed.
        let surviving: Vec<Edge> = allowed
            .iter()
            .copied()
            .filter(|&f| f != e && independent(f))
            .collect();
        chosen.push(e);
        self.run(&surviving, chosen)?;
        chosen.pop();

        // Forbid e: just e leaves the allowed set.
        let rest: Vec<Edge> = allowed.iter().copied().filter(|&f| f != e).collect();
        self.run(&rest, chosen)
    }
}

/// The branching edge: maximum endpoint degree, then canonically least.
fn branch_edge(g: &Graph, allowed: &[Edge]) -> Edge {
    *allowed
        .iter()
        .min_by_key(|e| {
            let d = g.degree(e.a()).max(g.degree(e.b()));
            (std::cmp::Reverse(d), **e)
        })
        .expect("caller checked allowed is nonempty")
}

/// Upper bound on the induced matching number within `allowed`: greedily
/// covers the allowed edges by cliques of pairwise conflicting edges (judged
/// in `g`); any induced matching takes at most one edge per clique.
fn clique_cover_bound(g: &Graph, allowed: &[Edge]) -> usize {
    let mut covered = vec![false; allowed.len()];
    let mut cliques = 0;
    for i in 0..allowed.len() {
        if covered[i] {
            continue;
        }
        cliques += 1;
        covered[i] = true;
        let mut clique = vec![allowed[i]];
        for j in i + 1..allowed.len() {
            if covered[j] {
                continue;
            }
            let conflicts_all = clique
                .iter()
                .all(|&c| !g.edges_independent(c, allowed[j]).expect("edges of g"));
            if conflicts_all {
                covered[j] = true;
                clique.push(allowed[j]);
            }
        }
    }
    cliques
}
