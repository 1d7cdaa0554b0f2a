//! Helpers shared by the integration suites.

use indmatch::graph::{Edge, Graph, VertexId};

/// Maximum induced matching size by plain exhaustive search: try every edge
/// subset whose members are pairwise independent, recursing over edge
/// indices in increasing order. Pairwise independence is hereditary, so
/// pruning dependent extensions loses nothing. Deliberately shares no code
/// with the branch-and-bound solver — this is the oracle it is judged by.
#[allow(dead_code)]
pub fn naive_max_induced_matching(g: &Graph) -> usize {
    fn extend(g: &Graph, edges: &[Edge], start: usize, chosen: &mut Vec<Edge>) -> usize {
        let mut best = chosen.len();
        for i in start..edges.len() {
            let e = edges[i];
            let fits = chosen
                .iter()
                .all(|&c| g.edges_independent(c, e).expect("edges of g"));
            if fits {
                chosen.push(e);
                best = best.max(extend(g, edges, i + 1, chosen));
                chosen.pop();
            }
        }
        best
    }
    let edges: Vec<Edge> = g.edges().collect();
    extend(g, &edges, 0, &mut Vec::new())
}

/// Rebuilds `g` with vertex `v` renamed to `perm[v]`.
#[allow(dead_code)]
pub fn relabel(g: &Graph, perm: &[VertexId]) -> Graph {
    let edges: Vec<(VertexId, VertexId)> =
        g.edges().map(|e| (perm[e.a()], perm[e.b()])).collect();
    Graph::build(g.order(), &edges).expect("a permutation keeps edges valid")
}
