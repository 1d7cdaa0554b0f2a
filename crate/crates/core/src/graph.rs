//! Simple undirected graphs with dense vertex ids and sorted adjacency lists.
//!
//! Graphs are immutable once built. Every "mutation" (deleting a closed
//! neighborhood, dropping an edge, taking an induced subgraph) returns a new
//! graph over the ids `0..n'` plus an [`IdMap`] that relates the new ids to
//! the old ones, so callers can lift results back to the graph they started
//! from.

use std::fmt;
use thiserror::Error;

/// Vertex ids are plain indices into the adjacency table.
pub type VertexId = usize;

/// An undirected edge, stored with its endpoints in increasing order.
///
/// The derived `Ord` is the lexicographic order on `(a, b)`, which is the
/// canonical edge order used for deterministic iteration and tie-breaking
/// throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: VertexId,
    b: VertexId,
}

impl Edge {
    /// Builds an edge from two distinct endpoints, normalizing their order.
    ///
    /// Panics on `u == v`; self-loops are rejected earlier by
    /// [`Graph::build`], so reaching this with a loop is a programming error.
    pub fn new(u: VertexId, v: VertexId) -> Self {
        assert!(u != v, "self-loop at vertex {u}");
        if u < v {
            Edge { a: u, b: v }
        } else {
            Edge { a: v, b: u }
        }
    }

    /// The smaller endpoint.
    pub fn a(&self) -> VertexId {
        self.a
    }

    /// The larger endpoint.
    pub fn b(&self) -> VertexId {
        self.b
    }

    /// Both endpoints as `(smaller, larger)`.
    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.a, self.b)
    }

    /// Whether `v` is one of the endpoints.
    pub fn touches(&self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// Errors for graph construction and queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// An edge endpoint does not exist.
    #[error("vertex {v} out of range for a graph of order {n}")]
    VertexOutOfRange { v: VertexId, n: usize },
    /// A self-loop was supplied to a builder.
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    /// An operation expected an edge the graph does not contain.
    #[error("{0} is not an edge of the graph")]
    NotAnEdge(Edge),
}

/// Relates the vertex ids of a derived graph to the ids of its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdMap {
    old_to_new: Vec<Option<VertexId>>,
    new_to_old: Vec<VertexId>,
}

impl IdMap {
    /// New id of an old vertex, or `None` if it was removed.
    pub fn to_new(&self, old: VertexId) -> Option<VertexId> {
        self.old_to_new.get(old).copied().flatten()
    }

    /// Old id of a new vertex.
    pub fn to_old(&self, new: VertexId) -> VertexId {
        self.new_to_old[new]
    }

    /// The surviving old ids, indexed by new id (increasing).
    pub fn kept(&self) -> &[VertexId] {
        &self.new_to_old
    }
}

/// Result of deleting the closed neighborhood of a set of marked edges.
#[derive(Debug, Clone)]
pub struct BallRemoval {
    /// The graph induced on the vertices outside the closed ball.
    pub remainder: Graph,
    /// The deleted vertices (the closed ball), in increasing order.
    pub removed: Vec<VertexId>,
    /// Id translation from `remainder` back to the original graph.
    pub map: IdMap,
}

/// An immutable simple undirected graph.
///
/// Invariants: adjacency lists are sorted, loop-free and duplicate-free, and
/// `u` appears in `adj[v]` exactly when `v` appears in `adj[u]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    m: usize,
}

impl Graph {
    /// Builds a graph on vertices `0..n` from an edge list.
    ///
    /// Duplicate edges collapse silently; self-loops and out-of-range
    /// endpoints are errors.
    pub fn build(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    /// Degree of `v`.
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    /// Largest vertex degree, or 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Whether `u` and `v` are adjacent. Out-of-range ids are simply absent.
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Whether `e` is an edge of this graph.
    pub fn contains(&self, e: Edge) -> bool {
        self.has_edge(e.a, e.b)
    }

    /// All edges in canonical (lexicographic) order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&v| u < v)
                .map(move |&v| Edge { a: u, b: v })
        })
    }

    /// Number of isolated (degree-0) vertices.
    pub fn isolated_count(&self) -> usize {
        self.adj.iter().filter(|list| list.is_empty()).count()
    }

    /// Connected components as sorted vertex lists, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        let mut queue = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.clear();
            queue.push(root);
            let mut comp = vec![root];
            while let Some(u) = queue.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// BFS distance from `u` to `v`, or `None` if they are in different
    /// components.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<Option<usize>, GraphError> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { v: x, n });
            }
        }
        Ok(self.multi_source_distances(&[u])[v])
    }

    /// BFS layers from a set of sources; `None` marks unreachable vertices.
    fn multi_source_distances(&self, sources: &[VertexId]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut frontier: Vec<VertexId> = Vec::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                frontier.push(s);
            }
        }
        let mut next = Vec::new();
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            next.clear();
            for &u in &frontier {
                for &w in &self.adj[u] {
                    if dist[w].is_none() {
                        dist[w] = Some(d);
                        next.push(w);
                    }
                }
            }
            std::mem::swap(&mut frontier, &mut next);
        }
        dist
    }

    /// Smallest distance between an endpoint of `e` and an endpoint of `f`.
    pub fn edge_distance(&self, e: Edge, f: Edge) -> Result<Option<usize>, GraphError> {
        for g in [e, f] {
            if !self.contains(g) {
                return Err(GraphError::NotAnEdge(g));
            }
        }
        let dist = self.multi_source_distances(&[e.a, e.b]);
        Ok([dist[f.a], dist[f.b]].into_iter().flatten().min())
    }

    /// Whether `e` and `f` are independent: disjoint endpoints and no edge
    /// between any pair of their endpoints. An edge is never independent of
    /// itself.
    pub fn edges_independent(&self, e: Edge, f: Edge) -> Result<bool, GraphError> {
        for g in [e, f] {
            if !self.contains(g) {
                return Err(GraphError::NotAnEdge(g));
            }
        }
        if e.touches(f.a) || e.touches(f.b) {
            return Ok(false);
        }
        for x in [e.a, e.b] {
            for y in [f.a, f.b] {
                if self.has_edge(x, y) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Deletes every vertex at distance at most 1 from the marked edges (the
    /// closed ball around their endpoints) and returns the remainder.
    pub fn remove_closed_ball(&self, marked: &[Edge]) -> Result<BallRemoval, GraphError> {
        assert!(!marked.is_empty(), "no marked edges");
        let mut in_ball = vec![false; self.order()];
        for &e in marked {
            if !self.contains(e) {
                return Err(GraphError::NotAnEdge(e));
            }
            for x in [e.a, e.b] {
                in_ball[x] = true;
                for &w in &self.adj[x] {
                    in_ball[w] = true;
                }
            }
        }
        let mut removed = Vec::new();
        let mut kept = Vec::new();
        for v in 0..self.order() {
            if in_ball[v] {
                removed.push(v);
            } else {
                kept.push(v);
            }
        }
        let (remainder, map) = self.induced_subgraph(&kept);
        Ok(BallRemoval {
            remainder,
            removed,
            map,
        })
    }

    /// The subgraph induced on `verts` (which must be sorted and duplicate-
    /// free), with vertices renumbered to `0..verts.len()`.
    pub fn induced_subgraph(&self, verts: &[VertexId]) -> (Graph, IdMap) {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        let mut old_to_new = vec![None; self.order()];
        for (new, &old) in verts.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let adj: Vec<Vec<VertexId>> = verts
            .iter()
            .map(|&old| {
                // Old lists are sorted and the renumbering is monotone, so
                // the filtered lists stay sorted.
                self.adj[old]
                    .iter()
                    .filter_map(|&w| old_to_new[w])
                    .collect()
            })
            .collect();
        let m: usize = adj.iter().map(Vec::len).sum();
        (
            Graph { adj, m: m / 2 },
            IdMap {
                old_to_new,
                new_to_old: verts.to_vec(),
            },
        )
    }

    /// A copy of the graph with one edge deleted (same vertex set).
    pub fn without_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        if !self.contains(e) {
            return Err(GraphError::NotAnEdge(e));
        }
        let mut adj = self.adj.clone();
        for (x, y) in [(e.a, e.b), (e.b, e.a)] {
            let pos = adj[x].binary_search(&y).expect("checked above");
            adj[x].remove(pos);
        }
        Ok(Graph {
            adj,
            m: self.m - 1,
        })
    }

    /// Structural self-check: sorted, deduplicated, loop-free, symmetric
    /// adjacency and a consistent edge count. Cheap enough for tests to call
    /// after every derived-graph construction.
    pub fn is_consistent(&self) -> bool {
        let n = self.order();
        let mut half_edges = 0;
        for (u, list) in self.adj.iter().enumerate() {
            half_edges += list.len();
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &w in list {
                if w >= n || w == u || !self.has_edge(w, u) {
                    return false;
                }
            }
        }
        half_edges == 2 * self.m
    }
}
