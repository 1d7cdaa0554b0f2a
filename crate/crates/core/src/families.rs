//! Named graph families used as test beds and extremal examples.
//!
//! The blown-up 5-cycle construction replaces each vertex of a 5-cycle by an
//! independent set and each edge by a complete bipartite graph. Several
//! members are important enough to get their own constructors:
//!
//! * `C5^2 = blown [2,2,2,2,2]` — the unique connected 4-regular graph with
//!   ten vertices whose induced matching number is 1; it is the reason the
//!   main bound carries a `n5` correction term.
//! * `K33+ = blown [1,1,1,2,2]` and `H = blown [1,1,1,3,3]` — small sharp
//!   examples; `H` has a unique degree-2 vertex.
//! * [`double_h`] — two copies of `H` glued at their degree-2 vertices,
//!   a 4-regular graph with `17 * nu_s = m` exactly, the extremal case of
//!   the `17 nu_s >= m` conjecture.
//! * [`triangle_pendants`] — a triangle with two pendant edges per vertex;
//!   nine vertices, nine edges, induced matching number 1, so the main
//!   bound is tight on it.

use crate::graph::{Graph, VertexId};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use thiserror::Error;

/// Errors for family constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    /// Every part of a blown cycle must contain at least one vertex.
    #[error("blown cycle parts must all be nonempty, got {0:?}")]
    BadSpec([usize; 5]),
}

/// Part sizes for a blown-up 5-cycle; all five entries are at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlownCycleSpec {
    sizes: [usize; 5],
}

impl BlownCycleSpec {
    /// Validates the part sizes.
    pub fn new(sizes: [usize; 5]) -> Result<Self, FamilyError> {
        if sizes.contains(&0) {
            return Err(FamilyError::BadSpec(sizes));
        }
        Ok(BlownCycleSpec { sizes })
    }

    /// The five part sizes in cycle order.
    pub fn sizes(&self) -> [usize; 5] {
        self.sizes
    }
}

/// Builds the blown-up 5-cycle for a spec. Parts occupy consecutive id
/// ranges in cycle order, and consecutive parts are joined completely.
pub fn blown_c5(spec: &BlownCycleSpec) -> Graph {
    let sizes = spec.sizes;
    let mut start = [0usize; 5];
    for p in 1..5 {
        start[p] = start[p - 1] + sizes[p - 1];
    }
    let n: usize = sizes.iter().sum();
    let part = |p: usize| start[p]..start[p] + sizes[p];
    let mut edges = Vec::new();
    for p in 0..5 {
        let q = (p + 1) % 5;
        for u in part(p) {
            for v in part(q) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).expect("parts are disjoint id ranges")
}

/// `C5^2`: the blown-up 5-cycle with all parts of size 2.
pub fn c5_squared() -> Graph {
    blown_c5(&BlownCycleSpec::new([2; 5]).expect("constant spec"))
}

/// `K33+`: the blown-up 5-cycle with parts 1, 1, 1, 2, 2 (seven vertices,
/// ten edges).
pub fn k33_plus() -> Graph {
    blown_c5(&BlownCycleSpec::new([1, 1, 1, 2, 2]).expect("constant spec"))
}

/// `H`: the blown-up 5-cycle with parts 1, 1, 1, 3, 3 (nine vertices,
/// seventeen edges, one vertex of degree 2).
pub fn h_graph() -> Graph {
    blown_c5(&BlownCycleSpec::new([1, 1, 1, 3, 3]).expect("constant spec"))
}

/// Two copies of `H` glued at their unique degree-2 vertices: 17 vertices,
/// 34 edges, 4-regular, induced matching number 2.
pub fn double_h() -> Graph {
    let h = h_graph();
    let n = h.order();
    let d = (0..n)
        .find(|&v| h.degree(v) == 2)
        .expect("H has a degree-2 vertex");
    // The second copy shares vertex d and packs its other vertices densely
    // after the first copy.
    let shift = |v: VertexId| match v.cmp(&d) {
        std::cmp::Ordering::Equal => d,
        std::cmp::Ordering::Less => n + v,
        std::cmp::Ordering::Greater => n + v - 1,
    };
    let mut edges: Vec<(VertexId, VertexId)> = h.edges().map(|e| e.endpoints()).collect();
    edges.extend(h.edges().map(|e| (shift(e.a()), shift(e.b()))));
    Graph::build(2 * n - 1, &edges).expect("copies only share the gluing vertex")
}

/// A triangle with two pendant edges at each corner: nine vertices, nine
/// edges, induced matching number 1, so the degree-4 bound is tight here.
pub fn triangle_pendants() -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    for corner in 0..3 {
        edges.push((corner, 3 + 2 * corner));
        edges.push((corner, 4 + 2 * corner));
    }
    Graph::build(9, &edges).expect("constant graph")
}

/// Seeded random graph with maximum degree at most 4.
///
/// All vertex pairs are shuffled under a ChaCha stream seeded by `seed`;
/// a pair becomes an edge when both endpoints still have degree below 4
/// and a `density`-biased coin accepts. The coin is only consulted after
/// the degree check passes, so lowering the density never changes which
/// pairs are degree-eligible under the same seed.
pub fn random_max_deg4(n: usize, density: f64, seed: u64) -> Graph {
    assert!(
        (0.0..=1.0).contains(&density),
        "density must lie in [0, 1], got {density}"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(VertexId, VertexId)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if degree[u] < 4 && degree[v] < 4 && rng.random_bool(density) {
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges).expect("pairs are valid edges")
}

/// Number of connected components of `g` isomorphic to `C5^2` — the `n5`
/// term of the degree-4 bound.
pub fn c5sq_component_count(g: &Graph) -> usize {
    g.components()
        .iter()
        .filter(|comp| {
            comp.len() == 10 && {
                let (sub, _) = g.induced_subgraph(comp);
                is_c5_squared(&sub)
            }
        })
        .count()
}

/// Recognizes `C5^2` up to isomorphism.
///
/// The test is structural rather than a search: `C5^2` is exactly the
/// 4-regular graph on ten vertices whose vertices fall into five classes of
/// false twins (vertices with identical neighborhoods) of size 2 such that
/// the classes, viewed as a quotient graph, form a 5-cycle. Identical
/// neighborhoods make adjacency between classes all-or-nothing, so these
/// conditions pin the graph down completely.
pub fn is_c5_squared(g: &Graph) -> bool {
    if g.order() != 10 || g.size() != 20 {
        return false;
    }
    if (0..10).any(|v| g.degree(v) != 4) {
        return false;
    }
    // Group vertices into false-twin classes.
    let mut classes: Vec<(&[VertexId], Vec<VertexId>)> = Vec::new();
    for v in 0..10 {
        let nb = g.neighbors(v);
        match classes.iter_mut().find(|(key, _)| *key == nb) {
            Some((_, members)) => members.push(v),
            None => classes.push((nb, vec![v])),
        }
    }
    if classes.len() != 5 || classes.iter().any(|(_, members)| members.len() != 2) {
        return false;
    }
    let class_of = |v: VertexId| {
        classes
            .iter()
            .position(|(_, members)| members.contains(&v))
            .expect("every vertex was classified")
    };
    // The quotient must be 2-regular and connected: that is the 5-cycle.
    let quotient: Vec<BTreeSet<usize>> = classes
        .iter()
        .map(|(key, _)| key.iter().map(|&w| class_of(w)).collect())
        .collect();
    if quotient.iter().any(|nb| nb.len() != 2) {
        return false;
    }
    let mut seen = [false; 5];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(c) = stack.pop() {
        for &d in &quotient[c] {
            if !seen[d] {
                seen[d] = true;
                stack.push(d);
            }
        }
    }
    seen.iter().all(|&s| s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &Graph, perm: &[VertexId]) -> Graph {
        let edges: Vec<_> = g.edges().map(|e| (perm[e.a()], perm[e.b()])).collect();
        Graph::build(g.order(), &edges).unwrap()
    }

    #[test]
    fn spec_rejects_empty_parts() {
        assert_eq!(
            BlownCycleSpec::new([1, 0, 1, 1, 1]),
            Err(FamilyError::BadSpec([1, 0, 1, 1, 1]))
        );
    }

    #[test]
    fn c5_squared_shape() {
        let g = c5_squared();
        assert_eq!(g.order(), 10);
        assert_eq!(g.size(), 20);
        assert!((0..10).all(|v| g.degree(v) == 4));
        assert!(g.is_consistent());
        assert_eq!(g.components().len(), 1);
    }

    #[test]
    fn k33_plus_shape() {
        let g = k33_plus();
        assert_eq!(g.order(), 7);
        assert_eq!(g.size(), 10);
        // K33+ is K_{3,3} with one edge subdivided: six degree-3 vertices
        // and the degree-2 subdivision vertex.
        let degree3 = (0..7).filter(|&v| g.degree(v) == 3).count();
        let degree2 = (0..7).filter(|&v| g.degree(v) == 2).count();
        assert_eq!((degree3, degree2), (6, 1));
        assert!(g.is_consistent());
    }

    #[test]
    fn h_graph_shape() {
        let g = h_graph();
        assert_eq!(g.order(), 9);
        assert_eq!(g.size(), 17);
        let low: Vec<_> = (0..9).filter(|&v| g.degree(v) == 2).collect();
        assert_eq!(low.len(), 1, "H has exactly one degree-2 vertex");
        assert!((0..9).all(|v| g.degree(v) == 2 || g.degree(v) == 4));
    }

    #[test]
    fn double_h_shape() {
        let g = double_h();
        assert_eq!(g.order(), 17);
        assert_eq!(g.size(), 34);
        assert!((0..17).all(|v| g.degree(v) == 4), "double-H is 4-regular");
        assert_eq!(g.components().len(), 1);
        assert!(g.is_consistent());
    }

    #[test]
    fn triangle_pendants_shape() {
        let g = triangle_pendants();
        assert_eq!(g.order(), 9);
        assert_eq!(g.size(), 9);
        let degree4 = (0..9).filter(|&v| g.degree(v) == 4).count();
        let degree1 = (0..9).filter(|&v| g.degree(v) == 1).count();
        assert_eq!((degree4, degree1), (3, 6));
    }

    #[test]
    fn random_graphs_are_deterministic_and_degree_capped() {
        for seed in 0..20u64 {
            let a = random_max_deg4(30, 0.6, seed);
            let b = random_max_deg4(30, 0.6, seed);
            assert_eq!(a, b, "same seed must give the same graph");
            assert!(a.max_degree() <= 4);
            assert!(a.is_consistent());
        }
        assert_ne!(
            random_max_deg4(30, 0.6, 1),
            random_max_deg4(30, 0.6, 2),
            "different seeds should disagree on 30 vertices"
        );
    }

    #[test]
    fn random_extreme_densities() {
        let empty = random_max_deg4(12, 0.0, 7);
        assert_eq!(empty.size(), 0);
        // Density 1 saturates greedily: no two vertices of degree < 4 stay
        // non-adjacent.
        let full = random_max_deg4(12, 1.0, 7);
        for u in 0..12 {
            for v in u + 1..12 {
                if full.degree(u) < 4 && full.degree(v) < 4 {
                    assert!(full.has_edge(u, v));
                }
            }
        }
        // Tiny orders do not panic.
        assert_eq!(random_max_deg4(0, 0.5, 3).order(), 0);
        assert_eq!(random_max_deg4(1, 0.5, 3).order(), 1);
    }

    #[test]
    fn recognizer_accepts_relabelings() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let g = c5_squared();
        assert!(is_c5_squared(&g));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let mut perm: Vec<VertexId> = (0..10).collect();
        for _ in 0..25 {
            perm.shuffle(&mut rng);
            assert!(is_c5_squared(&relabel(&g, &perm)));
        }
    }

    #[test]
    fn recognizer_rejects_near_misses() {
        // C10^2 (the square of a 10-cycle) is also 4-regular on ten
        // vertices but has no twin classes.
        let edges: Vec<_> = (0..10usize)
            .flat_map(|v| [(v, (v + 1) % 10), (v, (v + 2) % 10)])
            .collect();
        let c10sq = Graph::build(10, &edges).unwrap();
        assert_eq!(c10sq.size(), 20);
        assert!(!is_c5_squared(&c10sq));

        // Dropping any edge breaks 4-regularity.
        let g = c5_squared();
        let e = g.edges().next().unwrap();
        let smaller = g.without_edge(e).unwrap();
        assert!(!is_c5_squared(&smaller));

        // Wrong order entirely.
        assert!(!is_c5_squared(&k33_plus()));
    }

    #[test]
    fn component_count_sees_through_labels() {
        // C5^2 plus an isolated vertex plus a triangle, shuffled together.
        let c = c5_squared();
        let mut edges: Vec<_> = c.edges().map(|e| (e.a(), e.b())).collect();
        edges.extend([(11, 12), (12, 13), (11, 13)]);
        let g = Graph::build(14, &edges).unwrap();
        assert_eq!(c5sq_component_count(&g), 1);
        assert_eq!(c5sq_component_count(&c), 1);
        assert_eq!(c5sq_component_count(&triangle_pendants()), 0);
        assert_eq!(c5sq_component_count(&Graph::build(0, &[]).unwrap()), 0);
    }

    #[test]
    fn blown_parts_are_independent_and_fully_joined() {
        let spec = BlownCycleSpec::new([1, 2, 3, 1, 2]).unwrap();
        let g = blown_c5(&spec);
        assert_eq!(g.order(), 9);
        // Part ranges: [0], [1,2], [3,4,5], [6], [7,8].
        let parts: [&[usize]; 5] = [&[0], &[1, 2], &[3, 4, 5], &[6], &[7, 8]];
        let mut expected = 0;
        for p in 0..5 {
            let q = (p + 1) % 5;
            expected += parts[p].len() * parts[q].len();
            for &u in parts[p] {
                for &w in parts[p] {
                    assert!(u == w || !g.has_edge(u, w), "parts are independent");
                }
                for &v in parts[q] {
                    assert!(g.has_edge(u, v), "consecutive parts fully joined");
                }
            }
        }
        assert_eq!(g.size(), expected);
    }
}
