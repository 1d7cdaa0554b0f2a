//! Induced matchings in graphs of maximum degree 4.
//!
//! An *induced matching* (also called a strong matching) is a set of edges
//! that are pairwise independent: no two of them share an endpoint or are
//! joined by an edge. For every graph `G` with maximum degree at most 4 the
//! induced matching number satisfies
//!
//! ```text
//! nu_s(G) >= (n(G) - i(G) - n5(G)) / 9
//! ```
//!
//! where `i(G)` counts isolated vertices and `n5(G)` counts components
//! isomorphic to the blown-up 5-cycle C5^2. This crate makes the bound
//! constructive: [`engine::bounded_induced_matching`] produces an induced
//! matching of at least that size together with a machine-checkable trace,
//! [`matching::exact_max_induced_matching`] solves small instances exactly,
//! and [`bounds`] evaluates the derived edge-count corollaries and the
//! `17 nu_s(G) >= m(G)` conjecture on graph collections.

pub mod bounds;
pub mod engine;
pub mod families;
pub mod graph;
pub mod io;
pub mod matching;

pub use graph::{Edge, Graph, VertexId};
pub use matching::InducedMatching;
