//! Acceptance suite. Every test prints one `criterion N: PASS/FAIL` line
//! (visible with `cargo test --test acceptance -- --nocapture`) and panics
//! on failure so the suite fails loudly under plain `cargo test` too.

mod common;

use common::{naive_max_induced_matching, relabel};
use indmatch::bounds::{bound_report, corollary_check, Ratio};
use indmatch::engine::{self, EngineConfig, TraceStep};
use indmatch::families;
use indmatch::graph::{Edge, Graph, VertexId};
use indmatch::io::{encode_graph6, parse_graph6};
use indmatch::matching::{self, DEFAULT_NODE_BUDGET};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn criterion(idx: usize, name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("criterion {idx}: PASS - {name}"),
        Err(why) => {
            println!("criterion {idx}: FAIL - {name}: {why}");
            panic!("criterion {idx} ({name}) failed: {why}");
        }
    }
}

macro_rules! check {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

const DENSITIES: [f64; 5] = [0.15, 0.3, 0.5, 0.75, 0.95];

#[test]
fn criterion_1_c5_squared_sharpness() {
    criterion(1, "C5^2 pins the n5 term of the bound", || {
        let g = families::c5_squared();
        let exact = matching::exact_max_induced_matching(&g, DEFAULT_NODE_BUDGET)
            .map_err(|e| e.to_string())?;
        check!(exact.len() == 1, "nu_s(C5^2) should be 1, got {}", exact.len());
        check!(
            naive_max_induced_matching(&g) == 1,
            "the exhaustive oracle disagrees with nu_s = 1"
        );
        // Without the n5 term the bound would ask for ceil(10/9) = 2 edges,
        // which C5^2 cannot deliver; with it the demand drops to 9.
        check!(
            9 * exact.len() < g.order(),
            "9 * nu_s = {} should fall short of n = {}",
            9 * exact.len(),
            g.order()
        );
        let report = bound_report(&g, exact.len());
        check!(report.demand() == 9, "demand should be 9, got {}", report.demand());
        check!(report.guarantee_ok, "9 * 1 >= 9 must hold");

        let out = engine::bounded_induced_matching(&g).map_err(|e| e.to_string())?;
        check!(out.matching.len() == 1, "engine should contribute one edge");
        check!(
            matches!(out.trace.steps.as_slice(), [TraceStep::C5SquaredLeaf { .. }]),
            "the trace should be a single C5^2 leaf, got {:?}",
            out.trace.steps
        );
        engine::verify_trace(&g, &out.trace, &out.matching).map_err(|e| e.to_string())?;
        Ok(())
    });
}

#[test]
fn criterion_2_triangle_pendants_reduction_budget() {
    criterion(2, "triangle-pendants reduces at exact budget equality", || {
        let g = families::triangle_pendants();
        // Marking the triangle edge 0-1 deletes seven vertices and isolates
        // the two pendants of the remaining corner.
        let probe = engine::probe_reduction(&g, &[Edge::new(0, 1)]).map_err(|e| e.to_string())?;
        check!(
            probe.ball.len() == 7 && probe.isolated_after == 2,
            "triangle edge should give |S| = 7 and i = 2, got {} and {}",
            probe.ball.len(),
            probe.isolated_after
        );

        // Forcing the exact threshold to zero sends the component down the
        // reduction path instead of the small-component solver.
        let cfg = EngineConfig {
            exact_threshold: 0,
            fallback_exact: false,
            ..EngineConfig::default()
        };
        let out = engine::bounded_induced_matching_with(&g, &cfg).map_err(|e| e.to_string())?;
        let TraceStep::Reduction(red) = &out.trace.steps[0] else {
            return Err(format!(
                "first step should be a reduction, got {:?}",
                out.trace.steps[0]
            ));
        };
        check!(
            red.budget_lhs == 9 && red.budget_rhs == 9,
            "the budget should hold with equality 9 = 9, got {} <= {}",
            red.budget_lhs,
            red.budget_rhs
        );
        check!(out.matching.len() == 1, "one edge suffices, got {}", out.matching.len());
        check!(
            naive_max_induced_matching(&g) == 1,
            "nu_s(triangle-pendants) should be 1"
        );
        engine::verify_trace(&g, &out.trace, &out.matching).map_err(|e| e.to_string())?;
        check!(
            out.report.guarantee_ok && out.report.demand() == 9,
            "the bound should be met with demand 9 exactly"
        );
        Ok(())
    });
}

#[test]
fn criterion_3_double_h_extremal() {
    criterion(3, "double-H is the conjecture's extremal case", || {
        let g = families::double_h();
        check!(g.order() == 17, "n should be 17, got {}", g.order());
        check!(g.size() == 34, "m should be 34, got {}", g.size());
        check!(
            (0..17).all(|v| g.degree(v) == 4),
            "double-H should be 4-regular"
        );

        // Exactly one vertex glues the two H copies: the unique cut vertex.
        let mut cut_vertices = Vec::new();
        for v in 0..g.order() {
            let rest: Vec<VertexId> = (0..g.order()).filter(|&u| u != v).collect();
            let (sub, _) = g.induced_subgraph(&rest);
            if sub.components().len() > 1 {
                cut_vertices.push(v);
            }
        }
        check!(
            cut_vertices.len() == 1,
            "expected exactly one gluing vertex, found {cut_vertices:?}"
        );

        let exact = matching::exact_max_induced_matching(&g, DEFAULT_NODE_BUDGET)
            .map_err(|e| e.to_string())?;
        check!(exact.len() == 2, "nu_s(double-H) should be 2, got {}", exact.len());
        check!(
            naive_max_induced_matching(&g) == 2,
            "the exhaustive oracle disagrees with nu_s = 2"
        );
        // 17 * nu_s / m = 34/34: exactly 1, witnessed in integers.
        check!(17 * exact.len() == g.size(), "17 * 2 should equal m = 34");
        let ratio = bound_report(&g, exact.len())
            .conjecture_ratio
            .ok_or("the ratio should be defined")?;
        check!(
            ratio.is_one() && ratio == Ratio::one(),
            "the conjecture ratio should be exactly 1, got {ratio}"
        );
        Ok(())
    });
}

#[test]
fn criterion_4_engine_runs_on_seeded_graphs_without_fallback() {
    criterion(4, "500 seeded graphs pass the engine with fallback disabled", || {
        let cfg = EngineConfig {
            fallback_exact: false,
            ..EngineConfig::default()
        };
        let mut ran = 0usize;
        for seed in 0..500u64 {
            let n = 1 + ((seed as usize) * 13 + 5) % 60;
            let density = DENSITIES[seed as usize % DENSITIES.len()];
            let g = families::random_max_deg4(n, density, seed);
            let started = Instant::now();
            let out = engine::bounded_induced_matching_with(&g, &cfg)
                .map_err(|e| format!("seed {seed} (n = {n}): {e}"))?;
            let elapsed = started.elapsed();
            check!(
                elapsed.as_secs_f64() < 2.0,
                "seed {seed} (n = {n}) took {elapsed:?}, over the 2s limit"
            );
            engine::verify_trace(&g, &out.trace, &out.matching)
                .map_err(|e| format!("seed {seed}: trace rejected: {e}"))?;
            check!(
                out.report.guarantee_ok,
                "seed {seed}: matching of {} misses demand {}",
                out.matching.len(),
                out.report.demand()
            );
            ran += 1;
        }
        check!(ran == 500, "expected 500 runs, got {ran}");
        Ok(())
    });
}

#[test]
fn criterion_5_solver_matches_the_oracle() {
    criterion(5, "exact solver equals the exhaustive oracle", || {
        let started = Instant::now();
        let mut compared = 0usize;
        let mut run = |n: usize, seed: u64| -> Result<(), String> {
            let density = DENSITIES[seed as usize % DENSITIES.len()];
            let g = families::random_max_deg4(n, density, seed);
            let exact = matching::exact_max_induced_matching(&g, DEFAULT_NODE_BUDGET)
                .map_err(|e| format!("seed {seed}: {e}"))?;
            let oracle = naive_max_induced_matching(&g);
            if exact.len() != oracle {
                return Err(format!(
                    "seed {seed} (n = {n}): solver found {}, oracle {oracle}",
                    exact.len()
                ));
            }
            // The engine result squeezes in between greedy and exact.
            let out = engine::bounded_induced_matching(&g).map_err(|e| e.to_string())?;
            if out.matching.len() > oracle {
                return Err(format!(
                    "seed {seed}: engine exceeded the exact optimum ({} > {oracle})",
                    out.matching.len()
                ));
            }
            compared += 1;
            Ok(())
        };
        for seed in 0..200u64 {
            run(2 + (seed as usize * 7) % 15, seed)?; // orders 2..=16
        }
        for seed in 1000..1050u64 {
            run(1 + (seed as usize) % 10, seed)?; // orders 1..=10
        }
        let elapsed = started.elapsed();
        check!(
            elapsed.as_secs_f64() < 60.0,
            "the oracle comparison took {elapsed:?}, over the 60s limit"
        );
        check!(compared == 250, "expected 250 comparisons, got {compared}");
        Ok(())
    });
}

#[test]
fn criterion_6_corollaries_hold() {
    criterion(6, "edge-count corollaries hold across the board", || {
        let mut graphs: Vec<(String, Graph)> = vec![
            ("c5sq".into(), families::c5_squared()),
            ("k33plus".into(), families::k33_plus()),
            ("h".into(), families::h_graph()),
            ("doubleh".into(), families::double_h()),
            ("tripend".into(), families::triangle_pendants()),
        ];
        for seed in 0..100u64 {
            let n = 1 + (seed as usize * 11) % 50;
            let density = DENSITIES[seed as usize % DENSITIES.len()];
            graphs.push((format!("seed {seed}"), families::random_max_deg4(n, density, seed)));
        }
        for (label, g) in &graphs {
            let out = engine::bounded_induced_matching(g)
                .map_err(|e| format!("{label}: {e}"))?;
            check!(
                out.report.guarantee_ok,
                "{label}: the main guarantee failed"
            );
            corollary_check(&out.report)
                .map_err(|e| format!("{label}: corollary violated: {e}"))?;
            // Spelled out once more, independent of the report flags:
            // m <= 2 (n - i), 20 nu >= m, and 18 nu >= m without C5^2 parts.
            let (n, m, i) = (g.order(), g.size(), g.isolated_count());
            let nu = out.matching.len();
            check!(m <= 2 * (n - i), "{label}: m > 2(n - i)");
            check!(20 * nu >= m, "{label}: 20 nu < m");
            if out.report.c5sq_components == 0 {
                check!(18 * nu >= m, "{label}: 18 nu < m on a C5^2-free graph");
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_7_graph6_round_trips() {
    criterion(7, "graph6 codec round-trips 1000 seeded graphs", || {
        // Frozen hand-checked vectors first.
        for (line, n, m) in [("@", 1, 0), ("A_", 2, 1), ("Bw", 3, 3)] {
            let g = parse_graph6(line).map_err(|e| format!("{line}: {e}"))?;
            check!(
                g.order() == n && g.size() == m,
                "{line} should decode to n = {n}, m = {m}, got {} and {}",
                g.order(),
                g.size()
            );
            let back = encode_graph6(&g).map_err(|e| e.to_string())?;
            check!(back == line, "{line} should re-encode to itself, got {back}");
        }
        let mut trips = 0usize;
        for seed in 0..1000u64 {
            // Orders 0..=69 cross the one-byte/four-byte header boundary.
            let n = (seed as usize * 17) % 70;
            let density = DENSITIES[seed as usize % DENSITIES.len()];
            let g = families::random_max_deg4(n, density, seed);
            let line = encode_graph6(&g).map_err(|e| format!("seed {seed}: {e}"))?;
            let back = parse_graph6(&line).map_err(|e| format!("seed {seed}: {e}"))?;
            check!(back == g, "seed {seed} (n = {n}): decode(encode(g)) != g");
            trips += 1;
        }
        check!(trips == 1000, "expected 1000 round trips, got {trips}");
        Ok(())
    });
}

#[test]
fn criterion_8_recognizer_is_isomorphism_invariant() {
    criterion(8, "C5^2 recognizer is label-blind and exact", || {
        let g = families::c5_squared();
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut perm: Vec<VertexId> = (0..10).collect();
        for round in 0..100 {
            perm.shuffle(&mut rng);
            let h = relabel(&g, &perm);
            check!(
                families::is_c5_squared(&h),
                "relabeling {round} was not recognized (perm {perm:?})"
            );
        }
        // The square of the 10-cycle is 4-regular on ten vertices too.
        let edges: Vec<(VertexId, VertexId)> = (0..10usize)
            .flat_map(|v| [(v, (v + 1) % 10), (v, (v + 2) % 10)])
            .collect();
        let c10sq = Graph::build(10, &edges).map_err(|e| e.to_string())?;
        check!(c10sq.size() == 20, "C10^2 should have 20 edges");
        check!(
            !families::is_c5_squared(&c10sq),
            "C10^2 must not pass the recognizer"
        );
        // Deleting any single edge must also break recognition.
        for e in g.edges() {
            let smaller = g.without_edge(e).map_err(|err| err.to_string())?;
            check!(
                !families::is_c5_squared(&smaller),
                "C5^2 minus {e} must not pass the recognizer"
            );
        }
        Ok(())
    });
}
