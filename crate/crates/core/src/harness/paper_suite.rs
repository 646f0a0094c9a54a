//! Published example values, checked one by one.

use std::fmt::Debug;

use serde::Serialize;

use crate::alliance::{self, certify, Requirement};
use crate::bounds::{self, Target};
use crate::error::Result;
use crate::graph::generators::{complete, complete_bipartite, cycle, hypercube, petersen, star};
use crate::graph::Graph;
use crate::solver::oracle::brute_force_oracle;
use crate::solver::{self, feasibility_profile, Parameter, SolveOptions};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Default)]
struct Suite {
    checks: Vec<Check>,
}

impl Suite {
    fn eq<T: PartialEq + Debug>(&mut self, name: impl Into<String>, got: Result<T>, expected: T) {
        let (passed, detail) = match got {
            Ok(v) if v == expected => (true, format!("{v:?}")),
            Ok(v) => (false, format!("got {v:?}, expected {expected:?}")),
            Err(e) => (false, format!("error: {e}")),
        };
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail,
        });
    }
}

fn value(g: &Graph, p: Parameter, k: Option<i64>) -> Result<Option<usize>> {
    Ok(solver::solve(g, p, k, SolveOptions::default())?.value)
}

fn gka(g: &Graph, k: i64) -> Result<Option<usize>> {
    value(g, Parameter::GammaKA, Some(k))
}

fn bound(r: bounds::BoundReport) -> Result<Option<i64>> {
    Ok(if r.applicable { r.value } else { None })
}

fn set(g: &Graph, vs: &[usize]) -> VertexSet {
    VertexSet::from_vertices(g, vs.iter().copied()).expect("vertices in range")
}

/// Runs every published example plus the headline value tables.
pub fn run_paper_suite() -> Vec<Check> {
    let mut s = Suite::default();
    let q3 = hypercube(3).expect("Q_3");
    let pet = petersen();
    let k4 = complete(4).expect("K_4");
    let k14 = star(5).expect("K_{1,4}");
    let k33 = complete_bipartite(3, 3).expect("K_{3,3}");
    // vertices 0, 1, 3, 2 form a face of the cube
    let face = set(&q3, &[0, 1, 2, 3]);

    // cube
    s.eq("Q3 a_-1", value(&q3, Parameter::AK, Some(-1)), Some(2));
    s.eq("Q3 a_0", value(&q3, Parameter::AK, Some(0)), Some(4));
    for k in [-1, 0] {
        s.eq(format!("Q3 gamma_{k}^a"), gka(&q3, k), Some(4));
    }
    for k in [2, 3] {
        s.eq(format!("Q3 gamma_{k}^a"), gka(&q3, k), Some(8));
    }
    s.eq("Q3 gamma", value(&q3, Parameter::Gamma, None), Some(2));
    s.eq("Q3 gamma_t", value(&q3, Parameter::GammaT, None), Some(4));
    for k in [0, 1] {
        s.eq(
            format!("Q3 gamma_{k}^ca"),
            value(&q3, Parameter::GammaKCA, Some(k)),
            Some(4),
        );
    }
    s.eq(
        "Q3 oracle gamma",
        brute_force_oracle(&q3, Parameter::Gamma, None).map(|r| r.value),
        Some(2),
    );
    s.eq(
        "Q3 oracle gamma_t",
        brute_force_oracle(&q3, Parameter::GammaT, None).map(|r| r.value),
        Some(4),
    );
    s.eq(
        "Q3 face boundary degrees",
        Ok(alliance::boundary_degrees(&q3, &face)
            .iter()
            .enumerate()
            .filter(|(v, _)| face.contains(*v))
            .all(|(_, d)| (d.inside, d.outside) == (2, 1))),
        true,
    );
    s.eq(
        "Q3 adjacent pair is a defensive (-1)-alliance",
        alliance::is_defensive_k_alliance(&q3, &set(&q3, &[0, 1]), -1),
        true,
    );
    s.eq(
        "Q3 face is a defensive 0-alliance",
        alliance::is_defensive_k_alliance(&q3, &face, 0),
        true,
    );
    s.eq(
        "Q3 face certifies as a global connected 0-alliance",
        certify(&q3, &face, 0, Requirement::GlobalConnected)
            .map(|c| c.is_defensive && c.is_dominating && c.is_connected_induced),
        true,
    );
    s.eq(
        "Q3 antipodal pair augments to a global (-1)-alliance of size 4",
        alliance::cubic_augment_dominating(&q3, &set(&q3, &[0, 7]))
            .and_then(|w| Ok((w.len(), alliance::is_global_defensive_k_alliance(&q3, &w, -1)?))),
        (4, true),
    );
    s.eq("Q3 lower_sqrt k=-3", bound(bounds::lower_sqrt(8, -3)), Some(2));
    s.eq("Q3 lower_sqrt k=1", bound(bounds::lower_sqrt(8, 1)), Some(4));
    s.eq(
        "Q3 cubic upper",
        bounds::cubic_upper_2gamma(&q3).and_then(bound),
        Some(4),
    );
    s.eq(
        "Q3 triangle-free planar subgraph k=0",
        bound(bounds::planar_subgraph_lower(8, 0, true)),
        Some(4),
    );
    s.eq(
        "Q3 planar graph k=3",
        bound(bounds::planar_graph_lower(&q3, 3, true)),
        Some(8),
    );
    s.eq(
        "Q3 planar graph k=1",
        bound(bounds::planar_graph_lower(&q3, 1, true)),
        Some(4),
    );
    s.eq(
        "Q3 connected_lower_i k=0",
        bound(bounds::connected_lower_i(8, 3, 0)),
        Some(3),
    );
    s.eq(
        "Q3 connected_lower_ii k=0",
        bound(bounds::connected_lower_ii(8, 3, 3, 0)),
        Some(4),
    );
    s.eq("Q3 parity partner of 0", Ok(bounds::parity_collapse(&q3, 0)), 1);
    s.eq(
        "C4 parity partner of -1",
        cycle(4).map(|c4| bounds::parity_collapse(&c4, -1)),
        0,
    );

    // complete graphs
    for n in 2..=8usize {
        let kn = complete(n).expect("K_n");
        let ni = n as i64;
        for k in (1 - ni)..ni {
            s.eq(
                format!("K{n} gamma_{k}^a closed form"),
                gka(&kn, k).map(|v| v.map(|v| v as i64)),
                bounds::kn_closed_form(n, k).ok(),
            );
            for r in 1..=((k + ni - 1) / 2) {
                let lowered = gka(&kn, k - 2 * r);
                s.eq(
                    format!("K{n} gamma_{}^a + {r} = gamma_{k}^a", k - 2 * r),
                    lowered.map(|v| v.map(|v| v + r as usize)),
                    gka(&kn, k).unwrap_or(None),
                );
            }
        }
    }
    s.eq("K7 gamma_2^a", gka(&complete(7).expect("K_7"), 2), Some(5));
    s.eq(
        "K5 upper witness at k=0",
        complete(5).and_then(|k5| {
            let w = alliance::construct_upper_witness(&k5, 0)?;
            Ok((w.len(), alliance::is_global_defensive_k_alliance(&k5, &w, 0)?))
        }),
        (3, true),
    );
    s.eq("K4 closed form k=-3", bounds::kn_closed_form(4, -3), 1);
    s.eq("K4 closed form k=3", bounds::kn_closed_form(4, 3), 4);
    s.eq(
        "K4 cubic upper",
        bounds::cubic_upper_2gamma(&k4).and_then(bound),
        Some(2),
    );

    // Petersen graph
    for (k, expected) in [(-3, 3), (-2, 4), (-1, 4), (0, 5), (1, 5), (2, 10), (3, 10)] {
        s.eq(format!("Petersen gamma_{k}^a"), gka(&pet, k), Some(expected));
        s.eq(
            format!("Petersen lower_maxdeg k={k}"),
            bound(bounds::lower_maxdeg(10, 3, k)),
            Some(expected as i64),
        );
    }
    s.eq(
        "Petersen V certifies at k=3",
        certify(&pet, &VertexSet::full(&pet), 3, Requirement::Global).map(|c| c.holds),
        true,
    );
    s.eq(
        "Petersen aggregate lower at k=2",
        bounds::evaluate_all(&pet, 2, Target::GammaKA).map(|r| bounds::aggregate_lower(&r)),
        Some(10),
    );

    // line graph of the star
    s.eq("L(K_{1,4}) is K4", k14.line_graph().map(|(l, _)| l == k4), true);
    for (k, expected) in [(-3, 1), (-2, 2), (-1, 2), (2, 4), (3, 4)] {
        s.eq(format!("K4 gamma_{k}^a"), gka(&k4, k), Some(expected));
    }
    for (k, expected) in [(-3, 1), (-1, 2), (3, 4)] {
        s.eq(
            format!("K_{{1,4}} line_graph_lower k={k}"),
            bound(bounds::line_graph_lower(4, 4, 1, k)),
            Some(expected),
        );
    }

    // K_{3,3}
    for k in [-3, -2, -1] {
        s.eq(
            format!("K33 gamma_{k}^ca"),
            value(&k33, Parameter::GammaKCA, Some(k)),
            Some(2),
        );
        s.eq(
            format!("K33 connected_lower_i k={k}"),
            bound(bounds::connected_lower_i(6, 2, k)),
            Some(2),
        );
        s.eq(
            format!("K33 connected_lower_ii k={k}"),
            bound(bounds::connected_lower_ii(6, 2, 3, k)),
            Some(2),
        );
    }

    // nonexistence
    for k in 2..=4 {
        s.eq(
            format!("K_{{1,4}} a_{k} does not exist"),
            value(&k14, Parameter::AK, Some(k)),
            None,
        );
    }
    s.eq(
        "K_{1,4} defensive alliances exist exactly for k <= 1",
        feasibility_profile(&k14, SolveOptions::default())
            .map(|p| p.iter().filter(|f| f.exists_defensive).map(|f| f.k).max()),
        Some(1),
    );
    s.eq("K_{1,4} gamma_4^a does not exist", gka(&k14, 4), None);
    s.eq("K_{1,4} tree bound k=0", bound(bounds::tree_lower(5, 1, 0)), Some(3));
    for (name, g) in [("Q3", &q3), ("Petersen", &pet), ("K4", &k4)] {
        let d1 = g.max_degree() as i64;
        let n = g.n();
        s.eq(format!("{name} gamma_{{d_1-1}}^a = n"), gka(g, d1 - 1), Some(n));
        s.eq(format!("{name} gamma_{{d_1}}^a = n"), gka(g, d1), Some(n));
    }
    s.checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_published_example_matches() {
        let checks = run_paper_suite();
        assert!(checks.len() > 100);
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:#?}");
    }
}
