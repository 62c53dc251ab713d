use anyhow::{bail, Result};
use kcoal_core::catalog::connected_graphs_up_to;
use kcoal_core::checks::graph_checks;
use kcoal_core::families::{complete, complete_bipartite, free_trees};
use kcoal_core::{brute_force_oracle, emit_graph6, exact_coalition_number, Graph, Mode};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::Report;

/// Failures listed per suite before truncation.
const SHOWN: usize = 20;

struct Suite {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
}

impl Suite {
    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "cases": self.cases,
            "failed": self.failures.len(),
            "failures": self.failures.iter().take(SHOWN).collect::<Vec<_>>(),
        })
    }
}

/// Solves every case with both solvers and runs the per-graph checks on
/// the result. A case fails if the solvers disagree, a certificate does not
/// re-verify, or a check fails.
fn run_suite(name: &'static str, cases: Vec<(Graph, usize, Mode)>) -> Suite {
    let failures: Vec<Vec<String>> = cases
        .par_iter()
        .map(|(g, k, mode)| {
            let tag = format!("{} k={k} {mode}", emit_graph6(g));
            let (exact, oracle) = match (
                exact_coalition_number(g, *k, *mode),
                brute_force_oracle(g, *k, *mode),
            ) {
                (Ok(a), Ok(b)) => (a, b),
                (a, b) => {
                    return vec![format!("{tag}: solver error {:?} / {:?}", a.err(), b.err())]
                }
            };
            let mut out = Vec::new();
            if exact.value != oracle.value {
                out.push(format!(
                    "{tag}: exact {} != oracle {}",
                    exact.value, oracle.value
                ));
            }
            if !exact.witness.verify(g) || !oracle.witness.verify(g) {
                out.push(format!("{tag}: certificate does not verify"));
            }
            for c in graph_checks(g, *k, *mode, &exact)
                .into_iter()
                .filter(|c| !c.passed)
            {
                out.push(format!("{tag}: {} ({})", c.name, c.detail));
            }
            out
        })
        .collect();
    Suite {
        name,
        cases: cases.len(),
        failures: failures.into_iter().flatten().collect(),
    }
}

pub(crate) fn selfcheck(max_order: usize) -> Result<Report> {
    if !(1..=7).contains(&max_order) {
        bail!("--max-order must be between 1 and 7, got {max_order}");
    }
    let mut suites = Vec::new();

    let catalog = connected_graphs_up_to(1, max_order)?;
    let cases = catalog
        .iter()
        .flat_map(|g| (1..=g.order() + 1).map(move |k| (g.clone(), k, Mode::Plain)))
        .collect();
    suites.push(run_suite("connected_catalog", cases));

    let cases = (2..=8)
        .flat_map(|n| (1..=n + 1).map(move |k| (complete(n).unwrap(), k, Mode::Plain)))
        .collect();
    suites.push(run_suite("complete_graphs", cases));

    let mut plain = Vec::new();
    let mut total = Vec::new();
    for s in 1..=4 {
        for t in s..=(9 - s) {
            let g = complete_bipartite(s, t)?;
            for k in 1..=3 {
                plain.push((g.clone(), k, Mode::Plain));
                if k >= 2 && s >= k {
                    total.push((g.clone(), k, Mode::Total));
                }
            }
        }
    }
    suites.push(run_suite("complete_bipartite", plain));
    suites.push(run_suite("complete_bipartite_total", total));

    let mut trees = Vec::new();
    for n in 2..=8 {
        trees.extend(free_trees(n)?.into_iter().map(|t| (t, 2, Mode::Plain)));
    }
    suites.push(run_suite("trees", trees));

    let failed = suites.iter().any(|s| !s.failures.is_empty());
    Ok(Report {
        body: json!({
            "max_order": max_order,
            "suites": suites.iter().map(Suite::to_json).collect::<Vec<_>>(),
            "passed": !failed,
        }),
        failed,
    })
}
