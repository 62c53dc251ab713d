//! End-to-end acceptance run: every closed form and bound is compared with
//! the plain enumeration oracle over the full desk-scale fixture sets.
//! Prints one PASS/FAIL line per criterion and exits non-zero on any FAIL.

use std::process::ExitCode;
use std::time::Instant;

use kcoal_core::catalog::connected_graphs_up_to;
use kcoal_core::families::{
    complete, complete_bipartite, free_trees, g_delta_delta, gd, named_cubic, CubicName,
};
use kcoal_core::formulas::{
    c2_degree_upper_bound, complete_bipartite_value, complete_graph_value, lower_bound_min_degree,
    order_bound_attained, partner_cap_bound, total_complete_bipartite_value,
    tree_extremal_predicate, tree_upper_bound,
};
use kcoal_core::witnesses::{g_delta_delta_witness, gd_witness, join_witness, min_degree_witness};
use kcoal_core::{
    brute_force_oracle, coalition_graph_in_mode, emit_graph6, is_full_c2, is_isomorphic_small,
    validate_partition, Graph, Mode, SolveResult,
};

/// An oracle run kept for the partner-cap and witness criteria.
struct Solved {
    g: Graph,
    k: usize,
    mode: Mode,
    result: SolveResult,
}

#[derive(Default)]
struct Outcome {
    cases: usize,
    problems: Vec<String>,
}

impl Outcome {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.problems.push(what());
        }
    }
}

fn oracle(g: &Graph, k: usize, mode: Mode, solved: &mut Vec<Solved>) -> usize {
    let result =
        brute_force_oracle(g, k, mode).unwrap_or_else(|e| panic!("{} k={k}: {e}", emit_graph6(g)));
    let value = result.value;
    solved.push(Solved {
        g: g.clone(),
        k,
        mode,
        result,
    });
    value
}

fn complete_graphs(solved: &mut Vec<Solved>) -> Outcome {
    let mut out = Outcome::default();
    for n in 2..=8 {
        let g = complete(n).unwrap();
        for k in 1..=n + 1 {
            let got = oracle(&g, k, Mode::Plain, solved);
            let want = complete_graph_value(n, k).unwrap();
            out.expect(got == want, || {
                format!("K_{n}, k={k}: oracle {got}, formula {want}")
            });
        }
    }
    out
}

fn complete_bipartite_graphs(solved: &mut Vec<Solved>) -> Outcome {
    let mut out = Outcome::default();
    for s in 1..=4 {
        for t in s..=9 - s {
            let g = complete_bipartite(s, t).unwrap();
            for k in 2..=3 {
                let got = oracle(&g, k, Mode::Plain, solved);
                let want = complete_bipartite_value(s, t, k).unwrap();
                out.expect(got == want, || {
                    format!("K_{{{s},{t}}}, k={k}: oracle {got}, formula {want}")
                });
            }
        }
    }
    // the earlier bound s + t - 2k + 1 = 4 is exceeded
    let got = brute_force_oracle(&complete_bipartite(3, 4).unwrap(), 2, Mode::Plain)
        .unwrap()
        .value;
    out.expect(got == 5 && got > 3 + 4 - 4 + 1, || {
        format!("C_2(K_{{3,4}}) = {got}, expected 5")
    });
    out
}

fn total_complete_bipartite_graphs(solved: &mut Vec<Solved>) -> Outcome {
    let mut out = Outcome::default();
    for k in 2..=3 {
        for s in k..=4 {
            for t in s..=9 - s {
                let g = complete_bipartite(s, t).unwrap();
                let got = oracle(&g, k, Mode::Total, solved);
                let want = total_complete_bipartite_value(s, t, k).unwrap();
                out.expect(got == want, || {
                    format!("total K_{{{s},{t}}}, k={k}: oracle {got}, formula {want}")
                });
            }
        }
    }
    out
}

fn cubic_graphs(solved: &mut Vec<Solved>) -> Outcome {
    let mut out = Outcome::default();
    for name in CubicName::ALL {
        let g = named_cubic(name);
        let bipartite = matches!(name, CubicName::K33 | CubicName::Q3);
        for (k, want) in [(2, 4), (3, if bipartite { 4 } else { 3 }), (4, 2), (5, 2)] {
            let got = oracle(&g, k, Mode::Plain, solved);
            out.expect(got == want, || {
                format!("{}, k={k}: oracle {got}, expected {want}", name.as_str())
            });
        }
    }
    out
}

fn trees(solved: &mut Vec<Solved>) -> Outcome {
    let mut out = Outcome::default();
    for n in 2..=9 {
        let bound = tree_upper_bound(n).unwrap();
        for t in free_trees(n).unwrap() {
            let got = oracle(&t, 2, Mode::Plain, solved);
            let extremal = tree_extremal_predicate(&t).unwrap();
            out.expect(got <= bound && (got == bound) == extremal, || {
                format!(
                    "tree {}: C_2 = {got}, bound {bound}, extremal {extremal}",
                    emit_graph6(&t)
                )
            });
        }
    }
    out
}

fn bound_sandwich(catalog: &[Graph], solved: &mut Vec<Solved>) -> Outcome {
    let mut out = Outcome::default();
    for g in catalog {
        let n = g.order();
        for k in 2..=n {
            let got = oracle(g, k, Mode::Plain, solved);
            let lower = lower_bound_min_degree(g, k).value.unwrap();
            out.expect(lower <= got, || {
                format!("{} k={k}: C = {got} < lower {lower}", emit_graph6(g))
            });
            if k >= 3 {
                let upper = n - k + 2;
                let predicted = order_bound_attained(g, k).unwrap();
                out.expect(got <= upper && (got == upper) == predicted, || {
                    format!(
                        "{} k={k}: C = {got}, upper {upper}, predicted equality {predicted}",
                        emit_graph6(g)
                    )
                });
            }
        }
    }
    out
}

fn partner_cap(solved: &[Solved]) -> Outcome {
    let mut out = Outcome::default();
    for s in solved.iter().filter(|s| s.g.order() >= 2) {
        let cap = partner_cap_bound(s.g.max_degree(), s.k);
        let worst =
            coalition_graph_in_mode(&s.g, s.result.witness.partition(), s.k, s.mode).max_degree();
        out.expect(worst <= cap, || {
            format!(
                "{} k={} {}: block with {worst} partners > {cap}",
                emit_graph6(&s.g),
                s.k,
                s.mode
            )
        });
    }
    out
}

fn sharpness(catalog: &[Graph], solved: &[Solved]) -> Outcome {
    let mut out = Outcome::default();
    for d in 4..=6 {
        let size = gd_witness(d).map(|w| w.size());
        let bound = c2_degree_upper_bound(&gd(d).unwrap()).value;
        out.expect(size == Ok(2 * d) && bound == Some(2 * d), || {
            format!("G({d}): witness {size:?}, bound {bound:?}")
        });
    }
    let size = g_delta_delta_witness(4, 8).map(|w| w.size());
    let bound = c2_degree_upper_bound(&g_delta_delta(4, 8).unwrap()).value;
    out.expect(size == Ok(18) && bound == Some(18), || {
        format!("G(4, 8): witness {size:?}, bound {bound:?}")
    });

    // min-degree partitions on every plain fixture with δ >= k >= 2
    for s in solved
        .iter()
        .filter(|s| s.mode == Mode::Plain && s.k >= 2 && s.g.min_degree() >= s.k)
    {
        let want = s.g.min_degree() - s.k + 3;
        let got = min_degree_witness(&s.g, s.k);
        let ok = matches!(&got, Ok(w) if w.size() == want && w.verify(&s.g) && w.size() <= s.result.value);
        out.expect(ok, || {
            format!(
                "min-degree partition on {} k={}: {got:?}",
                emit_graph6(&s.g),
                s.k
            )
        });
    }

    // join partitions on every catalog graph attaining n - k + 2 with n > k
    for g in catalog {
        let n = g.order();
        for k in 3..n {
            if !order_bound_attained(g, k).unwrap() {
                continue;
            }
            let m = n - k + 1;
            let clique: Vec<usize> = g.universal_vertices().into_iter().take(m).collect();
            let rest: Vec<usize> = g.vertices().filter(|v| !clique.contains(v)).collect();
            let h = g.induced_subgraph(&rest);
            let ok = match join_witness(&h, m, k) {
                Ok(w) => {
                    let joined = h.join(&complete(m).unwrap());
                    w.size() == n - k + 2
                        && validate_partition(&joined, w.partition(), k, Mode::Plain).is_ok()
                        && is_isomorphic_small(&joined, g).unwrap()
                }
                Err(_) => false,
            };
            out.expect(ok, || format!("join partition on {} k={k}", emit_graph6(g)));
        }
    }
    out
}

fn full_c2(catalog: &[Graph]) -> Outcome {
    let mut out = Outcome::default();
    for g in catalog.iter().filter(|g| g.order() >= 2) {
        let value = brute_force_oracle(g, 2, Mode::Plain).unwrap().value;
        let claimed = is_full_c2(g);
        out.expect(claimed == (value == g.order()), || {
            format!(
                "{}: criterion {claimed}, C_2 = {value}, n = {}",
                emit_graph6(g),
                g.order()
            )
        });
    }
    out
}

fn report(id: usize, title: &str, started: Instant, out: &Outcome) -> bool {
    let pass = out.problems.is_empty() && out.cases > 0;
    println!(
        "criterion {id} {title}: {} ({} cases, {} failures, {:.1}s)",
        if pass { "PASS" } else { "FAIL" },
        out.cases,
        out.problems.len(),
        started.elapsed().as_secs_f64()
    );
    for p in out.problems.iter().take(10) {
        println!("    {p}");
    }
    pass
}

fn main() -> ExitCode {
    // `cargo test -- --list` and similar probes expect no work.
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let catalog = connected_graphs_up_to(1, 7).expect("catalog builds");
    assert_eq!(catalog.len(), 1 + 1 + 2 + 6 + 21 + 112 + 853);

    let mut solved = Vec::new();
    let mut all = true;
    let mut run = |id, title, f: &mut dyn FnMut(&mut Vec<Solved>) -> Outcome| {
        let t = Instant::now();
        let out = f(&mut solved);
        all &= report(id, title, t, &out);
    };
    run(1, "complete graphs", &mut |s| complete_graphs(s));
    run(2, "complete bipartite graphs", &mut |s| {
        complete_bipartite_graphs(s)
    });
    run(3, "total complete bipartite graphs", &mut |s| {
        total_complete_bipartite_graphs(s)
    });
    run(4, "cubic graphs", &mut |s| cubic_graphs(s));
    run(5, "trees", &mut |s| trees(s));
    run(6, "bound sandwich", &mut |s| bound_sandwich(&catalog, s));
    run(7, "partner cap", &mut |s| partner_cap(s));
    run(8, "sharpness constructions", &mut |s| {
        sharpness(&catalog, s)
    });
    run(9, "full C_2 criterion", &mut |_| full_c2(&catalog));

    if all {
        println!("acceptance: all criteria PASS");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILURES");
        ExitCode::FAILURE
    }
}
