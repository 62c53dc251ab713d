use kcoal_core::catalog::{all_graphs, connected_graphs_up_to, GRAPH_COUNTS};
use kcoal_core::families::{complete_bipartite, named_cubic, CubicName};
use kcoal_core::formulas::{
    c2_degree_upper_bound, complete_bipartite_value, complete_bipartite_value_k1, cubic_value,
    lower_bound_min_degree,
};
use kcoal_core::witnesses::min_degree_witness;
use kcoal_core::{brute_force_oracle, emit_graph6, exact_coalition_number, Mode};

#[test]
fn catalog_of_order_seven() {
    let all = all_graphs(7).unwrap();
    let connected = all.iter().filter(|g| g.is_connected()).count();
    assert_eq!((all.len(), connected), GRAPH_COUNTS[7]);
}

#[test]
fn exact_solver_matches_oracle_on_small_catalog() {
    for g in connected_graphs_up_to(1, 6).unwrap() {
        for k in 1..=g.order() + 1 {
            let a = exact_coalition_number(&g, k, Mode::Plain).unwrap();
            let b = brute_force_oracle(&g, k, Mode::Plain).unwrap();
            assert_eq!(a.value, b.value, "{} k={k}", emit_graph6(&g));
            assert!(a.witness.verify(&g) && b.witness.verify(&g));
        }
        for k in 1..=2 {
            match (
                exact_coalition_number(&g, k, Mode::Total),
                brute_force_oracle(&g, k, Mode::Total),
            ) {
                (Ok(a), Ok(b)) => assert_eq!(a.value, b.value, "total {} k={k}", emit_graph6(&g)),
                (Err(a), Err(b)) => assert_eq!(a, b),
                _ => panic!("feasibility disagreement on {}", emit_graph6(&g)),
            }
        }
    }
}

#[test]
fn complete_bipartite_formulas_including_k1() {
    for s in 1..=4 {
        for t in s..=9 - s {
            let g = complete_bipartite(s, t).unwrap();
            for k in 1..=3 {
                let want = if k == 1 {
                    complete_bipartite_value_k1(s, t).unwrap()
                } else {
                    complete_bipartite_value(s, t, k).unwrap()
                };
                let got = exact_coalition_number(&g, k, Mode::Plain).unwrap().value;
                assert_eq!(got, want, "K_{{{s},{t}}} k={k}");
            }
        }
    }
}

#[test]
fn cubic_formula_matches_exact_solver() {
    for name in CubicName::ALL {
        let g = named_cubic(name);
        for k in 2..=5 {
            let got = exact_coalition_number(&g, k, Mode::Plain).unwrap().value;
            assert_eq!(got, cubic_value(&g, k).unwrap(), "{} k={k}", name.as_str());
        }
    }
}

#[test]
fn degree_bound_and_min_degree_partition_on_catalog() {
    for g in connected_graphs_up_to(2, 7).unwrap() {
        let c2 = brute_force_oracle(&g, 2, Mode::Plain).unwrap().value;
        if let Some(bound) = c2_degree_upper_bound(&g).value {
            assert!(c2 <= bound, "{}: C_2 = {c2} > {bound}", emit_graph6(&g));
        }
        for k in 2..=g.min_degree() {
            let w = min_degree_witness(&g, k).unwrap();
            assert_eq!(Some(w.size()), lower_bound_min_degree(&g, k).value);
        }
    }
}
