//! Per-graph consistency checks between an exact result and every closed
//! form or bound that applies to the graph.

use serde::Serialize;

use crate::domination::{coalition_graph_in_mode, Mode};
use crate::formulas::{
    c2_degree_upper_bound, complete_bipartite_value, complete_bipartite_value_k1,
    complete_graph_value, cubic_value, lower_bound_min_degree, order_bound_attained,
    partner_cap_bound, total_complete_bipartite_value, tree_extremal_predicate, tree_upper_bound,
    upper_bound_order,
};
use crate::graph::Graph;
use crate::io::emit_graph6;
use crate::solver::{is_full_c2, SolveResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub graph6: String,
}

struct Recorder<'a> {
    graph6: &'a str,
    out: Vec<CheckRecord>,
}

impl Recorder<'_> {
    fn push(&mut self, name: &'static str, passed: bool, detail: String) {
        self.out.push(CheckRecord {
            name,
            passed,
            detail,
            graph6: self.graph6.to_string(),
        });
    }
}

/// Runs every check that applies to `(g, k, mode)` against `result`, the
/// exact coalition number and an optimal witness.
pub fn graph_checks(g: &Graph, k: usize, mode: Mode, result: &SolveResult) -> Vec<CheckRecord> {
    let g6 = emit_graph6(g);
    let mut rec = Recorder {
        graph6: &g6,
        out: Vec::new(),
    };
    let n = g.order();
    let value = result.value;

    if mode == Mode::Total {
        if let Some((x, y)) = g.complete_bipartite_sides() {
            if let Ok(expected) = total_complete_bipartite_value(x.len(), y.len(), k) {
                rec.push(
                    "total_complete_bipartite_value",
                    value == expected,
                    format!("TC_{k} = {value}, closed form {expected}"),
                );
            }
        }
        return rec.out;
    }

    let lower = lower_bound_min_degree(g, k);
    if let Some(bound) = lower.value {
        rec.push(
            "min_degree_lower_bound",
            value >= bound,
            format!("C_{k} = {value} >= {bound}"),
        );
    }

    if let Ok(report) = upper_bound_order(n, k) {
        let bound = report.value.expect("applicable");
        let predicted = order_bound_attained(g, k).expect("same range");
        rec.push(
            "order_upper_bound",
            value <= bound,
            format!("C_{k} = {value} <= {bound}"),
        );
        rec.push(
            "order_upper_bound_equality",
            (value == bound) == predicted,
            format!(
                "attains {bound}: {}, predicted: {predicted}",
                value == bound
            ),
        );
    }

    if k == 2 {
        if let Some(bound) = c2_degree_upper_bound(g).value {
            rec.push(
                "degree_c2_upper_bound",
                value <= bound,
                format!("C_2 = {value} <= {bound}"),
            );
        }
        if n >= 2 && g.is_tree() {
            let bound = tree_upper_bound(n).expect("n >= 2");
            let extremal = tree_extremal_predicate(g).expect("checked tree");
            rec.push(
                "tree_upper_bound",
                value <= bound && (value == bound) == extremal,
                format!("C_2 = {value} <= {bound}, extremal tree: {extremal}"),
            );
        }
        if n >= 2 {
            let full = is_full_c2(g);
            rec.push(
                "full_c2_criterion",
                full == (value == n),
                format!("criterion says {full}, C_2 = {value}, n = {n}"),
            );
        }
    }

    if n >= 2 {
        let cap = partner_cap_bound(g.max_degree(), k);
        let cg = coalition_graph_in_mode(g, result.witness.partition(), k, mode);
        let worst = cg.max_degree();
        rec.push(
            "partner_cap",
            worst <= cap,
            format!("largest partner count {worst} <= {cap}"),
        );
    }

    if g.is_complete() && n >= 1 {
        let expected = complete_graph_value(n, k).expect("n, k >= 1");
        rec.push(
            "complete_graph_value",
            value == expected,
            format!("C_{k} = {value}, closed form {expected}"),
        );
    }

    if let Some((x, y)) = g.complete_bipartite_sides() {
        let (s, t) = (x.len(), y.len());
        let expected = if k == 1 {
            complete_bipartite_value_k1(s, t)
        } else {
            complete_bipartite_value(s, t, k)
        }
        .expect("sides >= 1, k >= 1");
        rec.push(
            "complete_bipartite_value",
            value == expected,
            format!("K_{{{s},{t}}}: C_{k} = {value}, closed form {expected}"),
        );
    }

    if let Ok(expected) = cubic_value(g, k) {
        rec.push(
            "cubic_value",
            value == expected,
            format!("C_{k} = {value}, closed form {expected}"),
        );
    }
    rec.out
}
