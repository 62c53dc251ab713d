//! Closed-form coalition numbers and bounds, each with an explicit
//! applicability check. Nothing here extrapolates outside the range where
//! the value is known to hold.

use serde::Serialize;

use crate::domination::Mode;
use crate::error::{Error, Result};
use crate::families::{double_star, path};
use crate::graph::Graph;
use crate::iso::is_isomorphic_small;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub name: &'static str,
    pub value: Option<usize>,
    pub applicable: bool,
    pub kind: BoundKind,
    pub note: String,
}

impl BoundReport {
    fn holds(name: &'static str, kind: BoundKind, value: usize, note: impl Into<String>) -> Self {
        BoundReport {
            name,
            value: Some(value),
            applicable: true,
            kind,
            note: note.into(),
        }
    }

    fn not_applicable(name: &'static str, kind: BoundKind, note: impl Into<String>) -> Self {
        BoundReport {
            name,
            value: None,
            applicable: false,
            kind,
            note: note.into(),
        }
    }
}

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

/// C_k(K_n).
pub fn complete_graph_value(n: usize, k: usize) -> Result<usize> {
    if n == 0 || k == 0 {
        return Err(invalid(format!(
            "complete graph value needs n, k >= 1, got n = {n}, k = {k}"
        )));
    }
    Ok(if k == 1 {
        n
    } else if n == 1 {
        1
    } else if k >= n {
        2
    } else {
        n - k + 2
    })
}

fn sides(s: usize, t: usize) -> Result<(usize, usize)> {
    if s == 0 || t == 0 {
        return Err(invalid(format!(
            "complete bipartite sides must be >= 1, got {s} and {t}"
        )));
    }
    Ok((s.min(t), s.max(t)))
}

/// C_k(K_{s,t}) for k >= 2. The sides may be given in either order.
pub fn complete_bipartite_value(s: usize, t: usize, k: usize) -> Result<usize> {
    if k < 2 {
        return Err(invalid(
            "complete_bipartite_value covers k >= 2; use complete_bipartite_value_k1".into(),
        ));
    }
    let (s, t) = sides(s, t)?;
    Ok(if s < k {
        2
    } else if s == k {
        4
    } else if s <= 3 * k - 2 {
        t + 3 - k
    } else {
        s + t + 4 - 4 * k
    })
}

/// C_1(K_{s,t}).
pub fn complete_bipartite_value_k1(s: usize, t: usize) -> Result<usize> {
    let (s, t) = sides(s, t)?;
    Ok(match (s, t) {
        (1, 1) => 2,
        (1, _) => 3,
        _ => s + t,
    })
}

/// TC_k(K_{s,t}) for min(s, t) >= k >= 1.
pub fn total_complete_bipartite_value(s: usize, t: usize, k: usize) -> Result<usize> {
    let (s, t) = sides(s, t)?;
    if k == 0 {
        return Err(invalid("k must be at least 1".into()));
    }
    if s < k {
        return Err(Error::TotalInfeasible { k, min_degree: s });
    }
    Ok(if s <= 3 * k - 2 {
        t + 2 - k
    } else {
        s + t + 4 - 4 * k
    })
}

/// C_k of a 3-regular graph, k >= 2.
pub fn cubic_value(g: &Graph, k: usize) -> Result<usize> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    Ok(match k {
        0 | 1 => return Err(invalid(format!("no closed form for C_{k} of cubic graphs"))),
        2 => 4,
        3 if g.is_bipartite().is_some() => 4,
        3 => 3,
        _ => 2,
    })
}

/// max(2, δ - k + 3) <= C_k(G), for n >= 2 and k >= 2.
pub fn lower_bound_min_degree(g: &Graph, k: usize) -> BoundReport {
    const NAME: &str = "min_degree_lower_bound";
    if g.order() < 2 || k < 2 {
        return BoundReport::not_applicable(NAME, BoundKind::Lower, "needs n >= 2 and k >= 2");
    }
    let delta = g.min_degree();
    let value = (delta + 3).saturating_sub(k).max(2);
    let note = if delta < k {
        format!("δ = {delta} < k; trivial floor 2")
    } else {
        format!("δ - k + 3 with δ = {delta}")
    };
    BoundReport::holds(NAME, BoundKind::Lower, value, note)
}

fn order_range(n: usize, k: usize) -> Result<()> {
    if k < 3 || k > n {
        return Err(invalid(format!(
            "the order bound needs 3 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// C_k(G) <= n - k + 2 for 3 <= k <= n. Refuses k in {1, 2}, where the
/// bound is false in general.
pub fn upper_bound_order(n: usize, k: usize) -> Result<BoundReport> {
    order_range(n, k)?;
    Ok(BoundReport::holds(
        "order_upper_bound",
        BoundKind::Upper,
        n - k + 2,
        "attained iff n = k or there are at least n - k + 1 universal vertices",
    ))
}

/// Whether `g` attains n - k + 2: n = k, or at least n - k + 1 universal
/// vertices (equivalently, g is H joined with K_{n-k+1} for some H of
/// order k - 1).
pub fn order_bound_attained(g: &Graph, k: usize) -> Result<bool> {
    let n = g.order();
    order_range(n, k)?;
    Ok(n == k || g.universal_vertices().len() > n - k)
}

/// (Δ - 2⌊δ/2⌋ + 1)(⌊δ/2⌋ + 1) + ⌈δ/2⌉ + 1, defined when δ >= 2 and
/// Δ >= 4⌊δ/2⌋.
pub fn c2_degree_bound_value(min_degree: usize, max_degree: usize) -> Option<usize> {
    let lo = min_degree / 2;
    let hi = min_degree.div_ceil(2);
    (min_degree >= 2 && max_degree >= 4 * lo).then(|| (max_degree - 2 * lo + 1) * (lo + 1) + hi + 1)
}

pub fn c2_degree_upper_bound(g: &Graph) -> BoundReport {
    const NAME: &str = "degree_c2_upper_bound";
    let (d, big) = (g.min_degree(), g.max_degree());
    match c2_degree_bound_value(d, big) {
        Some(v) => BoundReport::holds(
            NAME,
            BoundKind::Upper,
            v,
            format!("k = 2 with δ = {d}, Δ = {big}"),
        ),
        None => BoundReport::not_applicable(
            NAME,
            BoundKind::Upper,
            format!("needs δ >= 2 and Δ >= 4⌊δ/2⌋; have δ = {d}, Δ = {big}"),
        ),
    }
}

/// ⌊n/2⌋ + 1, the largest C_2 of a tree of order n >= 2.
pub fn tree_upper_bound(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(invalid(format!("tree bound needs n >= 2, got {n}")));
    }
    Ok(n / 2 + 1)
}

/// Whether the tree is one of P2, P3, P4, P5, S_{1,2}: exactly the trees
/// attaining [`tree_upper_bound`].
pub fn tree_extremal_predicate(t: &Graph) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    if !(2..=5).contains(&n) {
        return Ok(false);
    }
    if is_isomorphic_small(t, &path(n)?)? {
        return Ok(true);
    }
    Ok(n == 5 && is_isomorphic_small(t, &double_star(1, 2)?)?)
}

/// max{1, Δ - k + 2}: the most partners a block of a k-coalition partition
/// can have.
pub fn partner_cap_bound(max_degree: usize, k: usize) -> usize {
    (max_degree + 2).saturating_sub(k).max(1)
}

/// Every bound or exact value known for (g, k) in the given mode, with
/// inapplicable ones marked as such.
pub fn bound_reports(g: &Graph, k: usize, mode: Mode) -> Vec<BoundReport> {
    let n = g.order();
    let mut out = Vec::new();
    if mode == Mode::Total {
        const NAME: &str = "total_complete_bipartite_value";
        out.push(match g.complete_bipartite_sides() {
            Some((x, y)) => match total_complete_bipartite_value(x.len(), y.len(), k) {
                Ok(v) => BoundReport::holds(
                    NAME,
                    BoundKind::Exact,
                    v,
                    format!("K_{{{},{}}}", x.len(), y.len()),
                ),
                Err(e) => BoundReport::not_applicable(NAME, BoundKind::Exact, e.to_string()),
            },
            None => BoundReport::not_applicable(NAME, BoundKind::Exact, "not complete bipartite"),
        });
        return out;
    }

    out.push(lower_bound_min_degree(g, k));
    out.push(match upper_bound_order(n, k) {
        Ok(mut r) => {
            let eq = order_bound_attained(g, k).expect("range already checked");
            r.note = format!("{}; attained here: {eq}", r.note);
            r
        }
        Err(e) => BoundReport::not_applicable("order_upper_bound", BoundKind::Upper, e.to_string()),
    });
    if k == 2 {
        out.push(c2_degree_upper_bound(g));
        const TREE: &str = "tree_upper_bound";
        out.push(if g.is_tree() && n >= 2 {
            let eq = tree_extremal_predicate(g).expect("checked tree");
            BoundReport::holds(
                TREE,
                BoundKind::Upper,
                tree_upper_bound(n).expect("n >= 2"),
                format!("attained here: {eq}"),
            )
        } else {
            BoundReport::not_applicable(TREE, BoundKind::Upper, "not a tree of order >= 2")
        });
    } else {
        out.push(BoundReport::not_applicable(
            "degree_c2_upper_bound",
            BoundKind::Upper,
            "k != 2",
        ));
        out.push(BoundReport::not_applicable(
            "tree_upper_bound",
            BoundKind::Upper,
            "k != 2",
        ));
    }
    out.push(BoundReport::holds(
        "partner_cap",
        BoundKind::Upper,
        partner_cap_bound(g.max_degree(), k),
        "coalition-graph degree of any block",
    ));

    const COMPLETE: &str = "complete_graph_value";
    out.push(if g.is_complete() && n >= 1 && k >= 1 {
        BoundReport::holds(
            COMPLETE,
            BoundKind::Exact,
            complete_graph_value(n, k).expect("n, k >= 1"),
            format!("K_{n}"),
        )
    } else {
        BoundReport::not_applicable(COMPLETE, BoundKind::Exact, "not complete")
    });

    const BIP: &str = "complete_bipartite_value";
    out.push(match (g.complete_bipartite_sides(), k) {
        (None, _) => BoundReport::not_applicable(BIP, BoundKind::Exact, "not complete bipartite"),
        (Some(_), 0) => BoundReport::not_applicable(BIP, BoundKind::Exact, "k = 0"),
        (Some((x, y)), _) => {
            let (s, t) = (x.len(), y.len());
            let v = if k == 1 {
                complete_bipartite_value_k1(s, t)
            } else {
                complete_bipartite_value(s, t, k)
            };
            BoundReport::holds(
                BIP,
                BoundKind::Exact,
                v.expect("sides >= 1"),
                format!("K_{{{s},{t}}}"),
            )
        }
    });

    const CUBIC: &str = "cubic_value";
    out.push(match cubic_value(g, k) {
        Ok(v) => BoundReport::holds(CUBIC, BoundKind::Exact, v, "3-regular"),
        Err(e) => BoundReport::not_applicable(CUBIC, BoundKind::Exact, e.to_string()),
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle, gd, named_cubic, star, CubicName};

    #[test]
    fn complete_graph_examples() {
        assert_eq!(complete_graph_value(5, 2).unwrap(), 5);
        assert_eq!(complete_graph_value(4, 6).unwrap(), 2);
        assert_eq!(complete_graph_value(7, 1).unwrap(), 7);
        assert_eq!(complete_graph_value(1, 4).unwrap(), 1);
        assert!(complete_graph_value(0, 1).is_err());
    }

    #[test]
    fn complete_bipartite_examples() {
        assert_eq!(complete_bipartite_value(3, 7, 2).unwrap(), 8);
        assert_eq!(complete_bipartite_value(2, 9, 2).unwrap(), 4);
        assert_eq!(complete_bipartite_value(6, 7, 2).unwrap(), 9);
        // strictly above s + t - 2k + 1 = 4
        assert_eq!(complete_bipartite_value(3, 4, 2).unwrap(), 5);
        assert_eq!(complete_bipartite_value(4, 3, 2).unwrap(), 5);
        assert_eq!(complete_bipartite_value(1, 5, 2).unwrap(), 2);
        assert!(complete_bipartite_value(3, 4, 1).is_err());

        assert_eq!(complete_bipartite_value_k1(1, 1).unwrap(), 2);
        assert_eq!(complete_bipartite_value_k1(1, 5).unwrap(), 3);
        assert_eq!(complete_bipartite_value_k1(3, 4).unwrap(), 7);
    }

    #[test]
    fn total_complete_bipartite_examples() {
        assert_eq!(total_complete_bipartite_value(2, 5, 2).unwrap(), 5);
        assert_eq!(total_complete_bipartite_value(5, 6, 2).unwrap(), 7);
        assert!(matches!(
            total_complete_bipartite_value(1, 5, 2),
            Err(Error::TotalInfeasible { k: 2, .. })
        ));
    }

    #[test]
    fn cubic_examples() {
        let k4 = named_cubic(CubicName::K4);
        assert_eq!(cubic_value(&k4, 2).unwrap(), 4);
        assert_eq!(cubic_value(&named_cubic(CubicName::Q3), 3).unwrap(), 4);
        assert_eq!(
            cubic_value(&named_cubic(CubicName::Petersen), 3).unwrap(),
            3
        );
        assert_eq!(cubic_value(&named_cubic(CubicName::K33), 5).unwrap(), 2);
        assert!(cubic_value(&k4, 1).is_err());
        assert_eq!(cubic_value(&cycle(5).unwrap(), 2), Err(Error::NotCubic));
    }

    #[test]
    fn min_degree_lower_bound_examples() {
        assert_eq!(
            lower_bound_min_degree(&complete(5).unwrap(), 2).value,
            Some(5)
        );
        assert_eq!(lower_bound_min_degree(&cycle(4).unwrap(), 2).value, Some(3));
        assert_eq!(lower_bound_min_degree(&star(3).unwrap(), 3).value, Some(2));
        assert!(!lower_bound_min_degree(&complete(1).unwrap(), 2).applicable);
    }

    #[test]
    fn order_bound_examples() {
        assert_eq!(upper_bound_order(6, 3).unwrap().value, Some(5));
        assert_eq!(upper_bound_order(5, 5).unwrap().value, Some(2));
        assert!(upper_bound_order(4, 2).is_err());
        assert!(upper_bound_order(4, 5).is_err());

        assert!(order_bound_attained(&complete(5).unwrap(), 3).unwrap());
        assert_eq!(complete_graph_value(5, 3).unwrap(), 4);
        assert!(!order_bound_attained(&cycle(6).unwrap(), 3).unwrap());
        let joined = Graph::empty(2).join(&complete(4).unwrap());
        assert!(order_bound_attained(&joined, 3).unwrap());
    }

    #[test]
    fn degree_bound_examples() {
        assert_eq!(c2_degree_upper_bound(&gd(4).unwrap()).value, Some(8));
        assert_eq!(c2_degree_bound_value(4, 8), Some(18));
        assert_eq!(c2_degree_bound_value(4, 10), Some(24));
        assert_eq!(c2_degree_bound_value(3, 3), None);
        assert!(!c2_degree_upper_bound(&named_cubic(CubicName::Petersen)).applicable);
    }

    #[test]
    fn tree_examples() {
        assert_eq!(tree_upper_bound(5).unwrap(), 3);
        assert!(tree_extremal_predicate(&path(5).unwrap()).unwrap());
        assert!(!tree_extremal_predicate(&star(4).unwrap()).unwrap());
        assert!(tree_extremal_predicate(&double_star(1, 2).unwrap()).unwrap());
        assert!(!tree_extremal_predicate(&path(6).unwrap()).unwrap());
        assert_eq!(
            tree_extremal_predicate(&cycle(4).unwrap()),
            Err(Error::NotATree)
        );
    }

    #[test]
    fn partner_cap_examples() {
        assert_eq!(partner_cap_bound(3, 2), 3);
        assert_eq!(partner_cap_bound(3, 5), 1);
        assert_eq!(partner_cap_bound(4, 2), 4);
    }

    #[test]
    fn reports_for_complete_bipartite() {
        let g = complete_bipartite(3, 4).unwrap();
        let reports = bound_reports(&g, 2, Mode::Plain);
        let exact = reports
            .iter()
            .find(|r| r.name == "complete_bipartite_value")
            .unwrap();
        assert_eq!(exact.value, Some(5));
        let order = reports
            .iter()
            .find(|r| r.name == "order_upper_bound")
            .unwrap();
        assert!(!order.applicable && order.value.is_none());
        let total = bound_reports(&g, 2, Mode::Total);
        assert_eq!(total[0].value, Some(4));
    }
}
