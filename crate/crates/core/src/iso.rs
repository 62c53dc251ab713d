//! Isomorphism for small graphs by colour refinement plus backtracking.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`is_isomorphic_small`].
pub const ISO_ORDER_CAP: usize = 12;

/// Stable colour refinement run on both graphs at once so that colour ids
/// are comparable across them.
fn joint_refinement(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut cg = g.degrees();
    let mut ch = h.degrees();
    loop {
        let sig = |graph: &Graph, col: &[usize], v: usize| {
            let mut nbr: Vec<usize> = graph.neighbors(v).iter().map(|&w| col[w]).collect();
            nbr.sort_unstable();
            (col[v], nbr)
        };
        let sg: Vec<_> = g.vertices().map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = h.vertices().map(|v| sig(h, &ch, v)).collect();
        let mut ids = BTreeMap::new();
        for s in sg.iter().chain(sh.iter()) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        let ng: Vec<usize> = sg.iter().map(|s| ids[s]).collect();
        let nh: Vec<usize> = sh.iter().map(|s| ids[s]).collect();
        let classes_before = count_classes(&cg, &ch);
        cg = ng;
        ch = nh;
        if count_classes(&cg, &ch) == classes_before {
            return (cg, ch);
        }
    }
}

fn count_classes(a: &[usize], b: &[usize]) -> usize {
    let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// True iff an edge-preserving bijection between `g` and `h` exists.
/// Both graphs must have at most [`ISO_ORDER_CAP`] vertices.
pub fn is_isomorphic_small(g: &Graph, h: &Graph) -> Result<bool> {
    for n in [g.order(), h.order()] {
        if n > ISO_ORDER_CAP {
            return Err(Error::SizeCap {
                n,
                cap: ISO_ORDER_CAP,
            });
        }
    }
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    let (cg, ch) = joint_refinement(g, h);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return Ok(false);
    }
    // Map rarest colour classes first.
    let mut order: Vec<usize> = g.vertices().collect();
    let class_size = |c: usize| cg.iter().filter(|&&x| x == c).count();
    order.sort_by_key(|&v| (class_size(cg[v]), cg[v], v));
    let mut map = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    Ok(extend(g, h, &cg, &ch, &order, 0, &mut map, &mut used))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in h.vertices() {
        if used[w] || ch[w] != cg[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g, h, cg, ch, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}
