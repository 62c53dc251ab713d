//! Every graph of small order up to isomorphism, built by adding one
//! vertex at a time and discarding isomorphic duplicates.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::is_isomorphic_small;

/// Largest order the catalog will build.
pub const CATALOG_ORDER_CAP: usize = 7;

/// Known counts of graphs (all, connected) for n = 0..=7.
pub const GRAPH_COUNTS: [(usize, usize); 8] = [
    (1, 1),
    (1, 1),
    (2, 1),
    (4, 2),
    (11, 6),
    (34, 21),
    (156, 112),
    (1044, 853),
];

type Invariant = Vec<(usize, usize, Vec<usize>)>;

fn invariant(g: &Graph) -> Invariant {
    let mut inv: Invariant = g
        .vertices()
        .map(|v| {
            let nbrs = g.neighbors(v);
            let mut triangles = 0;
            for (i, &a) in nbrs.iter().enumerate() {
                triangles += nbrs[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count();
            }
            let mut nd: Vec<usize> = nbrs.iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), triangles, nd)
        })
        .collect();
    inv.sort();
    inv
}

fn extend(prev: &[Graph], n: usize) -> Result<Vec<Graph>> {
    let mut reps: Vec<Graph> = Vec::new();
    let mut buckets: HashMap<Invariant, Vec<usize>> = HashMap::new();
    for base in prev {
        for mask in 0u32..(1 << (n - 1)) {
            let g = Graph::from_matrix_fn(n, |u, v| {
                if v == n - 1 {
                    mask >> u & 1 == 1
                } else {
                    base.has_edge(u, v)
                }
            });
            let bucket = buckets.entry(invariant(&g)).or_default();
            let mut seen = false;
            for &i in bucket.iter() {
                if is_isomorphic_small(&reps[i], &g)? {
                    seen = true;
                    break;
                }
            }
            if !seen {
                bucket.push(reps.len());
                reps.push(g);
            }
        }
    }
    Ok(reps)
}

/// All graphs of order `n` (0..=7), one per isomorphism class, in
/// generation order.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > CATALOG_ORDER_CAP {
        return Err(Error::SizeCap {
            n,
            cap: CATALOG_ORDER_CAP,
        });
    }
    let mut level = vec![Graph::empty(0)];
    for m in 1..=n {
        level = extend(&level, m)?;
    }
    Ok(level)
}

/// Connected graphs of order `n` (1..=7), one per isomorphism class.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

/// Connected graphs of every order in `lo..=hi`, grouped by order.
pub fn connected_graphs_up_to(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    if hi > CATALOG_ORDER_CAP {
        return Err(Error::SizeCap {
            n: hi,
            cap: CATALOG_ORDER_CAP,
        });
    }
    let mut out = Vec::new();
    let mut level = vec![Graph::empty(0)];
    for m in 1..=hi {
        level = extend(&level, m)?;
        if m >= lo {
            out.extend(level.iter().filter(|g| g.is_connected()).cloned());
        }
    }
    Ok(out)
}
