//! Free trees, one per isomorphism class.
//!
//! Orders up to 8 come from Prüfer sequences with isomorphism deduplication;
//! orders 9 and 10 walk rooted level sequences and keep only the canonical
//! centre-rooted one of each free tree.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::is_isomorphic_small;

/// Number of free trees of order n, indexed by n (n = 0..=10).
pub const FREE_TREE_COUNTS: [usize; 11] = [0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106];

pub fn free_trees(n: usize) -> Result<Vec<Graph>> {
    if !(2..=10).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "free tree order must be in 2..=10, got {n}"
        )));
    }
    if n <= 8 {
        prufer_free_trees(n)
    } else {
        level_sequence_free_trees(n)
    }
}

fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(n, &edges).expect("Prüfer decoding yields a simple graph")
}

/// Cheap isomorphism invariant used to bucket candidates.
fn invariant(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut inv: Vec<(usize, Vec<usize>)> = g
        .vertices()
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    inv.sort();
    inv
}

/// Decodes all n^(n-2) labelled trees and keeps the first member of every
/// isomorphism class. Orders 2..=8.
pub fn prufer_free_trees(n: usize) -> Result<Vec<Graph>> {
    if !(2..=8).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "Prüfer enumeration supports orders 2..=8, got {n}"
        )));
    }
    let mut reps: Vec<Graph> = Vec::new();
    let mut buckets: HashMap<Vec<(usize, Vec<usize>)>, Vec<usize>> = HashMap::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let t = prufer_decode(n, &seq);
        let bucket = buckets.entry(invariant(&t)).or_default();
        let mut seen = false;
        for &i in bucket.iter() {
            if is_isomorphic_small(&reps[i], &t)? {
                seen = true;
                break;
            }
        }
        if !seen {
            bucket.push(reps.len());
            reps.push(t);
        }
        // odometer
        let mut pos = seq.len();
        loop {
            if pos == 0 {
                return Ok(reps);
            }
            pos -= 1;
            seq[pos] += 1;
            if seq[pos] < n {
                break;
            }
            seq[pos] = 0;
        }
    }
}

fn tree_from_levels(levels: &[usize]) -> Graph {
    let mut last_at_level: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for (v, &l) in levels.iter().enumerate() {
        if l > 0 {
            edges.push((last_at_level[l - 1], v));
        }
        last_at_level.truncate(l);
        last_at_level.push(v);
    }
    Graph::from_edge_list(levels.len(), &edges).expect("level sequence describes a tree")
}

/// Level sequence of the tree rooted at `root` with children visited in
/// the order that makes the sequence lexicographically largest.
fn canonical_levels(t: &Graph, root: usize) -> Vec<usize> {
    fn walk(t: &Graph, v: usize, parent: usize, depth: usize) -> Vec<usize> {
        let mut children: Vec<Vec<usize>> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| walk(t, w, v, depth + 1))
            .collect();
        children.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = vec![depth];
        for c in children {
            out.extend(c);
        }
        out
    }
    walk(t, root, usize::MAX, 0)
}

fn centres(t: &Graph) -> Vec<usize> {
    let n = t.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree = t.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in t.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn is_canonical_free(levels: &[usize]) -> bool {
    let t = tree_from_levels(levels);
    let best = centres(&t)
        .into_iter()
        .map(|c| canonical_levels(&t, c))
        .max()
        .expect("every tree has a centre");
    best == levels
}

/// Walks every rooted tree of order `n` by the level-sequence successor
/// rule (lexicographically decreasing) and keeps the sequences that are the
/// canonical centre-rooted form of their free tree. Orders 2..=10.
pub fn level_sequence_free_trees(n: usize) -> Result<Vec<Graph>> {
    if !(2..=10).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "level-sequence enumeration supports orders 2..=10, got {n}"
        )));
    }
    let mut levels: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        if is_canonical_free(&levels) {
            out.push(tree_from_levels(&levels));
        }
        let Some(p) = (0..n).rev().find(|&i| levels[i] > 1) else {
            return Ok(out);
        };
        let q = (0..p).rev().find(|&i| levels[i] == levels[p] - 1).unwrap();
        let shift = p - q;
        for i in p..n {
            levels[i] = levels[i - shift];
        }
    }
}
