//! Exact k-coalition and total k-coalition numbers by exhaustive search over
//! set partitions.
//!
//! Both searches visit restricted growth strings in lexicographic order and
//! keep the first partition of maximum size, so the returned witness is the
//! lexicographically least optimal string.

use rayon::prelude::*;
use serde::Serialize;

use crate::domination::{
    is_k_dominating, validate_partition, CoalitionCertificate, Mode, VertexPartition,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partitions::RestrictedGrowthStrings;

/// Order cap for [`exact_coalition_number`].
pub const SOLVER_ORDER_CAP: usize = 12;
/// Order cap for [`brute_force_oracle`].
pub const ORACLE_ORDER_CAP: usize = 10;

const MAX_BLOCKS: usize = SOLVER_ORDER_CAP;

/// Best (block count, restricted growth string) found under one prefix.
type Best = Option<(usize, Vec<usize>)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: CoalitionCertificate,
    /// Complete partitions examined.
    pub explored: u64,
}

/// Bitmask view of a graph with at most 32 vertices.
struct MaskGraph {
    adj: Vec<u32>,
    full: u32,
    k: u32,
    mode: Mode,
}

impl MaskGraph {
    fn new(g: &Graph, k: usize, mode: Mode) -> Self {
        let n = g.order();
        debug_assert!(n <= 32);
        let adj = g.vertices().map(|v| g.adjacency_mask(v) as u32).collect();
        let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        MaskGraph {
            adj,
            full,
            k: k.min(u32::MAX as usize) as u32,
            mode,
        }
    }

    fn dominates(&self, set: u32) -> bool {
        let mut targets = match self.mode {
            Mode::Plain => self.full & !set,
            Mode::Total => self.full,
        };
        while targets != 0 {
            let v = targets.trailing_zeros() as usize;
            if (self.adj[v] & set).count_ones() < self.k {
                return false;
            }
            targets &= targets - 1;
        }
        true
    }

    fn is_coalition_partition(&self, blocks: &[u32]) -> bool {
        let b = blocks.len();
        let mut dom = [false; MAX_BLOCKS];
        for (d, &m) in dom.iter_mut().zip(blocks) {
            *d = self.dominates(m);
        }
        // 0 = unknown, 1 = coalition, 2 = not
        let mut pair = [[0u8; MAX_BLOCKS]; MAX_BLOCKS];
        'blocks: for i in 0..b {
            if dom[i] {
                if self.mode == Mode::Plain && blocks[i].count_ones() == self.k {
                    continue;
                }
                return false;
            }
            for j in 0..b {
                if j == i || dom[j] {
                    continue;
                }
                if pair[i][j] == 0 {
                    let r = if self.dominates(blocks[i] | blocks[j]) {
                        1
                    } else {
                        2
                    };
                    pair[i][j] = r;
                    pair[j][i] = r;
                }
                if pair[i][j] == 1 {
                    continue 'blocks;
                }
            }
            return false;
        }
        true
    }
}

fn precheck(g: &Graph, k: usize, mode: Mode, cap: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = g.order();
    if n == 0 {
        return Err(Error::InvalidParameter("graph has no vertices".into()));
    }
    if n > cap {
        return Err(Error::SizeCap { n, cap });
    }
    if mode == Mode::Total && g.min_degree() < k {
        return Err(Error::TotalInfeasible {
            k,
            min_degree: g.min_degree(),
        });
    }
    Ok(())
}

fn finish(
    g: &Graph,
    k: usize,
    mode: Mode,
    best: Option<Vec<usize>>,
    explored: u64,
) -> Result<SolveResult> {
    let rgs = best.ok_or(Error::NoPartition { k })?;
    let partition = VertexPartition::from_rgs(&rgs);
    let witness = validate_partition(g, &partition, k, mode)?;
    Ok(SolveResult {
        value: witness.size(),
        witness,
        explored,
    })
}

fn single_vertex(g: &Graph, k: usize) -> Result<SolveResult> {
    finish(g, k, Mode::Plain, Some(vec![0]), 1)
}

/// Plain enumeration of every set partition, without pruning. Used as the
/// independent reference for [`exact_coalition_number`].
pub fn brute_force_oracle(g: &Graph, k: usize, mode: Mode) -> Result<SolveResult> {
    precheck(g, k, mode, ORACLE_ORDER_CAP)?;
    if g.order() == 1 && mode == Mode::Plain {
        return single_vertex(g, k);
    }
    let masks = MaskGraph::new(g, k, mode);
    let mut it = RestrictedGrowthStrings::new(g.order());
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut explored = 0u64;
    let mut blocks = Vec::with_capacity(g.order());
    while let Some(rgs) = it.next_rgs() {
        explored += 1;
        let count = rgs.iter().max().map_or(0, |m| m + 1);
        if best.as_ref().is_some_and(|(b, _)| count <= *b) {
            continue;
        }
        blocks.clear();
        blocks.resize(count, 0u32);
        for (v, &b) in rgs.iter().enumerate() {
            blocks[b] |= 1 << v;
        }
        if masks.is_coalition_partition(&blocks) {
            best = Some((count, rgs.to_vec()));
        }
    }
    finish(g, k, mode, best.map(|(_, r)| r), explored)
}

struct Subtree<'a> {
    masks: &'a MaskGraph,
    n: usize,
    rgs: Vec<usize>,
    blocks: Vec<u32>,
    best: Option<(usize, Vec<usize>)>,
    explored: u64,
}

impl Subtree<'_> {
    fn incumbent(&self) -> usize {
        self.best.as_ref().map_or(0, |(b, _)| *b)
    }

    fn search(&mut self, v: usize) {
        let count = self.blocks.len();
        if count + (self.n - v) <= self.incumbent() {
            return;
        }
        if v == self.n {
            self.explored += 1;
            if self.masks.is_coalition_partition(&self.blocks) {
                self.best = Some((count, self.rgs.clone()));
            }
            return;
        }
        for b in 0..=count {
            self.rgs.push(b);
            if b == count {
                self.blocks.push(1 << v);
            } else {
                self.blocks[b] |= 1 << v;
            }
            self.search(v + 1);
            if b == count {
                self.blocks.pop();
            } else {
                self.blocks[b] &= !(1 << v);
            }
            self.rgs.pop();
        }
    }
}

fn prefixes(depth: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut it = RestrictedGrowthStrings::new(depth);
    while let Some(p) = it.next_rgs() {
        out.push(p.to_vec());
    }
    out
}

/// Exact C_k(G) (plain) or TC_k(G) (total) with a witness certificate.
///
/// The search space is split by the assignment of the first few vertices;
/// every subtree is searched independently with its own incumbent, so the
/// result, witness and `explored` count do not depend on the thread count.
pub fn exact_coalition_number(g: &Graph, k: usize, mode: Mode) -> Result<SolveResult> {
    precheck(g, k, mode, SOLVER_ORDER_CAP)?;
    let n = g.order();
    if n == 1 && mode == Mode::Plain {
        return single_vertex(g, k);
    }
    let masks = MaskGraph::new(g, k, mode);
    let results: Vec<(Best, u64)> = prefixes(n.min(5))
        .into_par_iter()
        .map(|prefix| {
            let mut blocks: Vec<u32> = Vec::new();
            for (v, &b) in prefix.iter().enumerate() {
                if b == blocks.len() {
                    blocks.push(0);
                }
                blocks[b] |= 1 << v;
            }
            let mut sub = Subtree {
                masks: &masks,
                n,
                rgs: prefix.clone(),
                blocks,
                best: None,
                explored: 0,
            };
            sub.search(prefix.len());
            (sub.best, sub.explored)
        })
        .collect();
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut explored = 0;
    for (candidate, e) in results {
        explored += e;
        if let Some((value, rgs)) = candidate {
            if best.as_ref().is_none_or(|(b, _)| value > *b) {
                best = Some((value, rgs));
            }
        }
    }
    finish(g, k, mode, best.map(|(_, r)| r), explored)
}

/// True iff every vertex `v` has a partner `u != v` with `{u, v}`
/// 2-dominating; equivalent to C_2(G) = n. Runs over all O(n^2) pairs.
pub fn is_full_c2(g: &Graph) -> bool {
    let n = g.order();
    n >= 2
        && g.vertices().all(|v| {
            g.vertices()
                .any(|u| u != v && is_k_dominating(g, &[u, v], 2))
        })
}
