//! G(δ, Δ): r = δ/2 + 1 stars K_{1,Δ} whose leaves each carry two
//! cocktail-party graphs H(r), joined into one component by r - 1 extra
//! edges.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Label arithmetic for G(δ, Δ).
///
/// Centres `w_1..w_r` come first, then the leaves of `W_1`, ..., `W_r`
/// (Δ each), then two H(r) copies per leaf in leaf order. Inside a copy,
/// positions `0..r` form the clique Q' (joined to the leaf) and `r..2r`
/// the clique Q''; positions `m` and `r + m` are the removed matching edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GDeltaDeltaLayout {
    pub min_degree: usize,
    pub max_degree: usize,
    pub r: usize,
}

impl GDeltaDeltaLayout {
    pub fn order(&self) -> usize {
        self.r + self.r * self.max_degree * (1 + 4 * self.r)
    }

    /// Centre `w_i`, `i` in `0..r`.
    pub fn centre(&self, i: usize) -> usize {
        i
    }

    /// Leaf `j` (in `0..Δ`) of star `i` (in `0..r`).
    pub fn leaf(&self, i: usize, j: usize) -> usize {
        self.r + i * self.max_degree + j
    }

    /// Position `pos` (in `0..2r`) of copy `c` (0 or 1) hanging from leaf
    /// `j` of star `i`.
    pub fn copy_vertex(&self, i: usize, j: usize, c: usize, pos: usize) -> usize {
        let leaf_index = i * self.max_degree + j;
        self.r + self.r * self.max_degree + leaf_index * 4 * self.r + c * 2 * self.r + pos
    }

    /// The r - 1 connecting edges: the Q'' vertex at position `r + 1` of the
    /// first copy under star `i` meets the Q'' vertex at position `r` of the
    /// first copy under star `i + 1`. No vertex receives two of them.
    pub fn connecting_edges(&self) -> Vec<(usize, usize)> {
        (0..self.r - 1)
            .map(|i| {
                (
                    self.copy_vertex(i, 0, 0, self.r + 1),
                    self.copy_vertex(i + 1, 0, 0, self.r),
                )
            })
            .collect()
    }
}

pub fn g_delta_delta_layout(min_degree: usize, max_degree: usize) -> Result<GDeltaDeltaLayout> {
    if min_degree < 4 || !min_degree.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "G(δ, Δ) needs an even δ >= 4, got {min_degree}"
        )));
    }
    if max_degree < 2 * min_degree {
        return Err(Error::InvalidParameter(format!(
            "G(δ, Δ) needs Δ >= 2δ, got δ = {min_degree}, Δ = {max_degree}"
        )));
    }
    Ok(GDeltaDeltaLayout {
        min_degree,
        max_degree,
        r: min_degree / 2 + 1,
    })
}

pub fn g_delta_delta(min_degree: usize, max_degree: usize) -> Result<Graph> {
    let lay = g_delta_delta_layout(min_degree, max_degree)?;
    let r = lay.r;
    let mut edges = Vec::new();
    for i in 0..r {
        for j in 0..max_degree {
            let q = lay.leaf(i, j);
            edges.push((lay.centre(i), q));
            for c in 0..2 {
                let at = |pos| lay.copy_vertex(i, j, c, pos);
                for a in 0..2 * r {
                    for b in (a + 1)..2 * r {
                        if a % r != b % r {
                            edges.push((at(a), at(b)));
                        }
                    }
                }
                for pos in 0..r {
                    edges.push((q, at(pos)));
                }
            }
        }
    }
    edges.extend(lay.connecting_edges());
    let g = Graph::from_edge_list(lay.order(), &edges)?;
    if g.min_degree() != min_degree || g.max_degree() != max_degree || !g.is_connected() {
        return Err(Error::Construction(format!(
            "G({min_degree}, {max_degree}) wiring gives δ = {}, Δ = {}, connected = {}",
            g.min_degree(),
            g.max_degree(),
            g.is_connected()
        )));
    }
    Ok(g)
}
