//! The graphs G(d), d >= 4: 3d - 1 four-cycles hung between two stars
//! K_{1,d}. They attain the degree-based C_2 upper bound with δ = 2, Δ = d.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Named vertices of G(d). Copy indices `i` are 1-based; `j` is the
/// position inside a four-cycle, with bipartition {1, 2} | {3, 4}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GdVertex {
    A {
        i: usize,
        j: usize,
    },
    /// Only `i >= 2` exists.
    B {
        i: usize,
        j: usize,
    },
    C {
        i: usize,
        j: usize,
    },
    XLeaf(usize),
    YLeaf(usize),
    X,
    Y,
}

impl fmt::Display for GdVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GdVertex::A { i, j } => write!(f, "a_{j}^{i}"),
            GdVertex::B { i, j } => write!(f, "b_{j}^{i}"),
            GdVertex::C { i, j } => write!(f, "c_{j}^{i}"),
            GdVertex::XLeaf(i) => write!(f, "x_{i}"),
            GdVertex::YLeaf(i) => write!(f, "y_{i}"),
            GdVertex::X => f.write_str("x"),
            GdVertex::Y => f.write_str("y"),
        }
    }
}

/// Label table for G(d): A-cycles first, then B, C, the x-leaves, the
/// y-leaves, and finally the centres x and y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GdVertexMap {
    d: usize,
}

impl GdVertexMap {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        14 * self.d - 2
    }

    /// Integer label of a named vertex; `None` for names outside G(d).
    pub fn index(&self, v: GdVertex) -> Option<usize> {
        let d = self.d;
        let cycle = |i: usize, j: usize, lo: usize| (lo..=d).contains(&i) && (1..=4).contains(&j);
        match v {
            GdVertex::A { i, j } if cycle(i, j, 1) => Some(4 * (i - 1) + j - 1),
            GdVertex::B { i, j } if cycle(i, j, 2) => Some(4 * d + 4 * (i - 2) + j - 1),
            GdVertex::C { i, j } if cycle(i, j, 1) => Some(8 * d - 4 + 4 * (i - 1) + j - 1),
            GdVertex::XLeaf(i) if (1..=d).contains(&i) => Some(12 * d - 4 + i - 1),
            GdVertex::YLeaf(i) if (1..=d).contains(&i) => Some(13 * d - 4 + i - 1),
            GdVertex::X => Some(14 * d - 4),
            GdVertex::Y => Some(14 * d - 3),
            _ => None,
        }
    }

    /// Label of a vertex known to exist.
    pub fn at(&self, v: GdVertex) -> usize {
        self.index(v)
            .unwrap_or_else(|| panic!("{v} is not a vertex of G({})", self.d))
    }

    /// Every (name, label) pair in label order.
    pub fn entries(&self) -> Vec<(GdVertex, usize)> {
        let d = self.d;
        let mut names = Vec::with_capacity(self.order());
        for i in 1..=d {
            names.extend((1..=4).map(|j| GdVertex::A { i, j }));
        }
        for i in 2..=d {
            names.extend((1..=4).map(|j| GdVertex::B { i, j }));
        }
        for i in 1..=d {
            names.extend((1..=4).map(|j| GdVertex::C { i, j }));
        }
        names.extend((1..=d).map(GdVertex::XLeaf));
        names.extend((1..=d).map(GdVertex::YLeaf));
        names.push(GdVertex::X);
        names.push(GdVertex::Y);
        names.into_iter().map(|v| (v, self.at(v))).collect()
    }
}

pub fn gd_vertex_map(d: usize) -> Result<GdVertexMap> {
    if d < 4 {
        return Err(Error::InvalidParameter(format!(
            "G(d) needs d >= 4, got {d}"
        )));
    }
    Ok(GdVertexMap { d })
}

pub fn gd(d: usize) -> Result<Graph> {
    let map = gd_vertex_map(d)?;
    let at = |v| map.at(v);
    let mut edges = Vec::new();
    let mut four_cycle = |make: &dyn Fn(usize) -> GdVertex| {
        for (p, q) in [(1, 3), (1, 4), (2, 3), (2, 4)] {
            edges.push((at(make(p)), at(make(q))));
        }
    };
    for i in 1..=d {
        four_cycle(&|j| GdVertex::A { i, j });
        four_cycle(&|j| GdVertex::C { i, j });
    }
    for i in 2..=d {
        four_cycle(&|j| GdVertex::B { i, j });
    }
    for i in 1..=d {
        edges.push((at(GdVertex::X), at(GdVertex::XLeaf(i))));
        edges.push((at(GdVertex::Y), at(GdVertex::YLeaf(i))));
        edges.push((at(GdVertex::XLeaf(i)), at(GdVertex::A { i, j: 4 })));
        edges.push((at(GdVertex::YLeaf(i)), at(GdVertex::C { i, j: 1 })));
    }
    for i in 2..=d {
        for j in [1, 2] {
            edges.push((at(GdVertex::XLeaf(i)), at(GdVertex::B { i, j })));
        }
        for j in [3, 4] {
            edges.push((at(GdVertex::YLeaf(i)), at(GdVertex::B { i, j })));
        }
    }
    Graph::from_edge_list(map.order(), &edges)
}
