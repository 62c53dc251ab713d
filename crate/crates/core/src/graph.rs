//! Finite simple undirected graphs on dense vertex labels `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An immutable simple graph.
///
/// Adjacency is kept twice: sorted neighbor lists for iteration and a
/// row-major bit matrix for constant-time edge queries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    neighbors: Vec<Vec<usize>>,
    words: usize,
    matrix: Vec<u64>,
}

/// A two-colouring of the vertex set in which every edge crosses sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub side_x: Vec<usize>,
    pub side_y: Vec<usize>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            neighbors: vec![Vec::new(); n],
            words,
            matrix: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are collapsed.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set_bit(u, v);
            g.set_bit(v, u);
        }
        g.rebuild_lists();
        Ok(g)
    }

    pub(crate) fn from_matrix_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacent(u, v) {
                    g.set_bit(u, v);
                    g.set_bit(v, u);
                }
            }
        }
        g.rebuild_lists();
        g
    }

    fn set_bit(&mut self, u: usize, v: usize) {
        self.matrix[u * self.words + v / 64] |= 1u64 << (v % 64);
    }

    fn rebuild_lists(&mut self) {
        for u in 0..self.n {
            let row = &self.matrix[u * self.words..(u + 1) * self.words];
            let list = &mut self.neighbors[u];
            list.clear();
            for (w, &word) in row.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let b = bits.trailing_zeros() as usize;
                    list.push(w * 64 + b);
                    bits &= bits - 1;
                }
            }
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Open neighbourhood N(v), sorted ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Closed neighbourhood N[v], sorted ascending.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.neighbors[v].clone();
        let pos = out.partition_point(|&w| w < v);
        out.insert(pos, v);
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.matrix[u * self.words + v / 64] & (1u64 << (v % 64)) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    /// δ(G); zero for the graph on no vertices.
    pub fn min_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Δ(G); zero for the graph on no vertices.
    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Adjacency row of `v` as a single word. Only meaningful for `n <= 64`.
    pub fn adjacency_mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.matrix[v * self.words]
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.neighbors.iter().all(|l| l.len() == d)
    }

    pub fn is_cubic(&self) -> bool {
        self.n > 0 && self.is_regular(3)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.neighbors[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() == self.n - 1 && self.is_connected()
    }

    /// Two-colours the graph by breadth-first layering, component by
    /// component starting from the least unvisited vertex.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &w in &self.neighbors[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut side_x, mut side_y) = (Vec::new(), Vec::new());
        for (v, c) in colour.into_iter().enumerate() {
            if c == Some(false) {
                side_x.push(v);
            } else {
                side_y.push(v);
            }
        }
        Some(Bipartition { side_x, side_y })
    }

    /// Vertices of degree exactly one.
    pub fn leaves(&self) -> Vec<usize> {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> Vec<usize> {
        self.vertices()
            .filter(|&v| self.degree(v) + 1 == self.n)
            .collect()
    }

    /// `self ∨ other`: vertices of `other` are shifted by `self.order()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let n1 = self.n;
        Graph::from_matrix_fn(n1 + other.n, |u, v| match (u < n1, v < n1) {
            (true, true) => self.has_edge(u, v),
            (false, false) => other.has_edge(u - n1, v - n1),
            _ => true,
        })
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n1 = self.n;
        Graph::from_matrix_fn(n1 + other.n, |u, v| match (u < n1, v < n1) {
            (true, true) => self.has_edge(u, v),
            (false, false) => other.has_edge(u - n1, v - n1),
            _ => false,
        })
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        Graph::from_matrix_fn(vertices.len(), |i, j| {
            self.has_edge(vertices[i], vertices[j])
        })
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut inverse = vec![0; self.n];
        for (v, &p) in perm.iter().enumerate() {
            inverse[p] = v;
        }
        Graph::from_matrix_fn(self.n, |u, v| self.has_edge(inverse[u], inverse[v]))
    }

    /// The two sides `(X, Y)` with `|X| <= |Y|` if this graph is a complete
    /// bipartite graph K_{s,t} with `s, t >= 1`.
    pub fn complete_bipartite_sides(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        if self.n < 2 || !self.is_connected() {
            return None;
        }
        let bip = self.is_bipartite()?;
        let (x, y) = (bip.side_x, bip.side_y);
        if self.size() != x.len() * y.len() {
            return None;
        }
        if x.len() <= y.len() {
            Some((x, y))
        } else {
            Some((y, x))
        }
    }

    /// True when every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        self.n >= 1 && self.is_regular(self.n - 1)
    }
}

impl Bipartition {
    /// Checks that the sides are disjoint, cover `g` and that every edge of
    /// `g` crosses between them.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut side = vec![None; g.order()];
        for (vs, s) in [(&self.side_x, false), (&self.side_y, true)] {
            for &v in vs {
                if v >= g.order() || side[v].is_some() {
                    return false;
                }
                side[v] = Some(s);
            }
        }
        side.iter().all(Option::is_some) && g.edges().all(|(u, v)| side[u] != side[v])
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_matrix_fn(n, |_, _| true)
    }

    #[test]
    fn c4_from_edges() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.size(), 4);
        assert_eq!(g.min_degree(), 2);
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.neighbors(0), &[1, 3]);
        assert_eq!(g.closed_neighborhood(2), vec![1, 2, 3]);
    }

    #[test]
    fn k2_and_duplicates() {
        let g = Graph::from_edge_list(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert!(g.is_complete());
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(Graph::from_edge_list(3, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn bipartite_detection() {
        let k33 = Graph::from_matrix_fn(6, |u, v| (u < 3) != (v < 3));
        let bip = k33.is_bipartite().unwrap();
        assert!(bip.is_valid_for(&k33));
        assert_eq!(bip.side_x, vec![0, 1, 2]);
        assert!(complete(4).is_bipartite().is_none());
        let k1 = Graph::empty(1);
        let bip = k1.is_bipartite().unwrap();
        assert_eq!((bip.side_x, bip.side_y), (vec![0], vec![]));
        assert!(cycle(5).is_bipartite().is_none());
        assert!(cycle(6).is_bipartite().is_some());
    }

    #[test]
    fn leaves_of_small_graphs() {
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.leaves(), vec![0, 3]);
        let star = Graph::from_edge_list(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(star.leaves(), vec![1, 2, 3, 4, 5]);
        assert!(cycle(4).leaves().is_empty());
    }

    #[test]
    fn join_and_universal_vertices() {
        let k1 = Graph::empty(1);
        assert_eq!(k1.join(&k1), complete(2));
        let h = Graph::empty(2);
        let g = h.join(&complete(4));
        assert_eq!(g.order(), 6);
        // H vertices see the 4 clique vertices; clique vertices see everything.
        assert_eq!(g.degrees(), vec![4, 4, 5, 5, 5, 5]);
        assert_eq!(g.universal_vertices(), vec![2, 3, 4, 5]);
        let c4 = cycle(4);
        assert_eq!(Graph::empty(0).join(&c4), c4);
        assert!(c4.universal_vertices().is_empty());
        assert_eq!(complete(5).universal_vertices(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn complete_bipartite_detection() {
        let k34 = Graph::from_matrix_fn(7, |u, v| (u < 3) != (v < 3));
        let (x, y) = k34.complete_bipartite_sides().unwrap();
        assert_eq!((x.len(), y.len()), (3, 4));
        assert!(cycle(6).complete_bipartite_sides().is_none());
        assert!(cycle(4).complete_bipartite_sides().is_some());
    }

    #[test]
    fn large_graph_matrix_spans_words() {
        let g = cycle(130);
        assert!(g.has_edge(129, 0));
        assert!(g.has_edge(64, 65));
        assert!(!g.has_edge(0, 64));
        assert_eq!(g.size(), 130);
        assert!(g.is_connected());
    }
}
