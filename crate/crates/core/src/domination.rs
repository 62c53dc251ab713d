//! Verifiers for (total) k-domination, k-coalitions and coalition partitions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Plain k-domination looks only at vertices outside the set; total
/// k-domination at every vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Plain,
    Total,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Plain => "plain",
            Mode::Total => "total",
        })
    }
}

fn membership(g: &Graph, set: &[usize]) -> Vec<bool> {
    let mut inside = vec![false; g.order()];
    for &v in set {
        inside[v] = true;
    }
    inside
}

fn dominated_by(g: &Graph, inside: &[bool], k: usize, mode: Mode) -> bool {
    g.vertices()
        .filter(|&v| mode == Mode::Total || !inside[v])
        .all(|v| g.neighbors(v).iter().filter(|&&w| inside[w]).count() >= k)
}

/// Every vertex outside `set` has at least `k` neighbours inside it.
pub fn is_k_dominating(g: &Graph, set: &[usize], k: usize) -> bool {
    dominated_by(g, &membership(g, set), k, Mode::Plain)
}

/// Every vertex of `g` has at least `k` neighbours inside `set`.
pub fn is_total_k_dominating(g: &Graph, set: &[usize], k: usize) -> bool {
    dominated_by(g, &membership(g, set), k, Mode::Total)
}

pub fn is_dominating(g: &Graph, set: &[usize], k: usize, mode: Mode) -> bool {
    dominated_by(g, &membership(g, set), k, mode)
}

fn check_set(g: &Graph, set: &[usize], name: &str) -> Result<()> {
    if set.is_empty() {
        return Err(Error::InvalidSets(format!("set {name} is empty")));
    }
    if let Some(&v) = set.iter().find(|&&v| v >= g.order()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        });
    }
    Ok(())
}

/// Neither `a` nor `b` dominates (in the given mode) but `a ∪ b` does.
pub fn forms_k_coalition(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    k: usize,
    mode: Mode,
) -> Result<bool> {
    check_set(g, a, "A")?;
    check_set(g, b, "B")?;
    let in_a = membership(g, a);
    if b.iter().any(|&v| in_a[v]) {
        return Err(Error::InvalidSets("sets A and B overlap".into()));
    }
    if dominated_by(g, &in_a, k, mode) {
        return Ok(false);
    }
    let mut in_ab = membership(g, b);
    if dominated_by(g, &in_ab, k, mode) {
        return Ok(false);
    }
    for &v in a {
        in_ab[v] = true;
    }
    Ok(dominated_by(g, &in_ab, k, mode))
}

/// An ordered list of disjoint nonempty blocks covering `0..order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
    #[serde(skip)]
    order: usize,
}

impl VertexPartition {
    /// Checks the partition property against a vertex set `0..order`.
    /// Vertices inside each block are sorted; block order is kept.
    pub fn new(order: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut owner = vec![None; order];
        let mut blocks = blocks;
        for (i, block) in blocks.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(Error::NotAPartition(format!("block {i} is empty")));
            }
            block.sort_unstable();
            for &v in block.iter() {
                if v >= order {
                    return Err(Error::NotAPartition(format!(
                        "vertex {v} in block {i} is out of range for order {order}"
                    )));
                }
                if let Some(j) = owner[v] {
                    return Err(Error::NotAPartition(format!(
                        "vertex {v} appears in blocks {j} and {i}"
                    )));
                }
                owner[v] = Some(i);
            }
        }
        if let Some(v) = owner.iter().position(Option::is_none) {
            return Err(Error::NotAPartition(format!("vertex {v} is not covered")));
        }
        Ok(VertexPartition { blocks, order })
    }

    /// Builds the partition encoded by a restricted growth string.
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let count = rgs.iter().map(|&b| b + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); count];
        for (v, &b) in rgs.iter().enumerate() {
            blocks[b].push(v);
        }
        VertexPartition {
            blocks,
            order: rgs.len(),
        }
    }

    /// Parses a JSON array of arrays of 0-based vertex indices.
    pub fn from_json(order: usize, text: &str) -> Result<Self> {
        let blocks: Vec<Vec<usize>> =
            serde_json::from_str(text).map_err(|e| Error::PartitionFile(e.to_string()))?;
        Self::new(order, blocks)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.blocks).expect("plain integer arrays serialize")
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Number of vertices partitioned.
    pub fn order(&self) -> usize {
        self.order
    }
}

/// Why a block is allowed in a coalition partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlockEvidence {
    /// The block is k-dominating and has exactly k vertices (plain mode).
    SelfDominating,
    /// The block forms a k-coalition with the block at this index.
    Partner { partner: usize },
    /// The graph has a single vertex; its one-block partition counts as a
    /// coalition partition for every k.
    SingleVertexGraph,
}

/// A partition together with per-block evidence that it is a (total)
/// k-coalition partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoalitionCertificate {
    pub k: usize,
    pub mode: Mode,
    pub blocks: VertexPartition,
    pub evidence: Vec<BlockEvidence>,
}

impl CoalitionCertificate {
    pub fn size(&self) -> usize {
        self.blocks.len()
    }

    pub fn partition(&self) -> &VertexPartition {
        &self.blocks
    }

    /// Re-runs every evidence check against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.blocks.order() != g.order() || self.evidence.len() != self.blocks.len() {
            return false;
        }
        let blocks = self.blocks.blocks();
        self.evidence.iter().enumerate().all(|(i, ev)| match *ev {
            BlockEvidence::SelfDominating => {
                self.mode == Mode::Plain
                    && blocks[i].len() == self.k
                    && is_k_dominating(g, &blocks[i], self.k)
            }
            BlockEvidence::Partner { partner } => {
                partner != i
                    && partner < blocks.len()
                    && forms_k_coalition(g, &blocks[i], &blocks[partner], self.k, self.mode)
                        .unwrap_or(false)
            }
            BlockEvidence::SingleVertexGraph => self.mode == Mode::Plain && g.order() == 1,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("certificate serializes")
    }
}

/// Assigns evidence to every block, or reports the first block that has none.
/// Partners are the least eligible block index.
pub fn validate_partition(
    g: &Graph,
    partition: &VertexPartition,
    k: usize,
    mode: Mode,
) -> Result<CoalitionCertificate> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if partition.order() != g.order() {
        return Err(Error::NotAPartition(format!(
            "partition covers {} vertices but the graph has {}",
            partition.order(),
            g.order()
        )));
    }
    let all: Vec<usize> = g.vertices().collect();
    if mode == Mode::Total && !is_total_k_dominating(g, &all, k) {
        return Err(Error::TotalInfeasible {
            k,
            min_degree: g.min_degree(),
        });
    }
    let blocks = partition.blocks();
    let cert = |evidence| CoalitionCertificate {
        k,
        mode,
        blocks: partition.clone(),
        evidence,
    };

    if mode == Mode::Plain && g.order() == 1 {
        let ev = if k == 1 {
            BlockEvidence::SelfDominating
        } else {
            BlockEvidence::SingleVertexGraph
        };
        return Ok(cert(vec![ev]));
    }

    let masks: Vec<Vec<bool>> = blocks.iter().map(|b| membership(g, b)).collect();
    let dominating: Vec<bool> = masks.iter().map(|m| dominated_by(g, m, k, mode)).collect();
    let mut evidence = Vec::with_capacity(blocks.len());
    for i in 0..blocks.len() {
        if mode == Mode::Plain && dominating[i] && blocks[i].len() == k {
            evidence.push(BlockEvidence::SelfDominating);
            continue;
        }
        let partner = if dominating[i] {
            None
        } else {
            (0..blocks.len()).find(|&j| {
                j != i && !dominating[j] && {
                    let union: Vec<bool> = masks[i]
                        .iter()
                        .zip(&masks[j])
                        .map(|(a, b)| *a || *b)
                        .collect();
                    dominated_by(g, &union, k, mode)
                }
            })
        };
        match partner {
            Some(partner) => evidence.push(BlockEvidence::Partner { partner }),
            None => return Err(Error::NoEvidence { block: i }),
        }
    }
    Ok(cert(evidence))
}

/// The graph on the blocks of `partition` whose edges are the plain
/// k-coalition pairs.
pub fn coalition_graph(g: &Graph, partition: &VertexPartition, k: usize) -> Graph {
    coalition_graph_in_mode(g, partition, k, Mode::Plain)
}

pub fn coalition_graph_in_mode(
    g: &Graph,
    partition: &VertexPartition,
    k: usize,
    mode: Mode,
) -> Graph {
    let blocks = partition.blocks();
    Graph::from_matrix_fn(blocks.len(), |i, j| {
        forms_k_coalition(g, &blocks[i], &blocks[j], k, mode).unwrap_or(false)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::from_matrix_fn(n, |_, _| true)
    }

    fn kst(s: usize, t: usize) -> Graph {
        Graph::from_matrix_fn(s + t, |u, v| (u < s) != (v < s))
    }

    fn c4() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn p3() -> Graph {
        Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn k_domination_examples() {
        let k5 = complete(5);
        for k in 1..6 {
            assert!(is_k_dominating(&k5, &[0, 1, 2, 3, 4], k));
        }
        for a in 0..5 {
            for b in (a + 1)..5 {
                assert!(is_k_dominating(&k5, &[a, b], 2));
            }
        }
        assert!(!is_k_dominating(&p3(), &[1], 2));
        assert!(is_k_dominating(&p3(), &[1], 1));
    }

    #[test]
    fn total_domination_examples() {
        let g = kst(3, 4);
        let all: Vec<_> = (0..7).collect();
        assert!(is_total_k_dominating(&g, &all, 2));
        // X ∪ {y1}: every x has one neighbour inside
        assert!(!is_total_k_dominating(&g, &[0, 1, 2, 3], 2));
        assert!(is_total_k_dominating(&g, &[0, 1, 2, 3, 4], 2));
    }

    #[test]
    fn coalition_examples() {
        let g = c4();
        assert!(forms_k_coalition(&g, &[0], &[2], 2, Mode::Plain).unwrap());
        assert!(!forms_k_coalition(&g, &[0], &[1], 2, Mode::Plain).unwrap());
        let k5 = complete(5);
        assert!(!forms_k_coalition(&k5, &[0, 1, 2, 3], &[4], 2, Mode::Plain).unwrap());
    }

    #[test]
    fn coalition_errors() {
        let g = c4();
        assert!(matches!(
            forms_k_coalition(&g, &[0, 1], &[1], 2, Mode::Plain),
            Err(Error::InvalidSets(_))
        ));
        assert!(matches!(
            forms_k_coalition(&g, &[], &[1], 2, Mode::Plain),
            Err(Error::InvalidSets(_))
        ));
    }

    #[test]
    fn partition_errors() {
        assert!(matches!(
            VertexPartition::new(3, vec![vec![0, 1], vec![1, 2]]),
            Err(Error::NotAPartition(_))
        ));
        assert!(matches!(
            VertexPartition::new(3, vec![vec![0, 1]]),
            Err(Error::NotAPartition(_))
        ));
        assert!(matches!(
            VertexPartition::new(3, vec![vec![0, 1, 2], vec![]]),
            Err(Error::NotAPartition(_))
        ));
        assert!(matches!(
            VertexPartition::new(2, vec![vec![0, 5]]),
            Err(Error::NotAPartition(_))
        ));
        assert!(VertexPartition::from_json(3, "[[0,2],[1]]").is_ok());
        assert!(matches!(
            VertexPartition::from_json(3, "[[0,2],"),
            Err(Error::PartitionFile(_))
        ));
    }

    #[test]
    fn k34_two_coalition_partition() {
        // X = {0,1,2}, Y = {3,4,5,6}
        let g = kst(3, 4);
        let p = VertexPartition::new(7, vec![vec![0, 1, 3], vec![2], vec![4], vec![5], vec![6]])
            .unwrap();
        let cert = validate_partition(&g, &p, 2, Mode::Plain).unwrap();
        assert_eq!(cert.size(), 5);
        assert!(cert.verify(&g));
    }

    #[test]
    fn p3_split_has_no_evidence() {
        let g = p3();
        let p = VertexPartition::new(3, vec![vec![0, 2], vec![1]]).unwrap();
        assert_eq!(
            validate_partition(&g, &p, 2, Mode::Plain),
            Err(Error::NoEvidence { block: 1 })
        );
    }

    #[test]
    fn k33_three_coalition_partition() {
        let g = kst(3, 3);
        let p = VertexPartition::new(6, vec![vec![0], vec![1, 2], vec![3], vec![4, 5]]).unwrap();
        let cert = validate_partition(&g, &p, 3, Mode::Plain).unwrap();
        assert_eq!(cert.size(), 4);
        assert_eq!(
            cert.evidence,
            vec![
                BlockEvidence::Partner { partner: 1 },
                BlockEvidence::Partner { partner: 0 },
                BlockEvidence::Partner { partner: 3 },
                BlockEvidence::Partner { partner: 2 },
            ]
        );
    }

    #[test]
    fn self_dominating_block() {
        // P3 = a-b-c with k = 1: {b} dominates and has cardinality 1
        let g = p3();
        let p = VertexPartition::new(3, vec![vec![1], vec![0], vec![2]]).unwrap();
        let cert = validate_partition(&g, &p, 1, Mode::Plain).unwrap();
        assert_eq!(cert.evidence[0], BlockEvidence::SelfDominating);
        assert_eq!(cert.evidence[1], BlockEvidence::Partner { partner: 2 });
    }

    #[test]
    fn total_mode_requires_partners() {
        let g = c4();
        let p = VertexPartition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let cert = validate_partition(&g, &p, 2, Mode::Total).unwrap();
        assert_eq!(cert.size(), 2);
        let k13 = kst(1, 3);
        let p = VertexPartition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(
            validate_partition(&k13, &p, 2, Mode::Total),
            Err(Error::TotalInfeasible {
                k: 2,
                min_degree: 1
            })
        );
    }

    #[test]
    fn single_vertex_graph() {
        let g = Graph::empty(1);
        let p = VertexPartition::new(1, vec![vec![0]]).unwrap();
        for k in 1..5 {
            let cert = validate_partition(&g, &p, k, Mode::Plain).unwrap();
            assert_eq!(cert.size(), 1);
            assert!(cert.verify(&g));
        }
    }

    #[test]
    fn coalition_graph_examples() {
        let k5 = complete(5);
        let singletons = VertexPartition::from_rgs(&[0, 1, 2, 3, 4]);
        assert_eq!(coalition_graph(&k5, &singletons, 2), complete(5));
        let k33 = kst(3, 3);
        let p = VertexPartition::new(6, vec![vec![0], vec![1, 2], vec![3], vec![4, 5]]).unwrap();
        let cg = coalition_graph(&k33, &p, 3);
        assert_eq!(cg, Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap());
        let whole = VertexPartition::from_rgs(&[0, 0, 0, 0]);
        let cg = coalition_graph(&c4(), &whole, 2);
        assert_eq!((cg.order(), cg.size()), (1, 0));
    }

    #[test]
    fn certificate_json_shape() {
        let g = c4();
        let p = VertexPartition::from_rgs(&[0, 1, 2, 3]);
        let cert = validate_partition(&g, &p, 2, Mode::Plain).unwrap();
        let json = cert.to_json();
        assert_eq!(json["blocks"], serde_json::json!([[0], [1], [2], [3]]));
        assert_eq!(
            json["evidence"][0],
            serde_json::json!({"kind": "partner", "partner": 2})
        );
        assert_eq!(json["mode"], "plain");
    }
}
