//! Parametric generators for every graph family used by the bounds and
//! constructions.
//!
//! Family specs have a textual form `name(p1=v1,p2=v2)` that round-trips
//! through [`FamilySpec::parse`] and `Display`.

mod cocktail;
mod gd;
mod trees;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{emit_graph6, parse_graph6};

pub use cocktail::{g_delta_delta, g_delta_delta_layout, GDeltaDeltaLayout};
pub use gd::{gd, gd_vertex_map, GdVertex, GdVertexMap};
pub use trees::{free_trees, level_sequence_free_trees, prufer_free_trees, FREE_TREE_COUNTS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CubicName {
    K4,
    K33,
    Q3,
    Prism,
    Petersen,
}

impl CubicName {
    pub const ALL: [CubicName; 5] = [
        CubicName::K4,
        CubicName::K33,
        CubicName::Q3,
        CubicName::Prism,
        CubicName::Petersen,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CubicName::K4 => "K4",
            CubicName::K33 => "K33",
            CubicName::Q3 => "Q3",
            CubicName::Prism => "prism",
            CubicName::Petersen => "petersen",
        }
    }
}

impl FromStr for CubicName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CubicName::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::FamilySpec(format!("unknown cubic graph `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// K_{1,leaves}
    Star {
        leaves: usize,
    },
    /// Two adjacent centres carrying `a` and `b` leaves.
    DoubleStar {
        a: usize,
        b: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        s: usize,
        t: usize,
    },
    /// K_{2r} minus a perfect matching.
    CocktailParty {
        r: usize,
    },
    /// `h ∨ K_m`, the equality case of the order upper bound with k = |h| + 1.
    JoinEquality {
        h: Graph,
        m: usize,
    },
    Gd {
        d: usize,
    },
    GDeltaDelta {
        min_degree: usize,
        max_degree: usize,
    },
    NamedCubic(CubicName),
    AllFreeTrees {
        n: usize,
    },
}

fn complete_graph(n: usize) -> Graph {
    Graph::from_matrix_fn(n, |_, _| true)
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

pub fn path(n: usize) -> Result<Graph> {
    need(n >= 1, || "path needs n >= 1".into())?;
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &e)
}

pub fn cycle(n: usize) -> Result<Graph> {
    need(n >= 3, || "cycle needs n >= 3".into())?;
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &e)
}

pub fn star(leaves: usize) -> Result<Graph> {
    need(leaves >= 1, || "star needs at least one leaf".into())?;
    let e: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edge_list(leaves + 1, &e)
}

/// Centres are 0 (with `a` leaves) and 1 (with `b` leaves).
pub fn double_star(a: usize, b: usize) -> Result<Graph> {
    need(a >= 1 && b >= 1, || "double star needs a, b >= 1".into())?;
    let mut e = vec![(0, 1)];
    e.extend((0..a).map(|i| (0, 2 + i)));
    e.extend((0..b).map(|i| (1, 2 + a + i)));
    Graph::from_edge_list(2 + a + b, &e)
}

pub fn complete(n: usize) -> Result<Graph> {
    need(n >= 1, || "complete graph needs n >= 1".into())?;
    Ok(complete_graph(n))
}

/// Side X is `0..s`, side Y is `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    need(s >= 1 && t >= 1, || {
        "complete bipartite graph needs s, t >= 1".into()
    })?;
    Ok(Graph::from_matrix_fn(s + t, |u, v| (u < s) != (v < s)))
}

/// Vertex `i` and `i + r` are the removed matching pairs.
pub fn cocktail_party(r: usize) -> Result<Graph> {
    need(r >= 1, || "cocktail party graph needs r >= 1".into())?;
    Ok(Graph::from_matrix_fn(2 * r, |u, v| u % r != v % r))
}

pub fn named_cubic(name: CubicName) -> Graph {
    let edges: Vec<(usize, usize)> = match name {
        CubicName::K4 => return complete_graph(4),
        CubicName::K33 => return Graph::from_matrix_fn(6, |u, v| (u < 3) != (v < 3)),
        CubicName::Q3 => {
            let mut e = Vec::new();
            for u in 0..8usize {
                for bit in 0..3 {
                    let v = u ^ (1 << bit);
                    if u < v {
                        e.push((u, v));
                    }
                }
            }
            e
        }
        CubicName::Prism => vec![
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
        CubicName::Petersen => {
            let mut e = Vec::new();
            for i in 0..5 {
                e.push((i, (i + 1) % 5));
                e.push((i, i + 5));
                e.push((5 + i, 5 + (i + 2) % 5));
            }
            e
        }
    };
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap();
    Graph::from_edge_list(n, &edges).expect("hard-coded edge list is valid")
}

/// `h ∨ K_m`; the clique occupies labels `|h|..|h|+m`.
pub fn join_equality(h: &Graph, m: usize) -> Result<Graph> {
    need(m >= 1, || "join needs a clique part of order >= 1".into())?;
    Ok(h.join(&complete_graph(m)))
}

impl FamilySpec {
    /// Builds the single graph named by this spec. `AllFreeTrees` names a
    /// collection; use [`FamilySpec::generate_all`] for it.
    pub fn generate(&self) -> Result<Graph> {
        match self {
            FamilySpec::Path { n } => path(*n),
            FamilySpec::Cycle { n } => cycle(*n),
            FamilySpec::Star { leaves } => star(*leaves),
            FamilySpec::DoubleStar { a, b } => double_star(*a, *b),
            FamilySpec::Complete { n } => complete(*n),
            FamilySpec::CompleteBipartite { s, t } => complete_bipartite(*s, *t),
            FamilySpec::CocktailParty { r } => cocktail_party(*r),
            FamilySpec::JoinEquality { h, m } => join_equality(h, *m),
            FamilySpec::Gd { d } => gd(*d),
            FamilySpec::GDeltaDelta {
                min_degree,
                max_degree,
            } => g_delta_delta(*min_degree, *max_degree),
            FamilySpec::NamedCubic(name) => Ok(named_cubic(*name)),
            FamilySpec::AllFreeTrees { .. } => Err(Error::FamilySpec(
                "all_free_trees names several graphs; generate them as a collection".into(),
            )),
        }
    }

    /// Every graph named by this spec (one for all families except
    /// `AllFreeTrees`).
    pub fn generate_all(&self) -> Result<Vec<Graph>> {
        match self {
            FamilySpec::AllFreeTrees { n } => free_trees(*n),
            _ => self.generate().map(|g| vec![g]),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Star { .. } => "star",
            FamilySpec::DoubleStar { .. } => "double_star",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::CocktailParty { .. } => "cocktail_party",
            FamilySpec::JoinEquality { .. } => "join_equality",
            FamilySpec::Gd { .. } => "gd",
            FamilySpec::GDeltaDelta { .. } => "g_delta_Delta",
            FamilySpec::NamedCubic(_) => "named_cubic",
            FamilySpec::AllFreeTrees { .. } => "all_free_trees",
        }
    }

    /// Parses `name(p1=v1,p2=v2,...)`. Parameters of `join_equality` are
    /// `m` (clique order) and either `h` (graph6 of H) or `k` (H edgeless of
    /// order k - 1), or both when they agree.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let (name, rest) = match text.find('(') {
            Some(i) => (&text[..i], &text[i + 1..]),
            None => (text, ")"),
        };
        let body = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::FamilySpec(format!("missing `)` in `{text}`")))?;
        let mut params = BTreeMap::new();
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::FamilySpec(format!("parameter `{item}` is not key=value")))?;
            if params.insert(key.trim(), value.trim()).is_some() {
                return Err(Error::FamilySpec(format!("parameter `{key}` given twice")));
            }
        }
        let mut p = Params {
            params,
            family: name.trim(),
        };
        let spec = match p.family {
            "path" => FamilySpec::Path { n: p.int("n")? },
            "cycle" => FamilySpec::Cycle { n: p.int("n")? },
            "star" => FamilySpec::Star {
                leaves: p.int("leaves")?,
            },
            "double_star" => FamilySpec::DoubleStar {
                a: p.int("a")?,
                b: p.int("b")?,
            },
            "complete" => FamilySpec::Complete { n: p.int("n")? },
            "complete_bipartite" => FamilySpec::CompleteBipartite {
                s: p.int("s")?,
                t: p.int("t")?,
            },
            "cocktail_party" => FamilySpec::CocktailParty { r: p.int("r")? },
            "join_equality" => {
                let m = p.int("m")?;
                let h = match (p.params.remove("h"), p.params.remove("k")) {
                    (Some(h6), k) => {
                        let h = parse_graph6(h6)?;
                        if let Some(k) = k {
                            let k: usize = parse_int("k", k)?;
                            if k != h.order() + 1 {
                                return Err(Error::FamilySpec(format!(
                                    "H has order {} but k = {k} needs order {}",
                                    h.order(),
                                    k.saturating_sub(1)
                                )));
                            }
                        }
                        h
                    }
                    (None, Some(k)) => {
                        let k: usize = parse_int("k", k)?;
                        if k < 1 {
                            return Err(Error::FamilySpec("k must be at least 1".into()));
                        }
                        Graph::empty(k - 1)
                    }
                    (None, None) => {
                        return Err(Error::FamilySpec("join_equality needs `h` or `k`".into()))
                    }
                };
                FamilySpec::JoinEquality { h, m }
            }
            "gd" => FamilySpec::Gd { d: p.int("d")? },
            "g_delta_Delta" => FamilySpec::GDeltaDelta {
                min_degree: p.int("delta")?,
                max_degree: p.int("Delta")?,
            },
            "named_cubic" => {
                let name = p
                    .params
                    .remove("name")
                    .ok_or_else(|| Error::FamilySpec("named_cubic needs `name`".into()))?;
                FamilySpec::NamedCubic(name.parse()?)
            }
            "all_free_trees" => FamilySpec::AllFreeTrees { n: p.int("n")? },
            other => return Err(Error::FamilySpec(format!("unknown family `{other}`"))),
        };
        if let Some(key) = p.params.keys().next() {
            return Err(Error::FamilySpec(format!(
                "unexpected parameter `{key}` for {}",
                spec.name()
            )));
        }
        Ok(spec)
    }
}

struct Params<'a> {
    params: BTreeMap<&'a str, &'a str>,
    family: &'a str,
}

impl Params<'_> {
    fn int(&mut self, key: &str) -> Result<usize> {
        let v = self
            .params
            .remove(key)
            .ok_or_else(|| Error::FamilySpec(format!("{} needs parameter `{key}`", self.family)))?;
        parse_int(key, v)
    }
}

fn parse_int(key: &str, v: &str) -> Result<usize> {
    v.parse().map_err(|_| {
        Error::FamilySpec(format!(
            "parameter `{key}` = `{v}` is not a nonnegative integer"
        ))
    })
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilySpec::parse(s)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        match self {
            FamilySpec::Path { n } | FamilySpec::Cycle { n } | FamilySpec::Complete { n } => {
                write!(f, "{name}(n={n})")
            }
            FamilySpec::AllFreeTrees { n } => write!(f, "{name}(n={n})"),
            FamilySpec::Star { leaves } => write!(f, "{name}(leaves={leaves})"),
            FamilySpec::DoubleStar { a, b } => write!(f, "{name}(a={a},b={b})"),
            FamilySpec::CompleteBipartite { s, t } => write!(f, "{name}(s={s},t={t})"),
            FamilySpec::CocktailParty { r } => write!(f, "{name}(r={r})"),
            FamilySpec::JoinEquality { h, m } => {
                write!(f, "{name}(k={},m={m},h={})", h.order() + 1, emit_graph6(h))
            }
            FamilySpec::Gd { d } => write!(f, "{name}(d={d})"),
            FamilySpec::GDeltaDelta {
                min_degree,
                max_degree,
            } => {
                write!(f, "{name}(delta={min_degree},Delta={max_degree})")
            }
            FamilySpec::NamedCubic(c) => write!(f, "{name}(name={})", c.as_str()),
        }
    }
}
