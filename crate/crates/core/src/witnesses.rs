//! Explicit coalition partitions that realize the closed-form values and
//! the sharpness of the bounds. Every constructor validates its output;
//! free choices resolve to the least vertex index.

use crate::domination::{validate_partition, CoalitionCertificate, Mode, VertexPartition};
use crate::error::{Error, Result};
use crate::families::{
    complete_bipartite, g_delta_delta, g_delta_delta_layout, gd, gd_vertex_map, join_equality,
    GdVertex,
};
use crate::formulas::{complete_bipartite_value, total_complete_bipartite_value};
use crate::graph::Graph;

/// Largest order for which the two-block search is attempted.
const SPLIT_SEARCH_CAP: usize = 20;

fn certify(
    what: &str,
    g: &Graph,
    blocks: Vec<Vec<usize>>,
    k: usize,
    mode: Mode,
    expected: usize,
) -> Result<CoalitionCertificate> {
    let partition = VertexPartition::new(g.order(), blocks)?;
    let cert = validate_partition(g, &partition, k, mode)
        .map_err(|e| Error::Construction(format!("{what}: {e}")))?;
    if cert.size() != expected {
        return Err(Error::Construction(format!(
            "{what}: {} blocks, expected {expected}",
            cert.size()
        )));
    }
    Ok(cert)
}

/// {v}, {v_1}, ..., {v_{δ-k+1}}, and the rest, where v is the first vertex
/// of minimum degree and v_i its neighbours in ascending order.
pub fn min_degree_witness(g: &Graph, k: usize) -> Result<CoalitionCertificate> {
    let delta = g.min_degree();
    if k < 2 || g.order() < 2 {
        return Err(Error::InvalidParameter(format!(
            "needs k >= 2 and n >= 2, got k = {k}, n = {}",
            g.order()
        )));
    }
    if delta < k {
        return Err(Error::InvalidParameter(format!(
            "minimum degree {delta} is below k = {k}"
        )));
    }
    let v = g
        .vertices()
        .find(|&v| g.degree(v) == delta)
        .expect("n >= 2");
    let picked = &g.neighbors(v)[..delta - k + 1];
    let mut blocks = vec![vec![v]];
    blocks.extend(picked.iter().map(|&u| vec![u]));
    let rest: Vec<usize> = g
        .vertices()
        .filter(|&u| u != v && !picked.contains(&u))
        .collect();
    blocks.push(rest);
    certify(
        "min-degree partition",
        g,
        blocks,
        k,
        Mode::Plain,
        delta - k + 3,
    )
}

/// Blocks for K_{s,t} with X = 0..s and Y = s..s+t: A' = x_1..x_k plus
/// y_1..y_{k-1}, B' = x_{k+1}..x_{2k-1} plus y_k..y_{2k-1}, and singletons.
fn a_b_prime_blocks(s: usize, t: usize, k: usize) -> Vec<Vec<usize>> {
    let y = |j: usize| s + j;
    let mut a: Vec<usize> = (0..k).collect();
    a.extend((0..k - 1).map(y));
    let mut b: Vec<usize> = (k..2 * k - 1).collect();
    b.extend((k - 1..2 * k - 1).map(y));
    let mut blocks = vec![a, b];
    blocks.extend((2 * k - 1..s).map(|x| vec![x]));
    blocks.extend((2 * k - 1..t).map(|j| vec![y(j)]));
    blocks
}

/// First two-block split {A, V \ A} (A containing vertex 0, in increasing
/// bitmask order) that validates.
fn two_block_split(g: &Graph, k: usize, mode: Mode) -> Result<Option<CoalitionCertificate>> {
    let n = g.order();
    if n > SPLIT_SEARCH_CAP {
        return Err(Error::SizeCap {
            n,
            cap: SPLIT_SEARCH_CAP,
        });
    }
    for mask in 0u64..(1u64 << (n - 1)) {
        let a: Vec<usize> = std::iter::once(0)
            .chain((1..n).filter(|&v| mask >> (v - 1) & 1 == 1))
            .collect();
        let b: Vec<usize> = (1..n).filter(|&v| mask >> (v - 1) & 1 == 0).collect();
        if b.is_empty() {
            continue;
        }
        let p = VertexPartition::new(n, vec![a, b])?;
        if let Ok(cert) = validate_partition(g, &p, k, mode) {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

fn bipartite_sides(s: usize, t: usize) -> Result<()> {
    if s == 0 || s > t {
        return Err(Error::InvalidParameter(format!(
            "needs t >= s >= 1, got s = {s}, t = {t}"
        )));
    }
    Ok(())
}

/// A maximum k-coalition partition of K_{s,t} (t >= s >= 1, k >= 2), over
/// the labelling of [`complete_bipartite`].
pub fn complete_bipartite_witness(s: usize, t: usize, k: usize) -> Result<CoalitionCertificate> {
    bipartite_sides(s, t)?;
    let expected = complete_bipartite_value(s, t, k)?;
    let g = complete_bipartite(s, t)?;
    let y = |j: usize| s + j;
    if s < k {
        return two_block_split(&g, k, Mode::Plain)?.ok_or_else(|| {
            Error::Construction(format!(
                "K_{{{s},{t}}} has no two-block {k}-coalition partition"
            ))
        });
    }
    let blocks = if s == k {
        vec![
            vec![s - 1],
            (0..s - 1).collect(),
            vec![y(t - 1)],
            (0..t - 1).map(y).collect(),
        ]
    } else {
        let mut first: Vec<Vec<usize>> = {
            let mut a: Vec<usize> = (0..k).collect();
            a.extend((0..k - 1).map(y));
            vec![a, (k..s).collect()]
        };
        first.extend((k - 1..t).map(|j| vec![y(j)]));
        if s >= 2 * k - 1 && s + t + 4 > 4 * k && s + t + 4 - 4 * k > first.len() {
            a_b_prime_blocks(s, t, k)
        } else {
            first
        }
    };
    certify(
        &format!("K_{{{s},{t}}} partition"),
        &g,
        blocks,
        k,
        Mode::Plain,
        expected,
    )
}

/// A maximum total k-coalition partition of K_{s,t}, t >= s >= k.
pub fn total_complete_bipartite_witness(
    s: usize,
    t: usize,
    k: usize,
) -> Result<CoalitionCertificate> {
    bipartite_sides(s, t)?;
    let expected = total_complete_bipartite_value(s, t, k)?;
    let g = complete_bipartite(s, t)?;
    let blocks = if s >= 2 * k - 1 && s + t + 4 - 4 * k > t + 2 - k {
        a_b_prime_blocks(s, t, k)
    } else {
        let mut a: Vec<usize> = (0..s).collect();
        a.extend((0..k - 1).map(|j| s + j));
        let mut blocks = vec![a];
        blocks.extend((k - 1..t).map(|j| vec![s + j]));
        blocks
    };
    certify(
        &format!("total K_{{{s},{t}}} partition"),
        &g,
        blocks,
        k,
        Mode::Total,
        expected,
    )
}

/// The 2d-block 2-coalition partition of G(d): V_1, {x_2..x_d},
/// V_{d+1}, {y_2..y_d}.
pub fn gd_witness(d: usize) -> Result<CoalitionCertificate> {
    let map = gd_vertex_map(d)?;
    let g = gd(d)?;
    let mut low = Vec::new();
    let mut high = Vec::new();
    for (v, label) in map.entries() {
        match v {
            GdVertex::A { j, .. } | GdVertex::B { j, .. } | GdVertex::C { j, .. } => {
                if j <= 2 {
                    low.push(label)
                } else {
                    high.push(label)
                }
            }
            GdVertex::XLeaf(1) | GdVertex::Y => low.push(label),
            GdVertex::YLeaf(1) | GdVertex::X => high.push(label),
            _ => {}
        }
    }
    let mut blocks = vec![low];
    blocks.extend((2..=d).map(|i| vec![map.at(GdVertex::XLeaf(i))]));
    blocks.push(high);
    blocks.extend((2..=d).map(|i| vec![map.at(GdVertex::YLeaf(i))]));
    certify(
        &format!("G({d}) partition"),
        &g,
        blocks,
        2,
        Mode::Plain,
        2 * d,
    )
}

/// The 2-coalition partition of G(δ, Δ) with r(Δ - 2r + 3) + r blocks,
/// r = δ/2 + 1.
pub fn g_delta_delta_witness(min_degree: usize, max_degree: usize) -> Result<CoalitionCertificate> {
    let lay = g_delta_delta_layout(min_degree, max_degree)?;
    let g = g_delta_delta(min_degree, max_degree)?;
    let r = lay.r;
    let mut big: Vec<Vec<usize>> = (0..r).map(|m| vec![lay.centre(m)]).collect();
    let mut singles = Vec::new();
    for i in 0..r {
        for j in 0..max_degree {
            for c in 0..2 {
                for (m, block) in big.iter_mut().enumerate() {
                    block.push(lay.copy_vertex(i, j, c, m));
                    block.push(lay.copy_vertex(i, j, c, r + m));
                }
            }
        }
        let next = (i + 1) % r;
        let mut leaves = (0..max_degree).map(|j| lay.leaf(i, j));
        big[next].push(leaves.next().expect("Δ >= 1"));
        for m in (0..r).filter(|&m| m != i && m != next) {
            big[m].extend(leaves.by_ref().take(2));
        }
        singles.extend(leaves.map(|q| vec![q]));
    }
    let expected = r * (max_degree + 3 - 2 * r) + r;
    big.extend(singles);
    certify(
        &format!("G({min_degree}, {max_degree}) partition"),
        &g,
        big,
        2,
        Mode::Plain,
        expected,
    )
}

/// {V(H)} plus one singleton per clique vertex of H ∨ K_m, where
/// |V(H)| = k - 1.
pub fn join_witness(h: &Graph, m: usize, k: usize) -> Result<CoalitionCertificate> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "join partition needs k >= 3, got {k}"
        )));
    }
    if h.order() + 1 != k {
        return Err(Error::InvalidParameter(format!(
            "H has order {} but k - 1 = {}",
            h.order(),
            k - 1
        )));
    }
    let g = join_equality(h, m)?;
    let mut blocks = vec![h.vertices().collect::<Vec<_>>()];
    blocks.extend((h.order()..g.order()).map(|v| vec![v]));
    certify("join partition", &g, blocks, k, Mode::Plain, m + 1)
}

/// {a}, A \ {a}, {b}, B \ {b} for a cubic bipartite graph with sides A, B;
/// A is the side of vertex 0, a and b the least vertex of each side.
pub fn cubic_c3_bipartite_witness(g: &Graph) -> Result<CoalitionCertificate> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    let bip = g.is_bipartite().ok_or(Error::NotBipartite)?;
    let (a, b) = if bip.side_x.contains(&0) {
        (bip.side_x, bip.side_y)
    } else {
        (bip.side_y, bip.side_x)
    };
    let (amin, bmin) = (*a.iter().min().unwrap(), *b.iter().min().unwrap());
    let blocks = vec![
        vec![amin],
        a.iter().copied().filter(|&v| v != amin).collect(),
        vec![bmin],
        b.iter().copied().filter(|&v| v != bmin).collect(),
    ];
    certify("cubic bipartite partition", g, blocks, 3, Mode::Plain, 4)
}
