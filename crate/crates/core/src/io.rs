//! Text formats: graph6 and a plain `n m` edge list.

use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

/// Encodes `g` as a graph6 string (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn sextet(b: u8) -> Result<usize> {
    if (63..=126).contains(&b) {
        Ok((b - 63) as usize)
    } else {
        Err(Error::Graph6(format!(
            "byte {b:#04x} outside the printable range 63..=126"
        )))
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    let read = |range: std::ops::Range<usize>| -> Result<usize> {
        if bytes.len() < range.end {
            return Err(Error::Graph6("truncated length prefix".into()));
        }
        bytes[range]
            .iter()
            .try_fold(0usize, |acc, &b| Ok((acc << 6) | sextet(b)?))
    };
    let (n, body) = if bytes[0] != 126 {
        (sextet(bytes[0])?, 1)
    } else if bytes.len() > 1 && bytes[1] == 126 {
        let n = read(2..8)?;
        if n < 258_048 {
            return Err(Error::Graph6(format!(
                "non-minimal 8-byte length prefix for n = {n}"
            )));
        }
        (n, 8)
    } else {
        let n = read(1..4)?;
        if n < 63 {
            return Err(Error::Graph6(format!(
                "non-minimal 4-byte length prefix for n = {n}"
            )));
        }
        (n, 4)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[body..];
    if data.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            data.len()
        )));
    }
    let mut words = Vec::with_capacity(data.len());
    for &b in data {
        words.push(sextet(b)?);
    }
    let pad = expected * 6 - bits;
    if let Some(&last) = words.last() {
        if pad > 0 && last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    let bit = |idx: usize| (words[idx / 6] >> (5 - idx % 6)) & 1 == 1;
    // column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Parses every non-empty graph6 line in `text`, skipping a header-only line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && *l != GRAPH6_HEADER)
        .map(parse_graph6)
        .collect()
}

/// Edge-list text: a first line `n m`, then `m` lines `u v` (0-based).
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::EdgeList("missing `n m` header".into()))?;
    let (n, m) = parse_pair(header)?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        edges.push(parse_pair(line)?);
    }
    if edges.len() != m {
        return Err(Error::EdgeList(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|e| Error::EdgeList(format!("`{t}`: {e}")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::EdgeList(format!(
            "expected two integers, got `{line}`"
        ))),
    }
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads a single graph from text in either supported format. Text whose
/// first meaningful line is two integers is an edge list; anything else is
/// graph6 (first line).
pub fn parse_graph_auto(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && *l != GRAPH6_HEADER)
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if parse_pair(first).is_ok() {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                e.push((i, j));
            }
        }
        Graph::from_edge_list(n, &e).unwrap()
    }

    #[test]
    fn decode_known_strings() {
        assert_eq!(parse_graph6("C~").unwrap(), complete(4));
        assert_eq!(parse_graph6("A_").unwrap(), complete(2));
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), complete(4));
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
    }

    #[test]
    fn round_trip_identity() {
        let g = parse_graph6("Cr").unwrap();
        assert_eq!(emit_graph6(&g), "Cr");
        assert_eq!(emit_graph6(&complete(4)), "C~");
    }

    #[test]
    fn matches_reference_encoding() {
        // a-c, a-e, b-d, d-e on 5 vertices
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
    }

    #[test]
    fn long_length_prefixes() {
        let n = 100;
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        let s = emit_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 99]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_graph6("C"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("C~~"), Err(Error::Graph6(_))));
        // n = 2 needs one bit; `@` + 63 = 0b000001 has a padding bit set
        assert!(matches!(parse_graph6("A@"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("~?"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("A "), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
    }

    #[test]
    fn edge_list_round_trip_and_sniffing() {
        let g = parse_graph6("Cr").unwrap();
        let text = emit_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert_eq!(parse_graph_auto(&text).unwrap(), g);
        assert_eq!(parse_graph_auto(">>graph6<<\nCr\n").unwrap(), g);
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 0\n").is_err());
    }
}
