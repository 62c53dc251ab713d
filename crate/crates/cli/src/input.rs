use std::fs;
use std::io::Read;

use anyhow::{bail, Context, Result};
use kcoal_core::io::parse_graph_auto;
use kcoal_core::{parse_graph6, FamilySpec, Graph};

/// Resolves a `--graph` argument: `family:<spec>`, `g6:<graph6>`, or a file
/// path whose contents are sniffed as graph6 or edge list.
pub fn load_graph(arg: &str) -> Result<Graph> {
    if let Some(spec) = arg.strip_prefix("family:") {
        let spec: FamilySpec = spec.parse()?;
        return Ok(spec.generate()?);
    }
    if let Some(code) = arg.strip_prefix("g6:") {
        return Ok(parse_graph6(code)?);
    }
    let text = read_source(arg)?;
    let graphs = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#') && *l != ">>graph6<<")
        .count();
    let g = parse_graph_auto(&text).with_context(|| format!("reading graph from `{arg}`"))?;
    if graphs > 1 && !looks_like_edge_list(&text) {
        bail!("`{arg}` holds {graphs} graph6 lines; use `batch` for catalogs");
    }
    Ok(g)
}

fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| {
            let parts: Vec<&str> = l.split_whitespace().collect();
            parts.len() == 2 && parts.iter().all(|p| p.parse::<usize>().is_ok())
        })
}

/// File contents, or standard input for `-`.
pub fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading `{path}`"))
    }
}
