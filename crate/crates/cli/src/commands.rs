use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use kcoal_core::checks::{graph_checks, CheckRecord};
use kcoal_core::families::{named_cubic, CubicName};
use kcoal_core::formulas::bound_reports;
use kcoal_core::witnesses::{
    complete_bipartite_witness, cubic_c3_bipartite_witness, g_delta_delta_witness, gd_witness,
    join_witness, min_degree_witness, total_complete_bipartite_witness,
};
use kcoal_core::{
    brute_force_oracle, emit_graph6, exact_coalition_number, parse_graph6, validate_partition,
    CoalitionCertificate, FamilySpec, Graph, Mode, SolveResult, VertexPartition,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::{load_graph, read_source};

/// One batch job: the graph record and its checks, or an error message.
type JobOutcome = std::result::Result<(Value, Vec<CheckRecord>), String>;
use crate::selfcheck::selfcheck;
use crate::{Command, ProblemArgs, Report};

pub(crate) fn dispatch(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Compute { problem, oracle } => compute(problem, *oracle),
        Command::Bounds { problem } => bounds(problem),
        Command::Verify { problem, partition } => verify(problem, partition),
        Command::Witness {
            construction,
            params,
            graph,
            k,
        } => witness(construction, params, graph.as_deref(), *k),
        Command::Generate { family, raw } => generate(family, *raw),
        Command::Batch {
            input,
            k,
            all_k,
            total,
            oracle,
        } => batch(input, k, *all_k, *total, *oracle),
        Command::Selfcheck { max_order } => selfcheck(*max_order),
    }
}

fn mode(total: bool) -> Mode {
    if total {
        Mode::Total
    } else {
        Mode::Plain
    }
}

fn solve(g: &Graph, k: usize, mode: Mode, oracle: bool) -> kcoal_core::Result<SolveResult> {
    if oracle {
        brute_force_oracle(g, k, mode)
    } else {
        exact_coalition_number(g, k, mode)
    }
}

fn applicable_bounds(g: &Graph, k: usize, mode: Mode) -> Value {
    json!(bound_reports(g, k, mode)
        .into_iter()
        .filter(|r| r.applicable)
        .collect::<Vec<_>>())
}

/// Value, certificate, bounds and checks for one (graph, k) pair.
fn graph_record(
    g: &Graph,
    k: usize,
    mode: Mode,
    result: &SolveResult,
) -> (Value, Vec<CheckRecord>) {
    let checks = graph_checks(g, k, mode, result);
    let failed = checks.iter().filter(|c| !c.passed).count();
    let record = json!({
        "graph6": emit_graph6(g),
        "order": g.order(),
        "size": g.size(),
        "k": k,
        "mode": mode,
        "value": result.value,
        "explored": result.explored,
        "certificate": result.witness,
        "bounds": applicable_bounds(g, k, mode),
        "checks": checks,
        "checks_failed": failed,
    });
    (record, checks)
}

fn compute(p: &ProblemArgs, oracle: bool) -> Result<Report> {
    let g = load_graph(&p.graph)?;
    let mode = mode(p.total);
    let result = solve(&g, p.k, mode, oracle)?;
    let (record, checks) = graph_record(&g, p.k, mode, &result);
    let failed = checks.iter().any(|c| !c.passed);
    Ok(Report {
        body: json!({ "results": [record] }),
        failed,
    })
}

fn bounds(p: &ProblemArgs) -> Result<Report> {
    let g = load_graph(&p.graph)?;
    Ok(Report::ok(json!({
        "graph6": emit_graph6(&g),
        "k": p.k,
        "mode": mode(p.total),
        "bounds": applicable_bounds(&g, p.k, mode(p.total)),
    })))
}

fn read_partition(order: usize, path: &str) -> Result<VertexPartition> {
    let text = read_source(path)?;
    let value: Value =
        serde_json::from_str(&text).with_context(|| format!("parsing `{path}` as JSON"))?;
    let blocks = match value {
        Value::Object(mut map) => map
            .remove("blocks")
            .ok_or_else(|| anyhow!("`{path}` has no `blocks` field"))?,
        other => other,
    };
    let blocks: Vec<Vec<usize>> = serde_json::from_value(blocks)
        .with_context(|| format!("`{path}` is not a list of vertex lists"))?;
    Ok(VertexPartition::new(order, blocks)?)
}

fn verify(p: &ProblemArgs, partition: &str) -> Result<Report> {
    let g = load_graph(&p.graph)?;
    let mode = mode(p.total);
    let base = json!({ "graph6": emit_graph6(&g), "k": p.k, "mode": mode });
    let outcome = read_partition(g.order(), partition)
        .map_err(|e| e.to_string())
        .and_then(|part| validate_partition(&g, &part, p.k, mode).map_err(|e| e.to_string()));
    let mut body = base;
    let map = body.as_object_mut().expect("object literal");
    let failed = match outcome {
        Ok(cert) => {
            map.insert("valid".into(), json!(true));
            map.insert("blocks".into(), json!(cert.size()));
            map.insert("certificate".into(), json!(cert));
            false
        }
        Err(reason) => {
            map.insert("valid".into(), json!(false));
            map.insert("reason".into(), json!(reason));
            true
        }
    };
    Ok(Report { body, failed })
}

struct Params(BTreeMap<String, String>);

impl Params {
    fn parse(text: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| anyhow!("parameter `{item}` is not key=value"))?;
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Params(map))
    }

    fn int(&self, key: &str) -> Result<usize> {
        let v = self
            .0
            .get(key)
            .ok_or_else(|| anyhow!("missing parameter `{key}`"))?;
        v.parse()
            .with_context(|| format!("parameter `{key}` = `{v}` is not a non-negative integer"))
    }

    fn int_or(&self, key: &str, fallback: Option<usize>) -> Result<usize> {
        match (self.0.contains_key(key), fallback) {
            (false, Some(v)) => Ok(v),
            _ => self.int(key),
        }
    }
}

fn witness(name: &str, params: &str, graph: Option<&str>, k: Option<usize>) -> Result<Report> {
    let p = Params::parse(params)?;
    let need_graph =
        || -> Result<Graph> { load_graph(graph.ok_or_else(|| anyhow!("`{name}` needs --graph"))?) };
    let (g, cert): (Graph, CoalitionCertificate) = match name {
        "min_degree" => {
            let g = need_graph()?;
            let k = p.int_or("k", k)?;
            let cert = min_degree_witness(&g, k)?;
            (g, cert)
        }
        "complete_bipartite" | "total_complete_bipartite" => {
            let (s, t, k) = (p.int("s")?, p.int("t")?, p.int_or("k", k)?);
            let cert = if name == "complete_bipartite" {
                complete_bipartite_witness(s, t, k)?
            } else {
                total_complete_bipartite_witness(s, t, k)?
            };
            (FamilySpec::CompleteBipartite { s, t }.generate()?, cert)
        }
        "gd" => {
            let d = p.int("d")?;
            (FamilySpec::Gd { d }.generate()?, gd_witness(d)?)
        }
        "g_delta_Delta" => {
            let (min_degree, max_degree) = (p.int("delta")?, p.int("Delta")?);
            let cert = g_delta_delta_witness(min_degree, max_degree)?;
            (
                FamilySpec::GDeltaDelta {
                    min_degree,
                    max_degree,
                }
                .generate()?,
                cert,
            )
        }
        "join" => {
            let k = p.int_or("k", k)?;
            let m = p.int("m")?;
            let h = match p.0.get("h") {
                Some(code) => parse_graph6(code)?,
                None if k >= 1 => Graph::empty(k - 1),
                None => bail!("join needs k >= 1"),
            };
            let cert = join_witness(&h, m, k)?;
            (FamilySpec::JoinEquality { h, m }.generate()?, cert)
        }
        "cubic_c3_bipartite" => {
            let g = match p.0.get("name") {
                Some(n) => named_cubic(n.parse::<CubicName>()?),
                None => need_graph()?,
            };
            let cert = cubic_c3_bipartite_witness(&g)?;
            (g, cert)
        }
        other => bail!("unknown construction `{other}`"),
    };
    Ok(Report::ok(json!({
        "construction": name,
        "params": p.0,
        "graph6": emit_graph6(&g),
        "order": g.order(),
        "size": cert.size(),
        "certificate": cert,
    })))
}

fn generate(family: &str, raw: bool) -> Result<Report> {
    let spec: FamilySpec = family.parse()?;
    let graphs = spec.generate_all()?;
    if raw {
        let lines: String = graphs.iter().map(|g| emit_graph6(g) + "\n").collect();
        return Ok(Report::ok(Value::String(lines)));
    }
    let graphs: Vec<Value> = graphs
        .iter()
        .map(|g| json!({ "graph6": emit_graph6(g), "order": g.order(), "size": g.size() }))
        .collect();
    Ok(Report::ok(
        json!({ "family": spec.to_string(), "graphs": graphs }),
    ))
}

enum Line {
    Graph(usize, Graph),
    Bad(usize, String, String),
}

fn batch(input: &str, ks: &[usize], all_k: bool, total: bool, oracle: bool) -> Result<Report> {
    let text = read_source(input)?;
    let lines: Vec<Line> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && *l != ">>graph6<<")
        .enumerate()
        .map(|(i, l)| match parse_graph6(l) {
            Ok(g) => Line::Graph(i, g),
            Err(e) => Line::Bad(i, l.to_string(), e.to_string()),
        })
        .collect();
    let mode = mode(total);
    let jobs: Vec<(usize, &Graph, usize)> = lines
        .iter()
        .filter_map(|l| match l {
            Line::Graph(i, g) => Some((*i, g)),
            Line::Bad(..) => None,
        })
        .flat_map(|(i, g)| {
            let ks: Vec<usize> = if all_k {
                (1..=g.order().max(1)).collect()
            } else {
                ks.to_vec()
            };
            ks.into_iter().map(move |k| (i, g, k))
        })
        .collect();

    // collect() on an indexed parallel iterator keeps input order
    let outcomes: Vec<(usize, JobOutcome)> = jobs
        .par_iter()
        .map(|&(i, g, k)| {
            let out = solve(g, k, mode, oracle)
                .map(|r| graph_record(g, k, mode, &r))
                .map_err(|e| format!("k = {k}: {e}"));
            (i, out)
        })
        .collect();

    let mut records = Vec::new();
    let mut failures = Vec::new();
    let mut errors = 0;
    let mut checks_run = 0;
    for l in &lines {
        if let Line::Bad(i, text, e) = l {
            errors += 1;
            records.push((*i, json!({ "index": i, "line": text, "error": e })));
        }
    }
    for (i, out) in outcomes {
        match out {
            Ok((mut record, checks)) => {
                checks_run += checks.len();
                for c in checks.iter().filter(|c| !c.passed) {
                    failures.push(json!({
                        "index": i,
                        "graph6": c.graph6,
                        "k": record["k"],
                        "check": c.name,
                        "detail": c.detail,
                    }));
                }
                record
                    .as_object_mut()
                    .expect("record object")
                    .insert("index".into(), json!(i));
                records.push((i, record));
            }
            Err(e) => {
                errors += 1;
                records.push((i, json!({ "index": i, "error": e })));
            }
        }
    }
    records.sort_by_key(|(i, _)| *i);
    let graphs = lines.len();
    let failed = errors > 0 || !failures.is_empty();
    Ok(Report {
        body: json!({
            "results": records.into_iter().map(|(_, r)| r).collect::<Vec<_>>(),
            "summary": {
                "graphs": graphs,
                "errors": errors,
                "checks_run": checks_run,
                "checks_failed": failures.len(),
                "failures": failures,
            },
        }),
        failed,
    })
}
