//! The `kcoal` command line: exact coalition numbers, bounds, partition
//! verification, named constructions, family generation, and batch
//! regression over graph6 catalogs.

mod commands;
pub mod input;
mod selfcheck;

use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "kcoal", version, about = "k-coalition numbers of small graphs")]
pub struct Cli {
    /// Include wall-clock time in the report instead of printing it to stderr.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct ProblemArgs {
    /// Graph source: a file (graph6 or edge list), `family:<spec>`, or
    /// `g6:<graph6>`.
    #[arg(long)]
    pub graph: String,
    #[arg(long)]
    pub k: usize,
    /// Total coalitions instead of plain ones.
    #[arg(long)]
    pub total: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact C_k (or TC_k) with an optimal certificate.
    Compute {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Use the plain enumeration oracle instead of the pruned solver.
        #[arg(long)]
        oracle: bool,
    },
    /// Every applicable closed form and bound.
    Bounds {
        #[command(flatten)]
        problem: ProblemArgs,
    },
    /// Check a partition file (JSON list of blocks) against a graph.
    Verify {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long)]
        partition: String,
    },
    /// Emit a named construction with its certificate.
    Witness {
        /// One of: min_degree, complete_bipartite, total_complete_bipartite,
        /// gd, g_delta_Delta, join, cubic_c3_bipartite.
        #[arg(long)]
        construction: String,
        /// Comma-separated key=value parameters.
        #[arg(long, default_value = "")]
        params: String,
        /// Input graph for min_degree and cubic_c3_bipartite.
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Emit a family graph.
    Generate {
        /// Family spec such as `cycle(n=6)` or `all_free_trees(n=7)`.
        #[arg(long)]
        family: String,
        /// Print bare graph6 lines instead of JSON.
        #[arg(long)]
        raw: bool,
    },
    /// Compute and cross-check every graph6 line of a catalog.
    Batch {
        /// Catalog path, or `-` for standard input.
        #[arg(long)]
        input: String,
        /// Values of k; repeatable.
        #[arg(long, required_unless_present = "all_k")]
        k: Vec<usize>,
        /// Use every k from 1 to n for each graph.
        #[arg(long, conflicts_with = "k")]
        all_k: bool,
        /// Total coalitions instead of plain ones.
        #[arg(long)]
        total: bool,
        /// Use the enumeration oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Oracle agreement and law checks over small catalogs.
    Selfcheck {
        /// Largest order of the connected-graph catalog (at most 7).
        #[arg(long, default_value_t = 6)]
        max_order: usize,
    },
}

/// Process outcome: exit status plus the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// What a subcommand produced; `failed` maps to exit status 2.
pub(crate) struct Report {
    pub body: Value,
    pub failed: bool,
}

impl Report {
    pub fn ok(body: Value) -> Self {
        Report {
            body,
            failed: false,
        }
    }
}

fn usage_error(msg: String) -> RunOutcome {
    RunOutcome {
        status: 1,
        stdout: String::new(),
        stderr: msg,
    }
}

/// Runs `kcoal` with `argv` (program name first).
pub fn run<I, T>(argv: I) -> RunOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if status == 0 {
                RunOutcome {
                    status,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                usage_error(text)
            };
        }
    };
    let echo: Vec<String> = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let started = Instant::now();
    let result = commands::dispatch(&cli.command);
    let elapsed = started.elapsed().as_secs_f64() * 1e3;
    match result {
        Err(e) => usage_error(format!("error: {e:#}\n")),
        Ok(report) => {
            if let (Command::Generate { raw: true, .. }, Some(lines)) =
                (&cli.command, report.body.as_str())
            {
                return RunOutcome {
                    status: 0,
                    stdout: lines.to_string(),
                    stderr: String::new(),
                };
            }
            let mut body = json!({ "schema_version": SCHEMA_VERSION, "command": echo });
            let map = body.as_object_mut().expect("object literal");
            if let Value::Object(fields) = report.body {
                map.extend(fields);
            }
            let mut stderr = String::new();
            if cli.timing {
                map.insert("timing_ms".into(), json!(elapsed));
            } else {
                stderr = format!("elapsed: {elapsed:.1} ms\n");
            }
            let mut stdout = serde_json::to_string_pretty(&body).expect("report serializes");
            stdout.push('\n');
            RunOutcome {
                status: if report.failed { 2 } else { 0 },
                stdout,
                stderr,
            }
        }
    }
}

/// Applies `KCOAL_THREADS` to the global worker pool, if set.
pub fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("KCOAL_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .map_err(|_| format!("KCOAL_THREADS must be a positive integer, got `{value}`"))?;
    if n == 0 {
        return Err("KCOAL_THREADS must be at least 1".into());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}
