//! Command-line front end. Every subcommand prints JSON (one line per
//! object, or indented with `--pretty`), except `construct` and `enumerate`
//! which print graphs.
//!
//! Exit codes: 0 success, 1 failed verification or violated property,
//! 2 usage error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::cliques::{clique_profile, count_kt};
use crate::colex::{colex_decompose, colex_kt, kk_bound_real};
use crate::extremal::{
    build_extremal, decompose, extremal_value, is_extremal, is_total_extremal, total_extremal_value,
};
use crate::graph::{parse_graph, to_edge_list, to_graph6, Graph};
use crate::props::run_props;
use crate::search::{
    verify_kk_on, verify_main_on, verify_total_on, Corpus, EnumerationSpec, SearchConfig,
    DEFAULT_MAX_EDGES,
};

/// Environment variable that sets the enumeration cap when `--max-edges` is
/// absent.
pub const MAX_EDGES_ENV: &str = "EXTREMAL_MAX_EDGES";

#[derive(Debug, Parser)]
#[command(
    name = "kt-extremal",
    version,
    about = "Maximum clique counts under edge and degree bounds"
)]
pub struct Invocation {
    /// Indented JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Edges,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the edge decomposition and the extremal value.
    Value {
        #[arg(long, required_unless_present = "total")]
        t: Option<u64>,
        #[arg(long)]
        delta: u64,
        #[arg(long)]
        edges: u64,
        /// Total clique count instead of K_t count.
        #[arg(long)]
        total: bool,
    },
    /// Print the extremal construction.
    Construct {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        delta: u64,
        #[arg(long)]
        edges: u64,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
    },
    /// Count cliques in a graph read from a file or standard input.
    Count {
        #[arg(long, conflicts_with = "all")]
        t: Option<usize>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Decide whether the input graph is extremal.
    Check {
        #[arg(long, required_unless_present = "total")]
        t: Option<u64>,
        #[arg(long)]
        delta: u64,
        #[arg(long)]
        total: bool,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Compare the formulas against exhaustive enumeration.
    Verify {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        delta: u64,
        #[arg(long)]
        edges: u64,
        #[arg(long)]
        max_edges: Option<u64>,
        /// Also verify the total clique count variant.
        #[arg(long)]
        kr1: bool,
        /// Also verify the colex bound over all graphs.
        #[arg(long)]
        kk: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Colex clique count and its real-valued bound.
    Kk {
        #[arg(long)]
        edges: u64,
        #[arg(long)]
        t: u64,
    },
    /// Run the binomial inequality grids.
    Props {
        #[arg(long, default_value_t = 1)]
        grid_scale: u32,
    },
    /// Print one graph6 line per isomorphism class.
    Enumerate {
        #[arg(long)]
        edges: u64,
        #[arg(long)]
        delta: Option<u64>,
        #[arg(long)]
        max_edges: Option<u64>,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

const EXIT_OK: i32 = 0;
const EXIT_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Usage {
    Usage(msg.into())
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    pretty: bool,
}

impl Io<'_> {
    fn emit<T: Serialize>(&mut self, value: &T) -> Result<(), Usage> {
        let text = if self.pretty {
            serde_json::to_string_pretty(value)?
        } else {
            serde_json::to_string(value)?
        };
        writeln!(self.out, "{text}")?;
        Ok(())
    }

    fn read_graph(&mut self, input: &Option<PathBuf>) -> Result<Graph, Usage> {
        let text = match input {
            Some(path) => std::fs::read_to_string(path)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?,
            None => {
                let mut buf = String::new();
                self.stdin.read_to_string(&mut buf)?;
                buf
            }
        };
        Ok(parse_graph(&text)?)
    }
}

fn check_delta(delta: u64) -> Result<(), Usage> {
    if delta == 0 {
        return Err(usage("--delta must be at least 1"));
    }
    Ok(())
}

fn check_order(t: u64) -> Result<(), Usage> {
    if t < 3 {
        return Err(usage("--t must be at least 3"));
    }
    Ok(())
}

fn edge_cap(flag: Option<u64>) -> Result<u64, Usage> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(MAX_EDGES_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            usage(format!(
                "{MAX_EDGES_ENV}={v:?} is not a non-negative integer"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_EDGES),
    }
}

fn search_config(edges: u64, cap: Option<u64>, jobs: Option<usize>) -> Result<SearchConfig, Usage> {
    let max_edges = edge_cap(cap)?;
    if edges > max_edges {
        return Err(usage(format!(
            "--edges {edges} exceeds the enumeration cap {max_edges} (raise with --max-edges or {MAX_EDGES_ENV})"
        )));
    }
    let mut config = SearchConfig {
        max_edges,
        ..SearchConfig::default()
    };
    if let Some(j) = jobs {
        if j == 0 {
            return Err(usage("--jobs must be at least 1"));
        }
        config.jobs = j;
    }
    Ok(config)
}

fn dispatch(cmd: Command, io: &mut Io<'_>) -> Result<i32, Usage> {
    match cmd {
        Command::Value {
            t,
            delta,
            edges,
            total,
        } => {
            check_delta(delta)?;
            let d = decompose(edges, delta);
            if total {
                let value = total_extremal_value(delta, edges);
                io.emit(&json!({
                    "m": edges, "delta": delta, "total": true,
                    "q": d.q, "b": d.b, "r": d.r, "s": d.s, "value": value,
                }))?;
            } else {
                let t = t.expect("clap requires --t without --total");
                check_order(t)?;
                let value = extremal_value(t, delta, edges);
                io.emit(&json!({
                    "m": edges, "delta": delta, "t": t,
                    "q": d.q, "b": d.b, "r": d.r, "s": d.s, "value": value,
                }))?;
            }
            Ok(EXIT_OK)
        }
        Command::Construct {
            t,
            delta,
            edges,
            format,
        } => {
            check_delta(delta)?;
            check_order(t)?;
            let g = build_extremal(t, delta, edges)?;
            match format {
                GraphFormat::Graph6 => writeln!(io.out, "{}", to_graph6(&g))?,
                GraphFormat::Edges => write!(io.out, "{}", to_edge_list(&g))?,
            }
            Ok(EXIT_OK)
        }
        Command::Count { t, all: _, input } => {
            let g = io.read_graph(&input)?;
            let profile = clique_profile(&g);
            let counts = match t {
                Some(t) if t < 2 => return Err(usage("--t must be at least 2")),
                Some(t) => json!({ t.to_string(): count_kt(&g, t) }),
                None => serde_json::to_value(&profile.counts)?,
            };
            io.emit(&json!({ "m": g.edge_count(), "counts": counts, "total": profile.total }))?;
            Ok(EXIT_OK)
        }
        Command::Check {
            t,
            delta,
            total,
            input,
        } => {
            check_delta(delta)?;
            let g = io.read_graph(&input)?;
            let verdict = if total {
                is_total_extremal(&g, delta)?
            } else {
                let t = t.expect("clap requires --t without --total");
                check_order(t)?;
                is_extremal(&g, t, delta)?
            };
            io.emit(&verdict)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            t,
            delta,
            edges,
            max_edges,
            kr1,
            kk,
            jobs,
        } => {
            check_delta(delta)?;
            check_order(t)?;
            let config = search_config(edges, max_edges, jobs)?;
            let mut reports = Vec::new();
            let corpus =
                Corpus::build(edges, Some(delta), &config).map_err(|e| usage(e.to_string()))?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(config.jobs)
                .build()?;
            let start = std::time::Instant::now();
            let mut main = pool.install(|| verify_main_on(&corpus, edges, t))?;
            main.elapsed = start.elapsed();
            reports.push(main);
            if kr1 {
                reports.push(pool.install(|| verify_total_on(&corpus, edges))?);
            }
            if kk {
                let start = std::time::Instant::now();
                let free = Corpus::build(edges, None, &config)?;
                let mut r = pool.install(|| verify_kk_on(&free, edges, t))?;
                r.elapsed = start.elapsed();
                reports.push(r);
            }
            for r in &reports {
                io.emit(r)?;
            }
            Ok(if reports.iter().all(|r| r.passed()) {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
        Command::Kk { edges, t } => {
            check_order(t)?;
            let d = colex_decompose(edges);
            io.emit(&json!({
                "m": edges, "t": t, "r": d.r, "s": d.s,
                "colex_kt": colex_kt(edges, t),
                "kk_bound_real": kk_bound_real(edges, t as u32),
            }))?;
            Ok(EXIT_OK)
        }
        Command::Props { grid_scale } => {
            if grid_scale == 0 {
                return Err(usage("--grid-scale must be at least 1"));
            }
            let report = run_props(grid_scale);
            io.emit(&report)?;
            Ok(if report.passed { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Enumerate {
            edges,
            delta,
            max_edges,
            jobs,
        } => {
            if delta == Some(0) {
                return Err(usage("--delta must be at least 1"));
            }
            let config = search_config(edges, max_edges, jobs)?;
            let spec = EnumerationSpec {
                m: edges,
                max_degree: delta,
            };
            let corpus = Corpus::build(spec.m, spec.max_degree, &config)?;
            for entry in corpus.level(edges)? {
                writeln!(io.out, "{}", entry.certificate)?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name) and runs one subcommand.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let inv = match Invocation::try_parse_from(args) {
        Ok(inv) => inv,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut io = Io {
        stdin,
        out,
        pretty: inv.pretty,
    };
    match dispatch(inv.command, &mut io) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
