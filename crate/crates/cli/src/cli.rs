//! Command-line surface of the `mstci` binary.

use std::io::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use mstci_core::graph::write_graph;
use mstci_core::solver::DEFAULT_TREE_BUDGET;

use crate::commands::{self, GenKind};
use crate::error::CliError;
use crate::svg::render_svg;
use crate::sweep::{run_sweep, to_csv, Samples, SweepConfig};
use crate::verify::{l_hat, run_verify, VerifyMode, VerifyScope};

#[derive(Parser, Debug)]
#[command(
    name = "mstci",
    version,
    about = "Minimum spanning tree cycle intersection experiments"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// `a..b` (inclusive) or a single value.
pub fn parse_m_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| format!("expected an edge count or a range a..b, got {s:?}"))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {s:?}"));
            }
            Ok(a..=b)
        }
        None => {
            let a = num(s)?;
            Ok(a..=a)
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact intersection number of a graph file, with both bounds.
    Solve {
        #[arg(short, long)]
        input: PathBuf,
        /// Largest spanning tree count the exact search will take on.
        #[arg(long, default_value_t = DEFAULT_TREE_BUDGET)]
        budget: u64,
    },
    /// Check l_hat <= intersection number over a population of graphs.
    Verify {
        #[arg(short)]
        n: u64,
        #[arg(short, value_parser = parse_m_range)]
        m: Option<RangeInclusive<u64>>,
        #[arg(long, value_enum, default_value_t = VerifyMode::Sample)]
        mode: VerifyMode,
        /// Graphs to draw in sample mode (per m when -m is given).
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Worker threads; 0 uses every core.
        #[arg(long, env = "MSTCI_JOBS", default_value_t = 0)]
        jobs: usize,
        /// Also write the report here.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Mean and spread of l / intersection and l_hat / intersection per m.
    Sweep {
        #[arg(short)]
        n: u64,
        #[arg(short, value_parser = parse_m_range)]
        m: Option<RangeInclusive<u64>>,
        /// Graphs per m, or "all" for every labeled graph.
        #[arg(long, default_value = "1000")]
        samples: Samples,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, env = "MSTCI_JOBS", default_value_t = 0)]
        jobs: usize,
        /// CSV destination; standard output when absent.
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Write a generated graph in edge-list format.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(short)]
        n: Option<u64>,
        #[arg(short)]
        m: Option<u64>,
        #[arg(short)]
        k: Option<u64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The closed-form bounds for (n, m).
    Bounds {
        #[arg(short)]
        n: u64,
        #[arg(short)]
        m: u64,
    },
    /// Spanning tree count of a graph file, optionally listing every tree.
    Trees {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = DEFAULT_TREE_BUDGET)]
        budget: u64,
    },
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => commands::write_output(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|source| CliError::Io {
                    action: "write",
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

/// Runs one subcommand. `Ok(1)` means the run completed and found
/// violations.
pub fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Solve { input, budget } => {
            let g = commands::load_graph(&input)?;
            emit(None, &commands::solve_report(&g, budget)?)?;
        }
        Command::Verify {
            n,
            m,
            mode,
            samples,
            seed,
            jobs,
            out,
        } => {
            let scope = VerifyScope {
                n,
                m_range: m,
                mode,
                samples,
                seed,
            };
            let report = run_verify(&scope, jobs, l_hat)?;
            let text = report.render();
            emit(None, &text)?;
            if let Some(path) = out {
                commands::write_output(&path, &text)?;
            }
            if !report.holds() {
                return Ok(1);
            }
        }
        Command::Sweep {
            n,
            m,
            samples,
            seed,
            jobs,
            out,
            svg,
        } => {
            let m_range = m.unwrap_or(n.saturating_sub(1)..=n * n.saturating_sub(1) / 2);
            let cfg = SweepConfig {
                n,
                m_range,
                samples,
                seed,
            };
            let records = run_sweep(&cfg, jobs)?;
            emit(out.as_ref(), &to_csv(&records)?)?;
            if let Some(path) = svg {
                commands::write_output(&path, &render_svg(&records))?;
            }
        }
        Command::Gen {
            kind,
            n,
            m,
            k,
            seed,
            out,
        } => {
            let g = commands::generate(kind, n, m, k, seed)?;
            emit(out.as_ref(), &write_graph(&g))?;
        }
        Command::Bounds { n, m } => emit(None, &commands::bounds_report(n, m)?)?,
        Command::Trees {
            input,
            list,
            budget,
        } => {
            let g = commands::load_graph(&input)?;
            emit(None, &commands::trees_report(&g, list, budget)?)?;
        }
    }
    Ok(0)
}
