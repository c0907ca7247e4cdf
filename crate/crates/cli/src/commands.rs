//! Text reports behind the `solve`, `bounds`, `gen` and `trees` subcommands.

use std::fmt::Write as _;
use std::path::Path;

use mstci_core::generators::{nu_regular_graph, random_connected_graph, regular_family_graph};
use mstci_core::graph::read_graph_file;
use mstci_core::solver::{count_spanning_trees, enumerate_spanning_trees};
use mstci_core::{solve_mstci_with, BoundsReport, Error, Graph, SolveOptions};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::CliError;

pub fn load_graph(path: &Path) -> Result<Graph, CliError> {
    read_graph_file(path)
        .map_err(|source| CliError::Io {
            action: "read",
            path: path.to_path_buf(),
            source,
        })?
        .map_err(Into::into)
}

pub fn write_output(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        action: "write",
        path: path.to_path_buf(),
        source,
    })
}

fn ratio(bound: &BigRational, value: u64) -> String {
    if value == 0 {
        return "undefined".into();
    }
    let r = bound / BigRational::from_integer(value.into());
    format!("{:.6}", r.to_f64().unwrap_or(f64::NAN))
}

/// `key: value` lines describing the optimum of `g`.
pub fn solve_report(g: &Graph, budget: u64) -> Result<String, CliError> {
    let opts = SolveOptions {
        tree_budget: budget,
        ..SolveOptions::default()
    };
    let s = solve_mstci_with(g, &opts)?;
    let b = BoundsReport::new(g.n() as u64, g.m() as u64)?;
    let tree: Vec<String> = s
        .best_tree
        .edges()
        .iter()
        .map(ToString::to_string)
        .collect();
    let l_hat = BigRational::from_integer(b.l_hat.into());
    let mut out = String::new();
    let _ = writeln!(out, "n: {}", b.n);
    let _ = writeln!(out, "m: {}", b.m);
    let _ = writeln!(out, "nu: {}", b.nu);
    let _ = writeln!(out, "intersection_number: {}", s.intersection_number);
    let _ = writeln!(out, "method: {}", s.method.as_str());
    let _ = writeln!(out, "trees_examined: {}", s.trees_examined);
    let _ = writeln!(out, "best_tree: {}", tree.join(" "));
    let _ = writeln!(out, "l: {}", b.l);
    let _ = writeln!(out, "l_clamped: {}", b.l_clamped());
    let _ = writeln!(out, "l_hat: {}", b.l_hat);
    let _ = writeln!(
        out,
        "l_ratio: {}",
        ratio(&b.l_clamped(), s.intersection_number)
    );
    let _ = writeln!(out, "l_hat_ratio: {}", ratio(&l_hat, s.intersection_number));
    Ok(out)
}

/// First line `nu=.. q=.. r=.. l=.. l_hat=..` with `l` exact, second line
/// its decimal value and the clamp at zero.
pub fn bounds_report(n: u64, m: u64) -> Result<String, CliError> {
    let b = BoundsReport::new(n, m)?;
    Ok(format!(
        "nu={} q={} r={} l={} l_hat={}\nl_decimal={:.6} l_clamped={}\n",
        b.nu,
        b.q,
        b.r,
        b.l,
        b.l_hat,
        b.l_f64(),
        b.l_clamped()
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GenKind {
    NuRegular,
    RegularFamily,
    Random,
}

pub fn generate(
    kind: GenKind,
    n: Option<u64>,
    m: Option<u64>,
    k: Option<u64>,
    seed: u64,
) -> Result<Graph, CliError> {
    let need = |x: Option<u64>, flag: &str| {
        x.ok_or_else(|| CliError::Usage(format!("{flag} is required for this generator")))
    };
    let g = match kind {
        GenKind::NuRegular => nu_regular_graph(need(n, "-n")?, need(m, "-m")?)?,
        GenKind::RegularFamily => regular_family_graph(need(k, "-k")?, need(n, "-n")?)?,
        GenKind::Random => random_connected_graph(need(n, "-n")?, m, seed)?,
    };
    Ok(g)
}

/// Spanning tree count, and with `list` every tree as an edge list.
pub fn trees_report(g: &Graph, list: bool, budget: u64) -> Result<String, CliError> {
    let count = count_spanning_trees(g)?;
    let mut out = format!("spanning_trees: {count}\n");
    if list {
        if count > BigUint::from(budget) {
            return Err(Error::BudgetExceeded {
                trees: count,
                budget,
            }
            .into());
        }
        for t in enumerate_spanning_trees(g)? {
            let edges: Vec<String> = t.edges().iter().map(ToString::to_string).collect();
            out.push_str(&edges.join(" "));
            out.push('\n');
        }
    }
    Ok(out)
}
