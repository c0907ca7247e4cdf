//! Per-`m` comparison of the two lower bounds against the exact optimum.
//!
//! For every graph the ratios `max(l, 0) / ∩(G)` and `l̂ / ∩(G)` are formed
//! exactly and then aggregated per edge count as a mean and a population
//! standard deviation. Graphs with `∩(G) = 0` have no ratio; they are
//! counted in their own column.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use mstci_core::bounds::lower_bound_l;
use mstci_core::generators::{
    derive_seed, enumerate_connected_graphs, random_connected_graph, EnumerationMode,
};
use mstci_core::graph::write_graph;
use mstci_core::{solve_mstci, BoundsReport, Graph};
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::CliError;
use crate::pool;

pub const CSV_HEADER: &str = "n,m,samples,excluded_zero_intersection,mean_l_ratio,std_l_ratio,mean_lhat_ratio,std_lhat_ratio";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Samples {
    Count(u64),
    /// Every labeled connected graph with the given `m`.
    All,
}

impl std::str::FromStr for Samples {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            return Ok(Samples::All);
        }
        s.parse()
            .map(Samples::Count)
            .map_err(|_| format!("expected a sample count or \"all\", got {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub n: u64,
    pub m_range: RangeInclusive<u64>,
    pub samples: Samples,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stat {
    pub mean: f64,
    pub std: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub n: u64,
    pub m: u64,
    pub sample_count: u64,
    pub excluded_zero_intersection: u64,
    /// `None` when every graph in the row was excluded.
    pub l_ratio: Option<Stat>,
    pub lhat_ratio: Option<Stat>,
}

fn stat(xs: &[f64]) -> Option<Stat> {
    if xs.is_empty() {
        return None;
    }
    let k = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / k;
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / k;
    Some(Stat {
        mean,
        std: var.sqrt(),
    })
}

struct Measured {
    value: u64,
    l_ratio: f64,
    lhat_ratio: f64,
}

fn measure(g: &Graph) -> Result<Measured, CliError> {
    let value = solve_mstci(g)?.intersection_number;
    let b = BoundsReport::new(g.n() as u64, g.m() as u64)?;
    if b.l_hat > value {
        return Err(CliError::Counterexample(format!(
            "l_hat = {} exceeds the intersection number {value} of\n{}",
            b.l_hat,
            write_graph(g)
        )));
    }
    let (l_ratio, lhat_ratio) = if value == 0 {
        (f64::NAN, f64::NAN)
    } else {
        let v = num_rational::BigRational::from_integer(value.into());
        let l = (b.l_clamped() / &v).to_f64().unwrap_or(f64::NAN);
        (l, b.l_hat as f64 / value as f64)
    };
    Ok(Measured {
        value,
        l_ratio,
        lhat_ratio,
    })
}

fn population(cfg: &SweepConfig, m: u64) -> Result<Vec<Graph>, CliError> {
    match cfg.samples {
        Samples::All => Ok(enumerate_connected_graphs(
            cfg.n as usize,
            EnumerationMode::Labeled,
            Some(m as usize..=m as usize),
        )?
        .collect()),
        Samples::Count(k) => {
            let master = derive_seed(cfg.seed, m);
            (0..k)
                .map(|i| {
                    random_connected_graph(cfg.n, Some(m), derive_seed(master, i))
                        .map_err(Into::into)
                })
                .collect()
        }
    }
}

pub fn run_sweep(cfg: &SweepConfig, jobs: usize) -> Result<Vec<SweepRecord>, CliError> {
    let n = cfg.n;
    let max_m = n * n.saturating_sub(1) / 2;
    if n < 2 || *cfg.m_range.start() + 1 < n || *cfg.m_range.end() > max_m {
        return Err(CliError::Usage(format!(
            "m range {}..{} is outside {}..{max_m} for n = {n}",
            cfg.m_range.start(),
            cfg.m_range.end(),
            n.saturating_sub(1)
        )));
    }
    lower_bound_l(n, *cfg.m_range.start())?;
    let pool = pool(jobs)?;
    let mut records = Vec::new();
    for m in cfg.m_range.clone() {
        let graphs = population(cfg, m)?;
        let measured: Vec<Measured> =
            pool.install(|| graphs.par_iter().map(measure).collect::<Result<_, _>>())?;
        let kept: Vec<&Measured> = measured.iter().filter(|x| x.value > 0).collect();
        let l: Vec<f64> = kept.iter().map(|x| x.l_ratio).collect();
        let lh: Vec<f64> = kept.iter().map(|x| x.lhat_ratio).collect();
        records.push(SweepRecord {
            n,
            m,
            sample_count: graphs.len() as u64,
            excluded_zero_intersection: (measured.len() - kept.len()) as u64,
            l_ratio: stat(&l),
            lhat_ratio: stat(&lh),
        });
    }
    Ok(records)
}

/// Tolerance for the row invariants, which compare rounded means of
/// ratios that are exact per graph.
const SLACK: f64 = 1e-9;

fn check_record(r: &SweepRecord) -> Result<(), CliError> {
    if let (Some(l), Some(lh)) = (r.l_ratio, r.lhat_ratio) {
        if !(-SLACK..=1.0 + SLACK).contains(&lh.mean) || l.mean > lh.mean + SLACK {
            return Err(CliError::Counterexample(format!(
                "row invariant failed at n={} m={}: mean_l_ratio={} mean_lhat_ratio={}",
                r.n, r.m, l.mean, lh.mean
            )));
        }
    }
    Ok(())
}

/// CSV text for `records`, checking the row invariants first.
pub fn to_csv(records: &[SweepRecord]) -> Result<String, CliError> {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    let cell = |s: Option<Stat>, pick: fn(Stat) -> f64| match s {
        Some(s) => format!("{:.6}", pick(s)),
        None => String::new(),
    };
    for r in records {
        check_record(r)?;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.n,
            r.m,
            r.sample_count,
            r.excluded_zero_intersection,
            cell(r.l_ratio, |s| s.mean),
            cell(r.l_ratio, |s| s.std),
            cell(r.lhat_ratio, |s| s.mean),
            cell(r.lhat_ratio, |s| s.std),
        );
    }
    Ok(out)
}
