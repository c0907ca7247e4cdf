//! Checking `l̂ ≤ ∩(G)` over exhaustive or sampled graph populations.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use mstci_core::generators::{
    derive_seed, enumerate_connected_graphs, is_nu_regular, random_connected_graph, EnumerationMode,
};
use mstci_core::graph::{universal_vertices, write_graph};
use mstci_core::{lower_bound_l_hat, solve_mstci_with, Graph, SolveOptions};
use rayon::prelude::*;

use crate::error::CliError;
use crate::pool;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum VerifyMode {
    ExhaustiveLabeled,
    ExhaustiveCanonical,
    Sample,
}

impl VerifyMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            VerifyMode::ExhaustiveLabeled => "exhaustive-labeled",
            VerifyMode::ExhaustiveCanonical => "exhaustive-canonical",
            VerifyMode::Sample => "sample",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyScope {
    pub n: u64,
    /// Restricts exhaustive modes to these edge counts. In sample mode each
    /// `m` in the range gets `samples` graphs of its own; without a range
    /// the samples are free-`m` uniform connected graphs.
    pub m_range: Option<RangeInclusive<u64>>,
    pub mode: VerifyMode,
    pub samples: u64,
    pub seed: u64,
}

/// The bound under test. [`l_hat`] in production; tests swap in corrupted
/// variants to confirm that violations are caught.
pub type BoundFn = fn(u64, u64) -> u64;

pub fn l_hat(n: u64, m: u64) -> u64 {
    lower_bound_l_hat(n, m)
        .expect("graphs in scope are connected, so (n, m) is in range")
        .value
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub graph: Graph,
    pub intersection_number: u64,
    pub bound: u64,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub scope: VerifyScope,
    pub graphs_checked: u64,
    pub violations: Vec<Violation>,
    /// Universal-vertex graphs in scope.
    pub universal_checked: u64,
    /// Universal-vertex graphs where the ν-regular comparison failed: a
    /// ν-regular graph above the bound or any other one not strictly above.
    pub nu_regular_failures: Vec<Violation>,
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.nu_regular_failures.is_empty()
    }

    pub fn render(&self) -> String {
        let s = &self.scope;
        let mut out = String::new();
        let m = match &s.m_range {
            Some(r) => format!("{}..{}", r.start(), r.end()),
            None => "all".into(),
        };
        let _ = writeln!(out, "n: {}", s.n);
        let _ = writeln!(out, "m: {m}");
        let _ = writeln!(out, "mode: {}", s.mode.as_str());
        if s.mode == VerifyMode::Sample {
            let _ = writeln!(out, "seed: {}", s.seed);
            let _ = writeln!(out, "samples: {}", s.samples);
        }
        let _ = writeln!(out, "graphs_checked: {}", self.graphs_checked);
        let _ = writeln!(out, "universal_vertex_graphs: {}", self.universal_checked);
        let _ = writeln!(out, "violations: {}", self.violations.len());
        let _ = writeln!(
            out,
            "nu_regular_failures: {}",
            self.nu_regular_failures.len()
        );
        let _ = writeln!(out, "wall_time_ms: {}", self.wall_time.as_millis());
        let _ = writeln!(
            out,
            "result: {}",
            if self.holds() { "holds" } else { "VIOLATED" }
        );
        for (label, list) in [
            ("violation", &self.violations),
            ("nu_regular_failure", &self.nu_regular_failures),
        ] {
            for v in list {
                let _ = writeln!(
                    out,
                    "{label}: intersection_number={} bound={}",
                    v.intersection_number, v.bound
                );
                out.push_str(&write_graph(&v.graph));
            }
        }
        out
    }
}

fn population(scope: &VerifyScope) -> Result<Vec<Graph>, CliError> {
    let n = scope.n;
    let filter = scope
        .m_range
        .clone()
        .map(|r| *r.start() as usize..=*r.end() as usize);
    let graphs = match scope.mode {
        VerifyMode::ExhaustiveLabeled => {
            enumerate_connected_graphs(n as usize, EnumerationMode::Labeled, filter)?.collect()
        }
        VerifyMode::ExhaustiveCanonical => {
            enumerate_connected_graphs(n as usize, EnumerationMode::Canonical, filter)?.collect()
        }
        VerifyMode::Sample => match &scope.m_range {
            None => (0..scope.samples)
                .map(|i| random_connected_graph(n, None, derive_seed(scope.seed, i)))
                .collect::<Result<_, _>>()?,
            Some(r) => {
                let mut out = Vec::new();
                for m in r.clone() {
                    let master = derive_seed(scope.seed, m);
                    for i in 0..scope.samples {
                        out.push(random_connected_graph(n, Some(m), derive_seed(master, i))?);
                    }
                }
                out
            }
        },
    };
    Ok(graphs)
}

struct Outcome {
    universal: bool,
    violation: Option<Violation>,
    nu_regular_failure: Option<Violation>,
}

fn check(g: &Graph, bound: BoundFn) -> Result<Outcome, CliError> {
    let value = solve_mstci_with(g, &SolveOptions::default())?.intersection_number;
    let b = bound(g.n() as u64, g.m() as u64);
    let violation = (b > value).then(|| Violation {
        graph: g.clone(),
        intersection_number: value,
        bound: b,
    });
    let universal = !universal_vertices(g).is_empty();
    let mut nu_regular_failure = None;
    if universal {
        // ν-regular graphs sit exactly on the bound, all others strictly above
        let ok = if is_nu_regular(g) {
            value == b
        } else {
            value > b
        };
        if !ok {
            nu_regular_failure = Some(Violation {
                graph: g.clone(),
                intersection_number: value,
                bound: b,
            });
        }
    }
    Ok(Outcome {
        universal,
        violation,
        nu_regular_failure,
    })
}

pub fn run_verify(
    scope: &VerifyScope,
    jobs: usize,
    bound: BoundFn,
) -> Result<VerificationReport, CliError> {
    let start = Instant::now();
    let graphs = population(scope)?;
    let outcomes: Vec<Outcome> = pool(jobs)?.install(|| {
        graphs
            .par_iter()
            .map(|g| check(g, bound))
            .collect::<Result<_, _>>()
    })?;
    let mut report = VerificationReport {
        scope: scope.clone(),
        graphs_checked: graphs.len() as u64,
        violations: Vec::new(),
        universal_checked: 0,
        nu_regular_failures: Vec::new(),
        wall_time: Duration::ZERO,
    };
    for o in outcomes {
        report.universal_checked += o.universal as u64;
        report.violations.extend(o.violation);
        report.nu_regular_failures.extend(o.nu_regular_failure);
    }
    report.wall_time = start.elapsed();
    Ok(report)
}
