//! Experiment driver for the MSTCI toolkit: bound verification, bound
//! comparison sweeps with CSV and SVG output, graph generation and solving.

pub mod cli;
pub mod commands;
pub mod error;
pub mod svg;
pub mod sweep;
pub mod verify;

pub use error::CliError;

/// Worker pool with `jobs` threads; `0` lets rayon pick.
pub fn pool(jobs: usize) -> Result<rayon::ThreadPool, CliError> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?)
}
