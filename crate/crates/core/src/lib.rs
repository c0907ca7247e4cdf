//! Minimum spanning tree cycle intersection (MSTCI) toolkit.
//!
//! Given a connected graph `G` and a spanning tree `T`, every non-tree edge
//! closes a fundamental cycle. The intersection number of `G` with respect to
//! `T` counts the unordered pairs of those cycles that share at least one
//! edge; the intersection number of `G` is its minimum over all spanning
//! trees. This crate provides:
//!
//! * [`graph`]: dense-id simple graphs, spanning trees and the edge-list format,
//! * [`cycle_space`]: fundamental cycles, bonds and non-redundant bond sets,
//! * [`solver`]: exact solving by branch and bound over spanning trees, with a star fast path,
//! * [`bounds`]: the closed-form lower bounds in exact rational arithmetic,
//! * [`generators`]: ν-regular graphs, the regular ratio family, random and
//!   exhaustive graph streams.

pub mod bounds;
pub mod cycle_space;
pub mod error;
pub mod generators;
pub mod graph;
pub mod solver;

pub use bounds::{lower_bound_l, lower_bound_l_hat, BoundsReport};
pub use cycle_space::{intersection_number_wrt, BondAssignment, BondMode, TreeCycle};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, GraphQuantities, SpanningTree};
pub use solver::{solve_mstci, solve_mstci_with, MstciSolution, SolveMethod, SolveOptions};

/// `C(x, 2)` for nonnegative integers.
#[inline]
pub fn choose2(x: u64) -> u64 {
    if x < 2 {
        0
    } else {
        x * (x - 1) / 2
    }
}
