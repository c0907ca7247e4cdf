//! Fundamental cycles of a spanning tree, their pairwise intersections, and
//! bonds.
//!
//! Tree paths are handled as `u64` masks over tree indices (see
//! [`SpanningTree`]), so two tree-cycles intersect iff the AND of their path
//! masks is nonzero. Cycle-edges are never shared between distinct
//! tree-cycles, so only tree edges can be common.

use crate::choose2;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, SpanningTree};

/// A cycle-edge and the tree path between its endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCycle {
    pub cycle_edge: Edge,
    pub path_edges: Vec<Edge>,
    pub path_mask: u64,
}

impl TreeCycle {
    pub fn intersects(&self, other: &TreeCycle) -> bool {
        self.path_mask & other.path_mask != 0
    }
}

/// Edges on the unique `u`–`v` path of `t`, sorted. Empty iff `u == v`.
pub fn tree_path(t: &SpanningTree, u: usize, v: usize) -> Vec<Edge> {
    t.edges_of_mask(t.path_mask(u, v))
}

pub fn fundamental_cycle(g: &Graph, t: &SpanningTree, f: Edge) -> Result<TreeCycle> {
    if !g.has_edge(f.u, f.v) {
        return Err(Error::NotAGraphEdge(f.u, f.v));
    }
    if t.contains(f) {
        return Err(Error::TreeEdgeGiven(f.u, f.v));
    }
    let mask = t.path_mask(f.u, f.v);
    Ok(TreeCycle {
        cycle_edge: f,
        path_edges: t.edges_of_mask(mask),
        path_mask: mask,
    })
}

/// All tree-cycles of `t`, ordered by cycle-edge.
pub fn tree_cycles(g: &Graph, t: &SpanningTree) -> Vec<TreeCycle> {
    g.edges()
        .iter()
        .filter(|e| !t.contains(**e))
        .map(|&f| {
            let mask = t.path_mask(f.u, f.v);
            TreeCycle {
                cycle_edge: f,
                path_edges: t.edges_of_mask(mask),
                path_mask: mask,
            }
        })
        .collect()
}

/// Number of unordered pairs of masks with a nonzero AND.
pub fn count_intersecting_pairs(masks: &[u64]) -> u64 {
    count_intersecting_pairs_below(masks, u64::MAX).unwrap_or(u64::MAX)
}

/// Like [`count_intersecting_pairs`] but gives up with `None` as soon as the
/// running count reaches `limit`.
pub(crate) fn count_intersecting_pairs_below(masks: &[u64], limit: u64) -> Option<u64> {
    let mut count = 0u64;
    for (i, &a) in masks.iter().enumerate() {
        for &b in &masks[i + 1..] {
            if a & b != 0 {
                count += 1;
            }
        }
        if count >= limit {
            return None;
        }
    }
    Some(count)
}

/// Number of intersecting tree-cycle pairs of `t`; zero when ν ≤ 1.
pub fn intersection_number_wrt(g: &Graph, t: &SpanningTree) -> u64 {
    let masks: Vec<u64> = g
        .edges()
        .iter()
        .filter(|e| !t.contains(**e))
        .map(|f| t.path_mask(f.u, f.v))
        .collect();
    count_intersecting_pairs(&masks)
}

/// Graph edges crossing the two components of `t - e`. Always contains `e`.
pub fn bond(g: &Graph, t: &SpanningTree, e: Edge) -> Result<Vec<Edge>> {
    let idx = t.tree_index(e).ok_or(Error::NotATreeEdge(e.u, e.v))?;
    Ok(bond_by_index(g, t, idx))
}

fn bond_by_index(g: &Graph, t: &SpanningTree, idx: usize) -> Vec<Edge> {
    // a vertex is below tree edge idx iff idx is on its root path
    let below = |x: usize| t.root_path(x) >> idx & 1 == 1;
    g.edges()
        .iter()
        .filter(|f| below(f.u) != below(f.v))
        .copied()
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BondMode {
    Full,
    NonRedundant,
}

/// One edge set per tree edge, indexed like `t.edges()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BondAssignment {
    pub mode: BondMode,
    pub tree_edges: Vec<Edge>,
    pub sets: Vec<Vec<Edge>>,
}

impl BondAssignment {
    /// `|set| - 1` per tree edge.
    pub fn phi(&self) -> Vec<u64> {
        self.sets.iter().map(|s| s.len() as u64 - 1).collect()
    }

    /// `Σ C(|set| - 1, 2)`: a lower estimate of the intersection number in
    /// non-redundant mode, an upper one in full mode.
    pub fn pair_estimate(&self) -> u64 {
        self.phi().into_iter().map(choose2).sum()
    }

    pub fn set_of(&self, e: Edge) -> Option<&[Edge]> {
        self.tree_edges
            .binary_search(&e)
            .ok()
            .map(|i| self.sets[i].as_slice())
    }
}

/// The full bond of every tree edge.
pub fn bonds(g: &Graph, t: &SpanningTree) -> BondAssignment {
    BondAssignment {
        mode: BondMode::Full,
        tree_edges: t.edges().to_vec(),
        sets: (0..t.edges().len())
            .map(|i| bond_by_index(g, t, i))
            .collect(),
    }
}

/// First tree edge on the path walked from the smaller endpoint of the
/// cycle-edge.
pub fn first_path_edge(t: &SpanningTree, cycle: &TreeCycle) -> Edge {
    let from = cycle.cycle_edge.u;
    let mask = cycle.path_mask;
    if let Some(pe) = t.parent_edge(from) {
        if mask >> pe & 1 == 1 {
            return t.edges()[pe];
        }
    }
    // `from` is the top of the path: take the edge down to its child
    t.edges_of_mask(mask)
        .into_iter()
        .find(|e| {
            let child = if t.parent(e.u) == Some(e.v) { e.u } else { e.v };
            t.parent(child) == Some(from)
        })
        .expect("nonempty tree path leaves its top vertex through a child edge")
}

/// Non-redundant bond set under the first-path-edge rule.
pub fn non_redundant_bond_set(g: &Graph, t: &SpanningTree) -> BondAssignment {
    non_redundant_bond_set_with(g, t, |c| first_path_edge(t, c))
        .expect("first_path_edge always picks an edge on the path")
}

/// Non-redundant bond set where `rule` picks, for each tree-cycle, the tree
/// edge whose set receives the cycle-edge. The pick must lie on the cycle's
/// tree path.
pub fn non_redundant_bond_set_with<F>(
    g: &Graph,
    t: &SpanningTree,
    mut rule: F,
) -> Result<BondAssignment>
where
    F: FnMut(&TreeCycle) -> Edge,
{
    let mut sets: Vec<Vec<Edge>> = t.edges().iter().map(|&e| vec![e]).collect();
    for cycle in tree_cycles(g, t) {
        let pick = rule(&cycle);
        let idx = t
            .tree_index(pick)
            .filter(|i| cycle.path_mask >> i & 1 == 1)
            .ok_or(Error::NotATreeEdge(pick.u, pick.v))?;
        sets[idx].push(cycle.cycle_edge);
    }
    Ok(BondAssignment {
        mode: BondMode::NonRedundant,
        tree_edges: t.edges().to_vec(),
        sets,
    })
}

/// `Σ_e C(φ_e, 2)` over the default non-redundant bond set.
pub fn bond_lower_estimate(g: &Graph, t: &SpanningTree) -> u64 {
    non_redundant_bond_set(g, t).pair_estimate()
}

/// `Σ_e C(|b_e| - 1, 2)` over the full bonds.
pub fn bond_upper_estimate(g: &Graph, t: &SpanningTree) -> u64 {
    bonds(g, t).pair_estimate()
}
