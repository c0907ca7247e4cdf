//! Exact MSTCI solving.
//!
//! Graphs with a universal vertex are solved by the star spanning tree at the
//! smallest universal vertex. Everything else is minimized exactly over all
//! spanning trees by a branch and bound search (see `search`); among trees
//! of minimum value the lexicographically smallest sorted edge list wins.
//!
//! Plain enumeration ([`enumerate_spanning_trees`]) branches include/exclude
//! over the edges in index order: an edge whose endpoints are already joined
//! by included edges is forced out, an edge that is a bridge of the
//! not-excluded subgraph is forced in, and every other edge branches
//! include-first. Every leaf is a spanning tree, and include-first order
//! yields trees in lexicographic order of their sorted edge lists.

use std::ops::ControlFlow;

mod search;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::choose2;
use crate::cycle_space::{count_intersecting_pairs_below, intersection_number_wrt};
use crate::error::{Error, Result};
use crate::graph::{is_connected, reach, universal_vertices, Edge, Graph, SpanningTree};

pub const DEFAULT_TREE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EdgeState {
    Undecided,
    In,
    Out,
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    edge: usize,
    branch: bool,
}

/// Backtracking spanning-tree walker. Each successful [`TreeWalker::advance`]
/// leaves the current tree readable through [`TreeWalker::tree_edges`].
pub(crate) struct TreeWalker<'g> {
    g: &'g Graph,
    state: Vec<EdgeState>,
    forest: Vec<u64>,
    avail: Vec<u64>,
    in_count: usize,
    stack: Vec<Frame>,
    started: bool,
}

impl<'g> TreeWalker<'g> {
    pub(crate) fn new(g: &'g Graph) -> Result<Self> {
        if !is_connected(g) {
            return Err(Error::NotConnected);
        }
        Ok(TreeWalker {
            g,
            state: vec![EdgeState::Undecided; g.m()],
            forest: vec![0; g.n()],
            avail: g.adjacency_rows().to_vec(),
            in_count: 0,
            stack: Vec::with_capacity(g.m()),
            started: false,
        })
    }

    fn set_in(&mut self, i: usize) {
        let Edge { u, v } = self.g.edges()[i];
        self.state[i] = EdgeState::In;
        self.forest[u] |= 1 << v;
        self.forest[v] |= 1 << u;
        self.in_count += 1;
    }

    fn set_out(&mut self, i: usize) {
        let Edge { u, v } = self.g.edges()[i];
        self.state[i] = EdgeState::Out;
        self.avail[u] &= !(1 << v);
        self.avail[v] &= !(1 << u);
    }

    fn undo(&mut self, i: usize) {
        let Edge { u, v } = self.g.edges()[i];
        match self.state[i] {
            EdgeState::In => {
                self.forest[u] &= !(1 << v);
                self.forest[v] &= !(1 << u);
                self.in_count -= 1;
            }
            EdgeState::Out => {
                self.avail[u] |= 1 << v;
                self.avail[v] |= 1 << u;
            }
            EdgeState::Undecided => {}
        }
        self.state[i] = EdgeState::Undecided;
    }

    fn descend(&mut self, from: usize) {
        let target = self.g.n() - 1;
        for i in from..self.g.m() {
            let Edge { u, v } = self.g.edges()[i];
            if self.in_count == target || reach(&self.forest, u) >> v & 1 == 1 {
                self.set_out(i);
                self.stack.push(Frame {
                    edge: i,
                    branch: false,
                });
                continue;
            }
            self.avail[u] &= !(1 << v);
            self.avail[v] &= !(1 << u);
            let bridge = reach(&self.avail, u) >> v & 1 == 0;
            self.avail[u] |= 1 << v;
            self.avail[v] |= 1 << u;
            self.set_in(i);
            self.stack.push(Frame {
                edge: i,
                branch: !bridge,
            });
        }
        debug_assert_eq!(self.in_count, target);
    }

    /// Moves to the next spanning tree; `false` once all have been visited.
    pub(crate) fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            self.descend(0);
            return true;
        }
        while let Some(frame) = self.stack.pop() {
            self.undo(frame.edge);
            if frame.branch {
                self.set_out(frame.edge);
                self.stack.push(Frame {
                    edge: frame.edge,
                    branch: false,
                });
                self.descend(frame.edge + 1);
                return true;
            }
        }
        false
    }

    pub(crate) fn is_tree_edge(&self, i: usize) -> bool {
        self.state[i] == EdgeState::In
    }

    pub(crate) fn tree_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.g.m()).filter(|&i| self.state[i] == EdgeState::In)
    }
}

/// Iterator over all spanning trees of a connected graph, in lexicographic
/// order of sorted edge lists.
pub struct SpanningTrees<'g> {
    walker: TreeWalker<'g>,
}

impl Iterator for SpanningTrees<'_> {
    type Item = SpanningTree;

    fn next(&mut self) -> Option<SpanningTree> {
        if !self.walker.advance() {
            return None;
        }
        let g = self.walker.g;
        let edges = self.walker.tree_edges().map(|i| g.edges()[i]).collect();
        Some(SpanningTree::from_sorted(g.n(), edges).expect("walker yields spanning trees"))
    }
}

pub fn enumerate_spanning_trees(g: &Graph) -> Result<SpanningTrees<'_>> {
    Ok(SpanningTrees {
        walker: TreeWalker::new(g)?,
    })
}

/// Kirchhoff count: determinant of the Laplacian with row and column 0
/// removed, by fraction-free (Bareiss) elimination.
pub fn count_spanning_trees(g: &Graph) -> Result<BigUint> {
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    let size = g.n() - 1;
    if size == 0 {
        return Ok(BigUint::one());
    }
    let mut a: Vec<Vec<BigInt>> = (1..g.n())
        .map(|r| {
            (1..g.n())
                .map(|c| {
                    if r == c {
                        BigInt::from(g.degree(r))
                    } else if g.has_edge(r, c) {
                        -BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..size {
        if a[k][k].is_zero() {
            match (k + 1..size).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(BigUint::zero()),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let val = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = val;
            }
        }
        prev = a[k][k].clone();
    }
    let det = &a[size - 1][size - 1] * sign;
    debug_assert!(!det.is_negative());
    Ok(det.magnitude().clone())
}

/// `Σ_{u ≠ hub} C(d(u) - 1, 2)` for a universal `hub`.
pub fn star_intersection_number(g: &Graph, hub: usize) -> Result<u64> {
    if hub >= g.n() || g.degree(hub) != g.n() - 1 {
        return Err(Error::NotUniversal(hub));
    }
    Ok((0..g.n())
        .filter(|&u| u != hub)
        .map(|u| choose2(g.degree(u) as u64 - 1))
        .sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    Enumerated,
    StarFastPath,
}

impl SolveMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveMethod::Enumerated => "enumerated",
            SolveMethod::StarFastPath => "star-fast-path",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Refuse to enumerate graphs with more spanning trees than this.
    pub tree_budget: u64,
    /// Answer universal-vertex graphs with the star tree.
    pub star_fast_path: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            tree_budget: DEFAULT_TREE_BUDGET,
            star_fast_path: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MstciSolution {
    pub best_tree: SpanningTree,
    pub intersection_number: u64,
    /// Complete spanning trees reached; the branch and bound skips the rest.
    pub trees_examined: u64,
    pub method: SolveMethod,
}

pub fn solve_mstci(g: &Graph) -> Result<MstciSolution> {
    solve_mstci_with(g, &SolveOptions::default())
}

pub fn solve_mstci_with(g: &Graph, opts: &SolveOptions) -> Result<MstciSolution> {
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    if opts.star_fast_path {
        if let Some(&hub) = universal_vertices(g).first() {
            let best_tree = SpanningTree::star(g, hub)?;
            let value = star_intersection_number(g, hub)?;
            debug_assert_eq!(value, intersection_number_wrt(g, &best_tree));
            return Ok(MstciSolution {
                best_tree,
                intersection_number: value,
                trees_examined: 1,
                method: SolveMethod::StarFastPath,
            });
        }
    }
    let trees = count_spanning_trees(g)?;
    if trees > BigUint::from(opts.tree_budget) {
        return Err(Error::BudgetExceeded {
            trees,
            budget: opts.tree_budget,
        });
    }
    let found = search::minimize(g);
    debug_assert_eq!(
        found.value,
        intersection_number_wrt(g, &SpanningTree::new(g, found.edges.clone())?)
    );
    Ok(MstciSolution {
        best_tree: SpanningTree::from_sorted(g.n(), found.edges)?,
        intersection_number: found.value,
        trees_examined: found.leaves,
        method: SolveMethod::Enumerated,
    })
}

/// Per-tree scratch space for evaluating the intersection number of the
/// walker's current tree.
struct TreeScorer {
    nbrs: Vec<Vec<(usize, usize)>>,
    root_path: Vec<u64>,
    queue: Vec<usize>,
    masks: Vec<u64>,
    tree: Vec<usize>,
}

impl TreeScorer {
    fn new(n: usize) -> Self {
        TreeScorer {
            nbrs: vec![Vec::with_capacity(n); n],
            root_path: vec![0; n],
            queue: Vec::with_capacity(n),
            masks: Vec::new(),
            tree: Vec::with_capacity(n),
        }
    }

    /// Intersection number of the current tree, or `None` once it reaches
    /// `limit`.
    fn score(&mut self, g: &Graph, walker: &TreeWalker<'_>, limit: u64) -> Option<u64> {
        let n = g.n();
        for list in &mut self.nbrs {
            list.clear();
        }
        self.tree.clear();
        self.tree.extend(walker.tree_edges());
        for (pos, &i) in self.tree.iter().enumerate() {
            let Edge { u, v } = g.edges()[i];
            self.nbrs[u].push((v, pos));
            self.nbrs[v].push((u, pos));
        }
        let mut visited = 1u64;
        self.root_path[0] = 0;
        self.queue.clear();
        self.queue.push(0);
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            for &(y, pos) in &self.nbrs[x] {
                if visited >> y & 1 == 0 {
                    visited |= 1 << y;
                    self.root_path[y] = self.root_path[x] | 1 << pos;
                    self.queue.push(y);
                }
            }
        }
        debug_assert_eq!(self.queue.len(), n);
        self.masks.clear();
        for (i, e) in g.edges().iter().enumerate() {
            if !walker.is_tree_edge(i) {
                self.masks.push(self.root_path[e.u] ^ self.root_path[e.v]);
            }
        }
        count_intersecting_pairs_below(&self.masks, limit)
    }
}

/// Visits every spanning tree with its intersection number.
pub fn for_each_tree_value<F>(g: &Graph, mut visit: F) -> Result<()>
where
    F: FnMut(&[Edge], u64) -> ControlFlow<()>,
{
    let mut walker = TreeWalker::new(g)?;
    let mut scorer = TreeScorer::new(g.n());
    let mut edges = Vec::with_capacity(g.n());
    while walker.advance() {
        let value = scorer
            .score(g, &walker, u64::MAX)
            .expect("unbounded scoring always completes");
        edges.clear();
        edges.extend(walker.tree_edges().map(|i| g.edges()[i]));
        if visit(&edges, value).is_break() {
            break;
        }
    }
    Ok(())
}
