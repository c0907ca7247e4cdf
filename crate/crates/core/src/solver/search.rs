//! Branch and bound over spanning trees grown outward from vertex 0.
//!
//! The partial tree is always a subtree containing the root. Each step
//! takes the frontier edge `(s, x)` with the smallest `s` in the tree and
//! then the smallest outside `x`, and branches on including it (attaching
//! `x`) or excluding it (allowed only if the graph minus excluded edges stays
//! connected). When `x` attaches, every other edge from `x` back into the
//! tree becomes a cycle-edge whose tree path is now fixed, so the count of
//! intersecting pairs among such edges can only grow. Subtrees whose count
//! exceeds the best complete value are cut; equal subtrees are kept so that
//! ties can go to the lexicographically smaller edge list. At a leaf every
//! non-tree edge has been counted and the count is the exact intersection
//! number.

use crate::graph::{full_mask, reach, Edge, Graph};

pub(super) struct Outcome {
    pub edges: Vec<Edge>,
    pub value: u64,
    pub leaves: u64,
}

struct Search<'g> {
    g: &'g Graph,
    full: u64,
    in_tree: u64,
    avail: Vec<u64>,
    /// Bitmask of inclusion positions on the root-to-vertex path.
    root_path: Vec<u64>,
    tree: Vec<Edge>,
    settled: Vec<u64>,
    bound: u64,
    limit: u64,
    best: Option<(Vec<Edge>, u64)>,
    leaves: u64,
}

impl Search<'_> {
    fn run(&mut self) {
        if self.bound > self.limit {
            return;
        }
        if self.in_tree == self.full {
            self.leaves += 1;
            let mut edges = self.tree.clone();
            edges.sort_unstable();
            let better = match &self.best {
                Some((prev, v)) => self.bound < *v || edges < *prev,
                None => true,
            };
            if better {
                self.best = Some((edges, self.bound));
                self.limit = self.bound;
            }
            return;
        }
        let (s, x) = self.frontier_edge();

        let mark = self.settled.len();
        let saved = self.bound;
        let pos = self.tree.len();
        self.root_path[x] = self.root_path[s] | 1 << pos;
        self.tree.push(Edge::new(s, x));
        self.in_tree |= 1 << x;
        let mut back = self.g.adjacency(x) & self.in_tree & !(1 << s);
        while back != 0 && self.bound <= self.limit {
            let y = back.trailing_zeros() as usize;
            back &= back - 1;
            let mask = self.root_path[x] ^ self.root_path[y];
            let gain = self.settled.iter().filter(|&&q| q & mask != 0).count() as u64;
            self.settled.push(mask);
            self.bound += gain;
        }
        self.run();
        self.settled.truncate(mark);
        self.bound = saved;
        self.tree.pop();
        self.in_tree &= !(1 << x);

        self.avail[s] &= !(1 << x);
        self.avail[x] &= !(1 << s);
        if reach(&self.avail, 0) == self.full {
            self.run();
        }
        self.avail[s] |= 1 << x;
        self.avail[x] |= 1 << s;
    }

    fn frontier_edge(&self) -> (usize, usize) {
        let mut rest = self.in_tree;
        while rest != 0 {
            let s = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let out = self.avail[s] & !self.in_tree;
            if out != 0 {
                return (s, out.trailing_zeros() as usize);
            }
        }
        unreachable!("the not-excluded subgraph stays connected")
    }
}

/// Minimum intersection number over all spanning trees of connected `g`,
/// the lexicographically smallest minimizing tree, and the number of
/// complete trees reached.
pub(super) fn minimize(g: &Graph) -> Outcome {
    let n = g.n();
    let mut search = Search {
        g,
        full: full_mask(n),
        in_tree: 1,
        avail: g.adjacency_rows().to_vec(),
        root_path: vec![0; n],
        tree: Vec::with_capacity(n),
        settled: Vec::with_capacity(g.m()),
        bound: 0,
        limit: u64::MAX,
        best: None,
        leaves: 0,
    };
    search.run();
    let (edges, value) = search.best.expect("connected graphs have a spanning tree");
    Outcome {
        edges,
        value,
        leaves: search.leaves,
    }
}
