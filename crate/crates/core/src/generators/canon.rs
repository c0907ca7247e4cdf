//! Brute-force canonical labeling for small graphs.
//!
//! Vertices are first split into cells by iterated colour refinement
//! (degree, then the multiset of neighbour colours), which is invariant
//! under relabeling. The canonical code is the minimum, over all orderings
//! that list cells in colour order, of the upper-triangle adjacency bits
//! read column by column. Orderings are searched depth first with prefix
//! pruning.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Largest `n` whose code fits in a `u64`.
pub const CANON_MAX_N: usize = 11;

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&w| g.has_edge(v, w))
                    .map(|w| color[w])
                    .collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let ids: BTreeMap<&(usize, Vec<usize>), usize> = {
            let mut uniq: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
            uniq.sort();
            uniq.dedup();
            uniq.into_iter().enumerate().map(|(i, s)| (s, i)).collect()
        };
        let next: Vec<usize> = sigs.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            return next;
        }
        classes = ids.len();
        color = next;
    }
}

/// Bit of pair `(i, j)`, `i < j`, counted from the most significant end.
fn pair_rank(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

struct Search<'a> {
    g: &'a Graph,
    color: Vec<usize>,
    cell_at: Vec<usize>,
    bits: usize,
    order: Vec<usize>,
    used: u64,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    fn go(&mut self, pos: usize, code: u64) {
        let n = self.g.n();
        if pos == n {
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, self.order.clone()));
            }
            return;
        }
        for v in 0..n {
            if self.used >> v & 1 == 1 || self.color[v] != self.cell_at[pos] {
                continue;
            }
            let mut c = code;
            for (i, &w) in self.order.iter().enumerate() {
                if self.g.has_edge(v, w) {
                    c |= 1 << (self.bits - 1 - pair_rank(i, pos));
                }
            }
            let known = (pos + 1) * pos / 2;
            if let Some((b, _)) = &self.best {
                let shift = self.bits - known;
                if known > 0 && (c >> shift) > (b >> shift) {
                    continue;
                }
            }
            self.order.push(v);
            self.used |= 1 << v;
            self.go(pos + 1, c);
            self.used &= !(1 << v);
            self.order.pop();
        }
    }
}

/// Canonical code and the vertex order achieving it.
pub(crate) fn canonical_code(g: &Graph) -> Result<(u64, Vec<usize>)> {
    let n = g.n();
    if n > CANON_MAX_N {
        return Err(Error::EnumerationLimit(format!(
            "canonical form supports n <= {CANON_MAX_N}, got {n}"
        )));
    }
    let color = refine(g);
    let mut cell_at = color.clone();
    cell_at.sort_unstable();
    let mut s = Search {
        g,
        color,
        cell_at,
        bits: n * n.saturating_sub(1) / 2,
        order: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    if n <= 1 {
        return Ok((0, (0..n).collect()));
    }
    s.go(0, 0);
    Ok(s.best.expect("at least one ordering exists"))
}

pub(crate) fn graph_from_code(n: usize, code: u64) -> Result<Graph> {
    let bits = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> (bits - 1 - pair_rank(i, j)) & 1 == 1 {
                edges.push(Edge::new(i, j));
            }
        }
    }
    Graph::new(n, edges)
}

/// The canonical representative of `g`'s isomorphism class: isomorphic
/// inputs give equal outputs.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let (code, _) = canonical_code(g)?;
    graph_from_code(g.n(), code)
}
