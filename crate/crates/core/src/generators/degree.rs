use crate::bounds::lower_bound_l_hat;
use crate::choose2;
use crate::error::{Error, Result};
use crate::graph::{universal_vertices, Edge, Graph};

/// Graph degrees of the non-hub vertices of a universal-vertex graph,
/// sorted in nonincreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    /// Degrees inside `G - hub`.
    pub fn subgraph_degrees(&self) -> Vec<usize> {
        self.0.iter().map(|d| d - 1).collect()
    }

    /// Star-formula value `Σ C(d - 1, 2)`.
    pub fn star_value(&self) -> u64 {
        self.0.iter().map(|&d| choose2(d as u64 - 1)).sum()
    }

    /// Edge count of the universal-vertex graph with these degrees.
    pub fn edge_count(&self) -> usize {
        let n1 = self.0.len();
        (n1 + self.0.iter().sum::<usize>()) / 2
    }

    /// Whether the counts match `n-1-r` vertices of degree `q+1` and `r` of
    /// degree `q+2`.
    pub fn is_nu_regular(&self) -> bool {
        let n = self.0.len() as u64 + 1;
        let m = self.edge_count() as u64;
        match nu_regular_degrees(n, m) {
            Ok(expected) => expected == *self,
            Err(_) => false,
        }
    }

    /// Whether every degree is `q+1` or `q+2` (the count-free reading).
    pub fn has_near_equal_degrees(&self) -> bool {
        let n = self.0.len() as u64 + 1;
        let m = self.edge_count() as u64;
        match lower_bound_l_hat(n, m) {
            Ok(lh) => self
                .0
                .iter()
                .all(|&d| d as u64 == lh.q + 1 || d as u64 == lh.q + 2),
            Err(_) => false,
        }
    }
}

/// The ν-regular degree sequence for `(n, m)`.
pub fn nu_regular_degrees(n: u64, m: u64) -> Result<DegreeSequence> {
    let lh = lower_bound_l_hat(n, m)?;
    let (q, r) = (lh.q as usize, lh.r as usize);
    let n1 = (n - 1) as usize;
    let mut degrees = vec![q + 2; r];
    degrees.extend(std::iter::repeat_n(q + 1, n1 - r));
    Ok(DegreeSequence::new(degrees))
}

/// Erdős–Gallai test.
pub fn is_graphical(degrees: &[usize]) -> bool {
    let mut d = degrees.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let n = d.len();
    if d.iter().sum::<usize>() % 2 == 1 || d.first().is_some_and(|&x| x >= n) {
        return false;
    }
    let mut lhs = 0;
    for k in 1..=n {
        lhs += d[k - 1];
        let rhs = k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Havel–Hakimi realization. `degrees[i]` is the target degree of vertex
/// `i`; ties go to the lower index.
pub fn havel_hakimi(degrees: &[usize]) -> Option<Vec<Edge>> {
    let n = degrees.len();
    let mut rem: Vec<usize> = degrees.to_vec();
    let mut edges = Vec::new();
    loop {
        let Some(v) = (0..n)
            .filter(|&i| rem[i] > 0)
            .max_by(|&a, &b| rem[a].cmp(&rem[b]).then(b.cmp(&a)))
        else {
            return Some(edges);
        };
        let d = rem[v];
        rem[v] = 0;
        let mut others: Vec<usize> = (0..n).filter(|&i| i != v && rem[i] > 0).collect();
        others.sort_by(|&a, &b| rem[b].cmp(&rem[a]).then(a.cmp(&b)));
        if others.len() < d {
            return None;
        }
        for &w in &others[..d] {
            rem[w] -= 1;
            edges.push(Edge::new(v, w));
        }
    }
}

/// Universal vertex 0 plus a Havel–Hakimi realization on `1..n` with
/// subgraph degrees `q+1` on the first `r` vertices and `q` on the rest.
pub fn nu_regular_graph(n: u64, m: u64) -> Result<Graph> {
    let lh = lower_bound_l_hat(n, m)?;
    let nn = n as usize;
    let (q, r) = (lh.q as usize, lh.r as usize);
    let sub: Vec<usize> = (0..nn - 1).map(|i| if i < r { q + 1 } else { q }).collect();
    let sub_edges = havel_hakimi(&sub)
        .ok_or_else(|| Error::Unrealizable(format!("subgraph degrees {sub:?} for n={n} m={m}")))?;
    let g = Graph::new(
        nn,
        (1..nn)
            .map(|v| Edge::new(0, v))
            .chain(sub_edges.into_iter().map(|e| Edge::new(e.u + 1, e.v + 1))),
    )?;
    if g.m() as u64 != m || !is_nu_regular(&g) {
        return Err(Error::Unrealizable(format!(
            "realized graph for n={n} m={m} is not ν-regular"
        )));
    }
    Ok(g)
}

/// Whether `g` has a universal vertex and ν-regular non-hub degrees.
pub fn is_nu_regular(g: &Graph) -> bool {
    let Some(&hub) = universal_vertices(g).first() else {
        return false;
    };
    let rest = (0..g.n())
        .filter(|&v| v != hub)
        .map(|v| g.degree(v))
        .collect();
    DegreeSequence::new(rest).is_nu_regular()
}

/// Every realizable non-hub degree sequence of an `(n, m)` graph with a
/// universal vertex, in lexicographic order.
pub fn universal_vertex_sequences(n: u64, m: u64) -> Result<Vec<DegreeSequence>> {
    lower_bound_l_hat(n, m)?;
    let n1 = (n - 1) as usize;
    let target = 2 * (m + 1 - n) as usize;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n1);
    // nonincreasing subgraph degrees in 0..=n-2 summing to 2ν
    fn rec(
        cur: &mut Vec<usize>,
        len: usize,
        max: usize,
        left: usize,
        out: &mut Vec<DegreeSequence>,
    ) {
        if cur.len() == len {
            if left == 0 && is_graphical(cur) {
                out.push(DegreeSequence::new(cur.iter().map(|d| d + 1).collect()));
            }
            return;
        }
        let slots = len - cur.len();
        if left > slots * max {
            return;
        }
        for d in (0..=max.min(left)).rev() {
            cur.push(d);
            rec(cur, len, d, left - d, out);
            cur.pop();
        }
    }
    rec(&mut cur, n1, n1.saturating_sub(1), target, &mut out);
    out.sort();
    Ok(out)
}
