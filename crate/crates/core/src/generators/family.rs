use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Hub 0 joined to a `(k-1)`-regular circulant on `1..n`, so every non-hub
/// vertex has degree `k` in the whole graph.
///
/// With `s = n - 1` ring vertices, ring vertex `i` is adjacent to `i ± j`
/// for `1 <= j <= (k-1)/2`, plus the antipodal vertex `i + s/2` when `k - 1`
/// is odd.
pub fn regular_family_graph(k: u64, n: u64) -> Result<Graph> {
    if k < 4 {
        return Err(Error::InvalidParameter(format!("need k >= 4, got {k}")));
    }
    if n < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 2, got {n}")));
    }
    let ring = (n - 1) as usize;
    let d = (k - 1) as usize;
    if d > ring.saturating_sub(1) {
        return Err(Error::InvalidParameter(format!(
            "k - 1 = {d} exceeds n - 2 = {}",
            ring.saturating_sub(1)
        )));
    }
    if (ring * d) % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "(n - 1)(k - 1) = {} is odd",
            ring * d
        )));
    }
    let mut edges: Vec<Edge> = (1..=ring).map(|v| Edge::new(0, v)).collect();
    let at = |i: usize| 1 + i % ring;
    for i in 0..ring {
        for j in 1..=d / 2 {
            edges.push(Edge::new(at(i), at(i + j)));
        }
        if d % 2 == 1 && i < ring / 2 {
            edges.push(Edge::new(at(i), at(i + ring / 2)));
        }
    }
    let g = Graph::new(n as usize, edges)?;
    if (1..g.n()).any(|v| g.degree(v) != k as usize) {
        return Err(Error::Unrealizable(format!(
            "circulant for k={k} n={n} is not regular"
        )));
    }
    Ok(g)
}
