use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{edge_slots, is_connected, Edge, Graph, SpanningTree};

use super::enumerate::{GraphStream, Provenance};

/// Rejection attempts before [`random_connected_graph`] gives up.
pub const RETRY_CAP: u64 = 1_000_000;

/// Mixes a master seed with a stream index (SplitMix64 finalizer), so item
/// `i` of a sampled stream does not depend on how items are scheduled.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master
        .wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform labeled connected graph on `n` vertices by rejection.
///
/// Without `m`, each of the `n(n-1)/2` vertex pairs is an edge with
/// probability ½; with `m`, a uniform `m`-subset of pairs is drawn. Draws
/// repeat until the result is connected.
pub fn random_connected_graph(n: u64, m: Option<u64>, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 2, got {n}")));
    }
    let slots = edge_slots(n as usize);
    if let Some(m) = m {
        if m + 1 < n || m as usize > slots.len() {
            return Err(Error::OutOfRange { n, m });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_CAP {
        let g = match m {
            Some(m) => {
                let picked = index::sample(&mut rng, slots.len(), m as usize);
                Graph::new(n as usize, picked.into_iter().map(|i| slots[i]))?
            }
            None => Graph::new(
                n as usize,
                slots.iter().copied().filter(|_| rng.random::<bool>()),
            )?,
        };
        if is_connected(&g) {
            return Ok(g);
        }
    }
    Err(Error::RetryCapExceeded(RETRY_CAP))
}

/// `count` samples; item `i` uses seed `derive_seed(seed, i)`.
pub fn sampled_stream(n: u64, m: Option<u64>, seed: u64, count: u64) -> Result<GraphStream> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 2, got {n}")));
    }
    if let Some(m) = m {
        if m + 1 < n || m > n * (n - 1) / 2 {
            return Err(Error::OutOfRange { n, m });
        }
    }
    let source = (0..count).map(move |i| {
        random_connected_graph(n, m, derive_seed(seed, i)).expect("parameters validated above")
    });
    Ok(GraphStream::new(
        Provenance::Sampled { seed },
        Box::new(source),
    ))
}

/// Uniform random spanning tree of connected `g` (Wilson's loop-erased
/// random walks, rooted at vertex 0).
pub fn random_spanning_tree(g: &Graph, seed: u64) -> Result<SpanningTree> {
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    let n = g.n();
    let nbrs: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&w| g.has_edge(v, w)).collect())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut in_tree = vec![false; n];
    let mut next = vec![usize::MAX; n];
    in_tree[0] = true;
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for start in 1..n {
        let mut v = start;
        while !in_tree[v] {
            next[v] = nbrs[v][rng.random_range(0..nbrs[v].len())];
            v = next[v];
        }
        let mut v = start;
        while !in_tree[v] {
            in_tree[v] = true;
            edges.push(Edge::new(v, next[v]));
            v = next[v];
        }
    }
    SpanningTree::new(g, edges)
}
