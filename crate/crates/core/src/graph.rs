//! Simple undirected graphs on dense vertex ids, spanning trees, and the
//! edge-list text format.

use std::collections::VecDeque;
use std::fmt;
use std::path::Path;

use crate::error::{Error, ParseError, Result};

pub const MAX_VERTICES: usize = 64;

/// Undirected edge stored as `(min, max)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn has(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Simple undirected graph with vertices `0..n`.
///
/// Edges are kept sorted in `(u, v)` order; the position of an edge in that
/// order is its edge index. Adjacency is also held as one `u64` row per
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        let mut list = Vec::new();
        for e in edges {
            let e: Edge = e.into();
            if e.v >= n {
                return Err(Error::EndpointOutOfRange { u: e.u, v: e.v, n });
            }
            if e.u == e.v {
                return Err(Error::SelfLoop(e.u));
            }
            if adj[e.u] >> e.v & 1 == 1 {
                return Err(Error::DuplicateEdge(e.u, e.v));
            }
            adj[e.u] |= 1 << e.v;
            adj[e.v] |= 1 << e.u;
            list.push(e);
        }
        list.sort_unstable();
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    /// Builds a graph from upper-triangle adjacency bits, slot order
    /// `(0,1), (0,2), .., (0,n-1), (1,2), ..`. Needs `n <= 16`.
    pub fn from_slot_mask(n: usize, mask: u128) -> Result<Self> {
        if n > 16 {
            return Err(Error::InvalidParameter(format!(
                "slot masks hold at most 16 vertices, got {n}"
            )));
        }
        let slots = edge_slots(n);
        Graph::new(
            n,
            slots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| *e),
        )
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(n, edge_slots(n))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn star(n: usize) -> Result<Self> {
        Graph::new(n, (1..n).map(|i| (0, i)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbour bitmask of `v`.
    pub fn adjacency(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn quantities(&self) -> Result<GraphQuantities> {
        Ok(GraphQuantities {
            n: self.n,
            m: self.m(),
            nu: cyclomatic_number(self)?,
            degree_sequence: self.degree_sequence(),
        })
    }

    /// Upper-triangle slot mask, inverse of [`Graph::from_slot_mask`].
    ///
    /// # Panics
    /// If `n > 16`.
    pub fn slot_mask(&self) -> u128 {
        assert!(self.n <= 16, "slot masks hold at most 16 vertices");
        let mut mask = 0u128;
        for e in &self.edges {
            mask |= 1 << slot_index(self.n, e.u, e.v);
        }
        mask
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        Graph::new(self.n, self.edges.iter().map(|e| (perm[e.u], perm[e.v])))
    }

    /// Same graph plus one edge.
    pub fn with_edge(&self, e: Edge) -> Result<Self> {
        Graph::new(self.n, self.edges.iter().copied().chain(std::iter::once(e)))
    }

    /// Vertex pairs that are not edges, in slot order.
    pub fn non_edges(&self) -> Vec<Edge> {
        edge_slots(self.n)
            .into_iter()
            .filter(|e| !self.has_edge(e.u, e.v))
            .collect()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph(self))
    }
}

/// All `n(n-1)/2` vertex pairs in slot order.
pub fn edge_slots(n: usize) -> Vec<Edge> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            out.push(Edge { u, v });
        }
    }
    out
}

fn slot_index(n: usize, u: usize, v: usize) -> usize {
    // pairs before row u: sum_{i<u} (n-1-i)
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Bitmask of vertices reachable from `s` in the graph given by `rows`.
pub(crate) fn reach(rows: &[u64], s: usize) -> u64 {
    let mut seen = 1u64 << s;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let w = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[w];
        }
        frontier = next & !seen;
        seen |= frontier;
    }
    seen
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn is_connected(g: &Graph) -> bool {
    reach(&g.adj, 0) == full_mask(g.n)
}

/// `m - n + 1`; defined only for connected graphs.
pub fn cyclomatic_number(g: &Graph) -> Result<usize> {
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    Ok(g.m() + 1 - g.n())
}

/// Vertices adjacent to every other vertex, ascending.
pub fn universal_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n).filter(|&v| g.degree(v) == g.n - 1).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphQuantities {
    pub n: usize,
    pub m: usize,
    pub nu: usize,
    pub degree_sequence: Vec<usize>,
}

/// Spanning tree of a host graph, rooted at vertex 0.
///
/// Tree edges are sorted; a tree edge's position in that order is its tree
/// index, and `root_path[v]` is the bitmask of tree indices on the path from
/// the root to `v`. The tree path between `a` and `b` is therefore
/// `root_path[a] ^ root_path[b]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpanningTree {
    n: usize,
    edges: Vec<Edge>,
    parent: Vec<Option<usize>>,
    parent_edge: Vec<Option<usize>>,
    root_path: Vec<u64>,
}

impl SpanningTree {
    pub fn new<I, E>(g: &Graph, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut list: Vec<Edge> = edges.into_iter().map(Into::into).collect();
        list.sort_unstable();
        list.dedup();
        for e in &list {
            if !g.has_edge(e.u, e.v) {
                return Err(Error::NotAGraphEdge(e.u, e.v));
            }
        }
        if list.len() != g.n() - 1 {
            return Err(Error::InvalidTree(format!(
                "expected {} edges, got {}",
                g.n() - 1,
                list.len()
            )));
        }
        SpanningTree::from_sorted(g.n(), list)
    }

    /// The star at `hub`; fails unless `hub` is universal in `g`.
    pub fn star(g: &Graph, hub: usize) -> Result<Self> {
        if hub >= g.n() || g.degree(hub) != g.n() - 1 {
            return Err(Error::NotUniversal(hub));
        }
        SpanningTree::new(g, (0..g.n()).filter(|&v| v != hub).map(|v| (hub, v)))
    }

    pub(crate) fn from_sorted(n: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut nbrs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            nbrs[e.u].push((e.v, i));
            nbrs[e.v].push((e.u, i));
        }
        let mut parent = vec![None; n];
        let mut parent_edge = vec![None; n];
        let mut root_path = vec![0u64; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut visited = 1;
        while let Some(x) = queue.pop_front() {
            for &(y, i) in &nbrs[x] {
                if !seen[y] {
                    seen[y] = true;
                    visited += 1;
                    parent[y] = Some(x);
                    parent_edge[y] = Some(i);
                    root_path[y] = root_path[x] | 1 << i;
                    queue.push_back(y);
                }
            }
        }
        if visited != n {
            return Err(Error::InvalidTree(
                "edges do not connect all vertices".into(),
            ));
        }
        Ok(SpanningTree {
            n,
            edges,
            parent,
            parent_edge,
            root_path,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn tree_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Tree index of the edge joining `v` to its parent.
    pub fn parent_edge(&self, v: usize) -> Option<usize> {
        self.parent_edge[v]
    }

    pub fn root_path(&self, v: usize) -> u64 {
        self.root_path[v]
    }

    /// Tree-index bitmask of the `a`–`b` path.
    pub fn path_mask(&self, a: usize, b: usize) -> u64 {
        self.root_path[a] ^ self.root_path[b]
    }

    /// Edges selected by a tree-index bitmask, in sorted order.
    pub fn edges_of_mask(&self, mut mask: u64) -> Vec<Edge> {
        let mut out = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            out.push(self.edges[mask.trailing_zeros() as usize]);
            mask &= mask - 1;
        }
        out
    }
}

impl fmt::Display for SpanningTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(Edge::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Serializes `g` in the edge-list format: `"n m"` then one `"u v"` line per
/// edge with `u < v`, LF-terminated.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

/// Parses the edge-list format. Blank trailing lines are ignored; endpoints
/// may be given in either order.
pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| ParseError::MalformedHeader(String::new()))?;
    let mut head = header.split_whitespace();
    let (n, m) = match (head.next(), head.next(), head.next()) {
        (Some(a), Some(b), None) => match (a.parse::<usize>(), b.parse::<usize>()) {
            (Ok(n), Ok(m)) => (n, m),
            _ => return Err(ParseError::MalformedHeader(header.to_string()).into()),
        },
        _ => return Err(ParseError::MalformedHeader(header.to_string()).into()),
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(ParseError::VertexCount(n).into());
    }
    let mut adj = vec![0u64; n];
    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines {
        let lineno = idx + 1;
        let mut tok = line.split_whitespace();
        let (a, b) = match (tok.next(), tok.next(), tok.next()) {
            (Some(a), Some(b), None) => match (a.parse::<usize>(), b.parse::<usize>()) {
                (Ok(a), Ok(b)) => (a, b),
                _ => {
                    return Err(ParseError::MalformedEdge {
                        line: lineno,
                        text: line.to_string(),
                    }
                    .into())
                }
            },
            _ => {
                return Err(ParseError::MalformedEdge {
                    line: lineno,
                    text: line.to_string(),
                }
                .into())
            }
        };
        if a >= n || b >= n {
            return Err(ParseError::EndpointOutOfRange {
                line: lineno,
                text: line.to_string(),
                n,
            }
            .into());
        }
        if a == b {
            return Err(ParseError::SelfLoop {
                line: lineno,
                text: line.to_string(),
            }
            .into());
        }
        if adj[a] >> b & 1 == 1 {
            return Err(ParseError::DuplicateEdge {
                line: lineno,
                text: line.to_string(),
            }
            .into());
        }
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
        edges.push(Edge::new(a, b));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        }
        .into());
    }
    Graph::new(n, edges)
}

pub fn read_graph_file(path: impl AsRef<Path>) -> std::io::Result<Result<Graph>> {
    Ok(read_graph(&std::fs::read_to_string(path)?))
}
