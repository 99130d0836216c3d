//! Immutable simple undirected graphs over vertices `0..n` with bitset
//! adjacency, structural queries and bit-exact text I/O (graph6 and a plain
//! edge-list format).
//!
//! Graphs are value types: every mutation returns a fresh graph and the
//! original is untouched, so graphs can be shared freely between worker
//! threads.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard cap on the order of any graph handled by this crate. A single
/// `u128` word per vertex covers every desk-scale target, including the
/// 3-SAT reduction instances of order `7n + m + 4`.
pub const MAX_VERTICES: usize = 128;

// ---------------------------------------------------------------------------
// VertexSet
// ---------------------------------------------------------------------------

/// A set of vertices stored as a 128-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    /// All vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn bits(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest vertex in the set, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates over the members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

// ---------------------------------------------------------------------------
// EdgeSet
// ---------------------------------------------------------------------------

/// A set of unordered vertex pairs in canonical form: every pair is stored
/// as `(min, max)` and the list is sorted lexicographically with duplicates
/// removed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(Vec<(usize, usize)>);

impl EdgeSet {
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut v: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.0.binary_search(&e).is_ok()
    }
}

impl From<Vec<(usize, usize)>> for EdgeSet {
    fn from(v: Vec<(usize, usize)>) -> Self {
        EdgeSet::new(v)
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for (u, v) in self.iter() {
            seq.serialize_element(&[u, v])?;
        }
        seq.end()
    }
}

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

/// An immutable simple undirected graph.
///
/// Invariants maintained by every constructor:
/// - adjacency is symmetric,
/// - there are no loops,
/// - the cached edge count equals half the degree sum.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u128>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            m: 0,
        })
    }

    /// Builds a graph from an edge list. Endpoints must be `< n` and loops
    /// are rejected; duplicate edges are collapsed.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if g.adj[u] >> v & 1 == 0 {
                g.adj[u] |= 1u128 << v;
                g.adj[v] |= 1u128 << u;
                g.m += 1;
            }
        }
        g.debug_check();
        Ok(g)
    }

    pub(crate) fn from_adj(adj: Vec<u128>) -> Graph {
        let n = adj.len();
        let m = adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2;
        let g = Graph { n, adj, m };
        g.debug_check();
        g
    }

    fn debug_check(&self) {
        debug_assert!(self.n <= MAX_VERTICES);
        debug_assert!(self
            .adj
            .iter()
            .all(|a| a & !VertexSet::full(self.n).bits() == 0));
        debug_assert!((0..self.n).all(|v| self.adj[v] >> v & 1 == 0), "loop found");
        debug_assert!((0..self.n)
            .all(|u| (0..self.n).all(|v| (self.adj[u] >> v & 1) == (self.adj[v] >> u & 1))));
        debug_assert_eq!(
            self.adj
                .iter()
                .map(|a| a.count_ones() as usize)
                .sum::<usize>(),
            2 * self.m
        );
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub(crate) fn adj_slice(&self) -> &[u128] {
        &self.adj
    }

    #[inline]
    fn check_vertex(&self, v: usize) {
        assert!(
            v < self.n,
            "vertex {v} out of range for a graph of order {}",
            self.n
        );
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.check_vertex(u);
        self.check_vertex(v);
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.check_vertex(v);
        self.adj[v].count_ones() as usize
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.check_vertex(v);
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.check_vertex(v);
        VertexSet(self.adj[v] | 1u128 << v)
    }

    /// Minimum degree δ. Panics on the empty graph.
    pub fn min_degree(&self) -> usize {
        assert!(self.n > 0, "min_degree of an order-0 graph");
        (0..self.n).map(|v| self.degree(v)).min().unwrap()
    }

    /// Maximum degree Δ. Panics on the empty graph.
    pub fn max_degree(&self) -> usize {
        assert!(self.n > 0, "max_degree of an order-0 graph");
        (0..self.n).map(|v| self.degree(v)).max().unwrap()
    }

    /// Edges in canonical `(min, max)` lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            let mut bits = self.adj[u] >> (u + 1) << (u + 1);
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Returns a new graph with the edge `uv` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u);
        self.check_vertex(v);
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        if self.adj[u] >> v & 1 == 1 {
            return Err(Error::EdgeExists(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.adj[u] |= 1u128 << v;
        g.adj[v] |= 1u128 << u;
        g.m += 1;
        g.debug_check();
        Ok(g)
    }

    /// Returns a new graph with the edge `uv` removed.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u);
        self.check_vertex(v);
        if u == v || self.adj[u] >> v & 1 == 0 {
            return Err(Error::NotAnEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1u128 << v);
        g.adj[v] &= !(1u128 << u);
        g.m -= 1;
        g.debug_check();
        Ok(g)
    }

    /// Returns a new graph with every edge of `es` removed. Every member of
    /// `es` must be an edge of the graph. The result may contain isolated
    /// vertices; operations that require isolate-freeness reject it later.
    pub fn remove_edges(&self, es: &EdgeSet) -> Result<Graph> {
        let mut g = self.clone();
        for (u, v) in es.iter() {
            if u >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: u,
                    n: self.n,
                });
            }
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            if g.adj[u] >> v & 1 == 0 {
                return Err(Error::NotAnEdge(u, v));
            }
            g.adj[u] &= !(1u128 << v);
            g.adj[v] &= !(1u128 << u);
            g.m -= 1;
        }
        g.debug_check();
        Ok(g)
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        components_of(self.n, &self.adj)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// A tree is a connected graph with `m = n - 1`.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m == self.n - 1 && self.is_connected()
    }

    /// Degree-1 vertices.
    pub fn leaves(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices adjacent to at least one leaf. A leaf can itself be a
    /// support vertex (both vertices of a K_2 component are).
    pub fn support_vertices(&self) -> VertexSet {
        let leaves = self.leaves();
        (0..self.n)
            .filter(|&v| !self.neighbors(v).intersection(leaves).is_empty())
            .collect()
    }

    /// Vertices adjacent to at least two leaves.
    pub fn strong_support_vertices(&self) -> VertexSet {
        let leaves = self.leaves();
        (0..self.n)
            .filter(|&v| self.neighbors(v).intersection(leaves).len() >= 2)
            .collect()
    }

    /// The leaf neighbors `L(v)` of a vertex.
    pub fn leaf_neighbors(&self, v: usize) -> VertexSet {
        self.check_vertex(v);
        self.neighbors(v).intersection(self.leaves())
    }

    /// The `S`-external private neighborhood of `v`: vertices outside `S`
    /// whose only neighbor in `S` is `v`. Panics if `v` is not in `S`.
    pub fn epn(&self, v: usize, s: VertexSet) -> VertexSet {
        self.check_vertex(v);
        assert!(s.contains(v), "epn requires v in S");
        let mut out = VertexSet::EMPTY;
        for w in VertexSet::full(self.n).difference(s).iter() {
            if self.neighbors(w).intersection(s) == VertexSet::singleton(v) {
                out.insert(w);
            }
        }
        out
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let edges = self.edges();
        for root in 0..self.n {
            let (dist, parent) = self.bfs(root);
            for &(u, v) in &edges {
                if dist[u] == usize::MAX || dist[v] == usize::MAX {
                    continue;
                }
                if parent[u] == Some(v) || parent[v] == Some(u) {
                    continue; // tree edge of this BFS
                }
                let len = dist[u] + dist[v] + 1;
                if best.is_none_or(|b| len < b) {
                    best = Some(len);
                }
            }
        }
        best
    }

    /// Maximum eccentricity, or `None` when the graph is disconnected.
    pub fn diameter(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let mut diam = 0;
        for v in 0..self.n {
            let (dist, _) = self.bfs(v);
            for &d in &dist {
                if d == usize::MAX {
                    return None;
                }
                diam = diam.max(d);
            }
        }
        Some(diam)
    }

    fn bfs(&self, root: usize) -> (Vec<usize>, Vec<Option<usize>>) {
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![None; self.n];
        let mut queue = std::collections::VecDeque::new();
        dist[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u).iter() {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        (dist, parent)
    }

    /// Distance matrix row from `v` (`usize::MAX` when unreachable).
    pub fn distances_from(&self, v: usize) -> Vec<usize> {
        self.check_vertex(v);
        self.bfs(v).0
    }

    /// Disjoint union: vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|&a| a << self.n));
        Ok(Graph::from_adj(adj))
    }

    /// Induced subgraph on `vs` together with the map from new indices to
    /// original vertices (ascending, so relative order is preserved).
    pub fn induced_subgraph(&self, vs: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = vs.iter().filter(|&v| v < self.n).collect();
        let mut adj = vec![0u128; map.len()];
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.adj[u] >> v & 1 == 1 {
                    adj[i] |= 1u128 << j;
                    adj[j] |= 1u128 << i;
                }
            }
        }
        (Graph::from_adj(adj), map)
    }

    /// Plain text edge-list format: first line `n m`, then one `u v` line
    /// per edge in canonical order.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn parse_edge_list_text(text: &str) -> Result<Graph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::EdgeList("empty input".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList("bad header, expected `n m`".into()))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList("bad header, expected `n m`".into()))?;
        if it.next().is_some() {
            return Err(Error::EdgeList("trailing tokens in header".into()));
        }
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::EdgeList(format!("bad edge line: {line}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::EdgeList(format!("bad edge line: {line}")))?;
            if it.next().is_some() {
                return Err(Error::EdgeList(format!("trailing tokens: {line}")));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::EdgeList(format!(
                "header declares {m} edges but {} were given",
                edges.len()
            )));
        }
        Graph::from_edge_list(n, &edges)
    }

    pub fn to_graph6(&self) -> String {
        emit_graph6(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        parse_graph6(text)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, {})", self.n, self.m, self.to_graph6())
    }
}

/// Connected components over a raw adjacency slice.
pub(crate) fn components_of(n: usize, adj: &[u128]) -> Vec<VertexSet> {
    let mut seen = 0u128;
    let full = VertexSet::full(n).bits();
    let mut out = Vec::new();
    while seen != full {
        let start = (!seen & full).trailing_zeros() as usize;
        let mut comp = 1u128 << start;
        loop {
            let mut next = comp;
            let mut bits = comp;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= adj[v];
            }
            if next == comp {
                break;
            }
            comp = next;
        }
        seen |= comp;
        out.push(VertexSet::from_bits(comp));
    }
    out
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

/// Encodes a graph in the standard graph6 format (short form for `n < 63`,
/// long form above).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        out.push((((n >> 12) & 63) as u8 + 63) as char);
        out.push((((n >> 6) & 63) as u8 + 63) as char);
        out.push(((n & 63) as u8 + 63) as char);
    }
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        acc <<= 6 - nbits;
        out.push((acc + 63) as char);
    }
    out
}

/// Parses a graph6 string. The input must be a single complete encoding:
/// a malformed header, a truncated bit stream, trailing data and nonzero
/// padding bits are all rejected.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6("byte outside the graph6 alphabet".into()));
    }
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(Error::Graph6("graph too large for this crate".into()));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated long-form header".into()));
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nchars = nbits.div_ceil(6);
    if bytes.len() - pos < nchars {
        return Err(Error::Graph6("truncated bit stream".into()));
    }
    if bytes.len() - pos > nchars {
        return Err(Error::Graph6("trailing data after bit stream".into()));
    }
    let mut adj = vec![0u128; n];
    let mut acc: u32 = 0;
    let mut avail = 0;
    for j in 1..n {
        for i in 0..j {
            if avail == 0 {
                acc = (bytes[pos] - 63) as u32;
                pos += 1;
                avail = 6;
            }
            avail -= 1;
            if acc >> avail & 1 == 1 {
                adj[i] |= 1u128 << j;
                adj[j] |= 1u128 << i;
            }
        }
    }
    if avail > 0 && acc & ((1 << avail) - 1) != 0 {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    Ok(Graph::from_adj(adj))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn from_edge_list_basics() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.m(), 1);
        assert_eq!(c4().m(), 4);
        // duplicates collapse
        let g = Graph::from_edge_list(3, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn from_edge_list_errors() {
        assert!(matches!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            Graph::from_edge_list(2, &[(1, 1)]),
            Err(Error::LoopEdge(1))
        ));
        assert!(matches!(
            Graph::empty(200),
            Err(Error::TooManyVertices(200))
        ));
    }

    #[test]
    fn add_and_remove_edges() {
        let p4 = c4().remove_edge(0, 1).unwrap();
        assert_eq!(p4.m(), 3);
        assert_eq!(p4.leaves().to_vec(), vec![0, 1]);

        let chord = c4().add_edge(0, 2).unwrap();
        assert_eq!(chord.m(), 5);
        assert!(matches!(c4().add_edge(0, 1), Err(Error::EdgeExists(0, 1))));
        assert!(matches!(c4().add_edge(1, 1), Err(Error::LoopEdge(1))));
        assert!(matches!(
            c4().remove_edge(0, 2),
            Err(Error::NotAnEdge(0, 2))
        ));

        // removing everything may create isolated vertices; that is legal here
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let e = k2.remove_edges(&EdgeSet::new([(0, 1)])).unwrap();
        assert!(e.has_isolated_vertex());
    }

    #[test]
    fn remove_then_add_back_round_trips() {
        let g = complete(5);
        let es = EdgeSet::new([(0, 1), (2, 3), (0, 4)]);
        let mut h = g.remove_edges(&es).unwrap();
        for (u, v) in es.iter() {
            h = h.add_edge(u, v).unwrap();
        }
        assert_eq!(g, h);
    }

    #[test]
    fn degrees_and_extremes() {
        let k4 = complete(4);
        assert!((0..4).all(|v| k4.degree(v) == 3));
        assert_eq!((k4.min_degree(), k4.max_degree()), (3, 3));

        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.degree(0), 3);
        assert!((1..4).all(|v| star.degree(v) == 1));

        // wheel hub has degree n - 1
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (0, 4)];
        edges.extend([(1, 2), (2, 3), (3, 4), (4, 1)]);
        let w5 = Graph::from_edge_list(5, &edges).unwrap();
        assert_eq!(w5.degree(0), 4);
    }

    #[test]
    fn components_and_isolates() {
        let two_k2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let comps = two_k2.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));
        assert_eq!(comps.iter().map(|c| c.len()).sum::<usize>(), 4);

        assert_eq!(cycle(5).components().len(), 1);

        let with_isolate = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert!(with_isolate.has_isolated_vertex());
        assert!(!two_k2.has_isolated_vertex());
    }

    #[test]
    fn leaves_and_supports() {
        // bistar with 2 and 3 leaves: both centers are strong supports
        let g =
            Graph::from_edge_list(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)]).unwrap();
        assert_eq!(g.strong_support_vertices().to_vec(), vec![0, 1]);
        assert_eq!(g.support_vertices().to_vec(), vec![0, 1]);
        assert_eq!(g.leaf_neighbors(1).to_vec(), vec![4, 5, 6]);

        let p4 = path(4);
        assert_eq!(p4.leaves().to_vec(), vec![0, 3]);
        assert_eq!(p4.support_vertices().to_vec(), vec![1, 2]);
        assert!(p4.strong_support_vertices().is_empty());

        let c6 = cycle(6);
        assert!(c6.leaves().is_empty());
        assert!(c6.support_vertices().is_empty());
        assert!(c6.strong_support_vertices().is_empty());
    }

    #[test]
    fn epn_examples() {
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.epn(0, VertexSet::singleton(0)).to_vec(), vec![1, 2, 3]);

        let g = c4();
        let s: VertexSet = [0usize, 2].into_iter().collect();
        assert!(g.epn(0, s).is_empty());

        let p4 = path(4);
        let s: VertexSet = [1usize, 2].into_iter().collect();
        assert_eq!(p4.epn(1, s).to_vec(), vec![0]);
        // epn is always disjoint from S
        assert!(p4.epn(1, s).intersection(s).is_empty());
    }

    #[test]
    #[should_panic(expected = "epn requires v in S")]
    fn epn_rejects_outsider() {
        let p4 = path(4);
        let s: VertexSet = [1usize, 2].into_iter().collect();
        p4.epn(0, s);
    }

    /// Exhaustive DFS cycle search, used as an oracle for `girth`.
    fn girth_brute(g: &Graph) -> Option<usize> {
        fn extend(
            g: &Graph,
            start: usize,
            current: usize,
            visited: VertexSet,
            len: usize,
            best: &mut Option<usize>,
        ) {
            for w in g.neighbors(current).iter() {
                if w == start && len >= 3 {
                    if best.is_none_or(|b| len < b) {
                        *best = Some(len);
                    }
                } else if w > start && !visited.contains(w) {
                    let mut vis = visited;
                    vis.insert(w);
                    extend(g, start, w, vis, len + 1, best);
                }
            }
        }
        let mut best = None;
        for s in 0..g.n() {
            extend(g, s, s, VertexSet::singleton(s), 1, &mut best);
        }
        best
    }

    #[test]
    fn girth_and_diameter() {
        assert_eq!(cycle(5).girth(), Some(5));
        assert_eq!(complete(4).girth(), Some(3));
        assert_eq!(path(5).girth(), None);
        assert_eq!(path(5).diameter(), Some(4));
        assert_eq!(
            Graph::from_edge_list(4, &[(0, 1), (2, 3)])
                .unwrap()
                .diameter(),
            None
        );

        let chorded = cycle(6).add_edge(0, 3).unwrap();
        assert_eq!(girth_brute(&chorded), Some(4));
        assert_eq!(chorded.girth(), Some(4));

        // sanity: BFS girth agrees with the brute-force oracle on assorted graphs
        for g in [cycle(7), complete(5), path(6), c4(), chorded] {
            assert_eq!(g.girth(), girth_brute(&g), "girth mismatch on {g:?}");
        }
    }

    #[test]
    fn union_and_induced() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let two = k2.disjoint_union(&k2).unwrap();
        assert_eq!((two.n(), two.m()), (4, 2));
        assert!(two.has_edge(2, 3));

        let (p3, map) = cycle(5).induced_subgraph([0usize, 1, 2].into_iter().collect());
        assert_eq!((p3.n(), p3.m()), (3, 2));
        assert_eq!(map, vec![0, 1, 2]);

        let (empty, map) = cycle(5).induced_subgraph(VertexSet::EMPTY);
        assert_eq!(empty.n(), 0);
        assert!(map.is_empty());
    }

    /// Independent reference graph6 encoder built on plain strings.
    fn graph6_reference(g: &Graph) -> String {
        assert!(g.n() < 63);
        let mut bits = String::new();
        for j in 1..g.n() {
            for i in 0..j {
                bits.push(if g.has_edge(i, j) { '1' } else { '0' });
            }
        }
        while !bits.len().is_multiple_of(6) {
            bits.push('0');
        }
        let mut out = String::new();
        out.push((g.n() as u8 + 63) as char);
        for chunk in bits.as_bytes().chunks(6) {
            let mut val = 0u8;
            for &b in chunk {
                val = val * 2 + (b - b'0');
            }
            out.push((val + 63) as char);
        }
        out
    }

    #[test]
    fn graph6_round_trips() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(emit_graph6(&g), "D?{");
        assert_eq!(graph6_reference(&g), "D?{");

        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(emit_graph6(&k2), "A_");
        assert_eq!(graph6_reference(&k2), "A_");

        for g in [c4(), cycle(7), complete(6), path(9)] {
            let enc = emit_graph6(&g);
            assert_eq!(enc, graph6_reference(&g));
            assert_eq!(parse_graph6(&enc).unwrap(), g);
        }
    }

    #[test]
    fn graph6_long_form() {
        let p70 = {
            let edges: Vec<_> = (0..69).map(|i| (i, i + 1)).collect();
            Graph::from_edge_list(70, &edges).unwrap()
        };
        let enc = emit_graph6(&p70);
        assert!(enc.starts_with('~'));
        assert_eq!(parse_graph6(&enc).unwrap(), p70);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("D?"), Err(Error::Graph6(_)))); // truncated
        assert!(matches!(parse_graph6("D?{{"), Err(Error::Graph6(_)))); // trailing
        assert!(matches!(parse_graph6("A\u{7f}"), Err(Error::Graph6(_)))); // bad byte
    }

    #[test]
    fn edge_list_text_round_trip() {
        let g = c4();
        let text = g.to_edge_list_text();
        assert!(text.starts_with("4 4\n"));
        assert_eq!(Graph::parse_edge_list_text(&text).unwrap(), g);
        assert!(Graph::parse_edge_list_text("").is_err());
        assert!(Graph::parse_edge_list_text("2 1\n").is_err());
        assert!(Graph::parse_edge_list_text("2 1\n0 1\n1 0\n").is_err());
    }

    #[test]
    fn edge_set_canonicalizes() {
        let es = EdgeSet::new([(3, 1), (0, 2), (1, 3)]);
        assert_eq!(es.edges(), &[(0, 2), (1, 3)]);
        assert!(es.contains(3, 1));
        assert!(!es.contains(0, 1));
    }
}
