//! Immutable simple undirected graphs on the dense vertex range `0..n`.

pub mod edge_list;
pub mod generators;

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest order representable; vertex sets are 64-bit masks.
pub const MAX_VERTICES: usize = 64;

/// Structural facts that are never computed, only asserted by a generator
/// or by the caller.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GraphFlags {
    pub asserted_planar: bool,
    pub is_tree_by_construction: bool,
}

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    masks: Vec<u64>,
    flags: GraphFlags,
    tag: u64,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

/// Degrees sorted nonincreasingly, `d_1 >= d_2 >= ... >= d_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `d_1`; zero for the empty graph.
    pub fn max(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// `d_2`; zero when fewer than two vertices.
    pub fn second_max(&self) -> usize {
        self.0.get(1).copied().unwrap_or(0)
    }

    /// `d_n`; zero for the empty graph.
    pub fn min(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates (in
    /// either orientation) and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::Resource(format!(
                "order {n} exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        let mut masks = vec![0u64; n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!(
                    "edge {{{u},{v}}} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::domain(format!("self-loop at vertex {u}")));
            }
            if masks[u] >> v & 1 == 1 {
                return Err(Error::domain(format!("duplicate edge {{{u},{v}}}")));
            }
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        Ok(Self::assemble(n, list, masks, GraphFlags::default()))
    }

    fn assemble(n: usize, edges: Vec<(usize, usize)>, masks: Vec<u64>, flags: GraphFlags) -> Graph {
        let adj = masks
            .iter()
            .map(|&m| (0..n).filter(|&u| m >> u & 1 == 1).collect())
            .collect();
        let tag = fingerprint(n, &edges);
        Graph {
            n,
            edges,
            adj,
            masks,
            flags,
            tag,
        }
    }

    /// Marks the graph planar. Only the necessary edge-count condition
    /// `m <= 3(n-2)` is checked.
    pub fn assert_planar(mut self) -> Result<Graph> {
        if self.n >= 3 && self.m() > 3 * (self.n - 2) {
            return Err(Error::domain(format!(
                "planarity assertion rejected: m = {} > 3(n-2) = {}",
                self.m(),
                3 * (self.n - 2)
            )));
        }
        self.flags.asserted_planar = true;
        Ok(self)
    }

    pub(crate) fn assert_tree(mut self) -> Result<Graph> {
        if !self.is_tree() {
            return Err(Error::Internal("tree flag on a non-tree".into()));
        }
        self.flags.is_tree_by_construction = true;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn flags(&self) -> GraphFlags {
        self.flags
    }

    /// Structural fingerprint used to tag vertex sets.
    pub fn tag(&self) -> u64 {
        self.tag
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.masks[v]
    }

    pub fn neighbor_masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.masks[u] >> v & 1 == 1
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.n == MAX_VERTICES {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(d)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components_in_mask(self.full_mask()) == 1
    }

    /// Number of connected components of the subgraph induced by `s`.
    pub fn connected_components_of(&self, s: &VertexSet) -> usize {
        assert!(s.belongs_to(self), "vertex set belongs to another graph");
        self.components_in_mask(s.mask())
    }

    pub(crate) fn components_in_mask(&self, mask: u64) -> usize {
        let mut unseen = mask;
        let mut count = 0;
        while unseen != 0 {
            count += 1;
            let start = unseen.trailing_zeros() as usize;
            let mut frontier = 1u64 << start;
            unseen &= !frontier;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.masks[v] & unseen;
                unseen &= !fresh;
                frontier |= fresh;
            }
        }
        count
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].unwrap_or(0);
            for &u in &self.adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(dv + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Largest shortest-path distance, by BFS from every vertex.
    pub fn diameter(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::domain("diameter of the empty graph"));
        }
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Err(Error::domain("diameter of a disconnected graph")),
                }
            }
        }
        Ok(best)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges.iter().all(|&(u, v)| self.masks[u] & self.masks[v] == 0)
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree_sequence();
        d.max() == d.min()
    }

    pub fn is_cubic(&self) -> bool {
        self.n > 0 && (0..self.n).all(|v| self.degree(v) == 3)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    /// The subgraph induced by `s`, with members relabelled `0..|s|` in
    /// increasing order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        if !s.belongs_to(self) {
            return Err(Error::domain("vertex set belongs to another graph"));
        }
        if s.is_empty() {
            return Err(Error::domain("induced subgraph of an empty set"));
        }
        let members = s.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| s.contains(u) && s.contains(v))
            .map(|&(u, v)| (index[u], index[v]));
        Graph::new(members.len(), edges)
    }

    /// The line graph together with the map from its vertices to the edges
    /// of `self` (vertex `i` is `self.edges()[i]`).
    pub fn line_graph(&self) -> Result<(Graph, Vec<(usize, usize)>)> {
        if self.edges.is_empty() {
            return Err(Error::domain("line graph of a graph without edges"));
        }
        let m = self.m();
        let mut line_edges = Vec::new();
        for i in 0..m {
            let (a, b) = self.edges[i];
            for j in i + 1..m {
                let (c, d) = self.edges[j];
                if a == c || a == d || b == c || b == d {
                    line_edges.push((i, j));
                }
            }
        }
        let line = Graph::new(m, line_edges)?;
        Ok((line, self.edges.clone()))
    }
}

/// FNV-1a over the order and the sorted edge list.
fn fingerprint(n: usize, edges: &[(usize, usize)]) -> u64 {
    const PRIME: u64 = 0x100_0000_01b3;
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut feed = |x: u64| {
        for byte in x.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(PRIME);
        }
    };
    feed(n as u64);
    for &(u, v) in edges {
        feed(u as u64);
        feed(v as u64);
    }
    h
}
