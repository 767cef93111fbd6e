// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.


//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! A [`Graph`] is immutable once built. Adjacency is stored as one `u64`
//! bitmask per vertex, which keeps neighborhood intersections and degree
//! queries cheap for the small dense graphs this crate works with.

mod canon;
mod fixtures;
mod graph6;
mod multigraph;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use fixtures::{builtin_fixture, fixture_names};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use multigraph::{identify_pair, merge_map, Multigraph};

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

const NO_EDGE: u32 = u32::MAX;

/// Dense vertex index in `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for VertexId {
    fn from(v: usize) -> Self {
        VertexId(v)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(VertexId, VertexId);

impl Edge {
    pub fn new(u: impl Into<VertexId>, v: impl Into<VertexId>) -> Edge {
        let (u, v) = (u.into(), v.into());
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.0, self.1)
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`. Panics if `v` is not an endpoint.
    pub fn other(self, v: VertexId) -> VertexId {
        if self.0 == v {
            self.1
        } else {
            assert_eq!(self.1, v, "{v} is not an endpoint of {self}");
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0} listed twice")]
    ParallelEdge(Edge),
    #[error("edge {0} is not in the graph")]
    MissingEdge(Edge),
    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(VertexId, VertexId),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<Edge>,
    // n*n table of edge indices, NO_EDGE when absent
    edge_ids: Vec<u32>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Empty graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, std::iter::empty::<(usize, usize)>())
    }

    /// Builds a graph from an edge list. Loops, duplicates and out-of-range
    /// endpoints are rejected.
    pub fn from_edges<I, U>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (U, U)>,
        U: Into<VertexId>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            let (u, v) = (u.into().0, v.into().0);
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange(w, n));
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(GraphError::ParallelEdge(Edge::new(u, v)));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// Builds a graph from symmetric, loop-free adjacency bitmasks.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Graph {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        let mut edges = Vec::new();
        let mut edge_ids = vec![NO_EDGE; n * n];
        for u in 0..n {
            debug_assert_eq!(adj[u] >> u & 1, 0, "loop at {u}");
            for v in (u + 1)..n {
                if adj[u] >> v & 1 == 1 {
                    debug_assert_eq!(adj[v] >> u & 1, 1, "asymmetric adjacency");
                    let id = edges.len() as u32;
                    edge_ids[u * n + v] = id;
                    edge_ids[v * n + u] = id;
                    edges.push(Edge::new(u, v));
                }
            }
        }
        Graph {
            n,
            adj,
            edges,
            edge_ids,
        }
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(Graph::from_adjacency(
            (0..n).map(|v| full & !(1u64 << v)).collect(),
        ))
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// The star `K_{1,m}` with hub 0.
    pub fn star(m: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(m + 1, (1..=m).map(|i| (0, i)))
    }

    /// Disjoint union, with `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let shift = self.n;
        Graph::from_edges(
            self.n + other.n,
            self.edges.iter().map(|e| (e.0 .0, e.1 .0)).chain(
                other
                    .edges
                    .iter()
                    .map(|e| (e.0 .0 + shift, e.1 .0 + shift)),
            ),
        )
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId)
    }

    #[inline]
    pub fn neighbor_mask(&self, v: VertexId) -> u64 {
        self.adj[v.0]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> {
        bits(self.adj[v.0]).map(VertexId)
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.0].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u.0 < self.n && v.0 < self.n && self.adj[u.0] >> v.0 & 1 == 1
    }

    /// Stable index of `uv` in [`Graph::edges`].
    #[inline]
    pub fn edge_index(&self, u: VertexId, v: VertexId) -> Option<usize> {
        if u.0 >= self.n || v.0 >= self.n {
            return None;
        }
        match self.edge_ids[u.0 * self.n + v.0] {
            NO_EDGE => None,
            id => Some(id as usize),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// `|E| > Δ·⌊n/2⌋`. For odd `n` this is the same as comparing against
    /// `Δ·⌊(n-1)/2⌋`; for even `n` neither form can hold.
    pub fn is_overfull(&self) -> bool {
        self.edge_count() > self.max_degree() * (self.n / 2)
    }

    /// Adjacent pairs `(u, v)`, `u < v`, with `d(u) + d(v) = Δ + 2`.
    pub fn full_deficiency_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let target = self.max_degree() + 2;
        self.edges
            .iter()
            .filter(|e| self.degree(e.0) + self.degree(e.1) == target)
            .map(|e| (e.0, e.1))
            .collect()
    }

    /// Shortest-path distance from `u` to the nearest vertex of `targets`;
    /// `None` when no target is reachable.
    pub fn distance_to_set(&self, u: VertexId, targets: &[VertexId]) -> Option<usize> {
        let target_mask = targets.iter().fold(0u64, |m, t| m | 1 << t.0);
        if target_mask >> u.0 & 1 == 1 {
            return Some(0);
        }
        let mut seen = 1u64 << u.0;
        let mut frontier = 1u64 << u.0;
        let mut dist = 0;
        while frontier != 0 {
            dist += 1;
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            if next & target_mask != 0 {
                return Some(dist);
            }
            seen |= next;
            frontier = next;
        }
        None
    }

    /// BFS distances from `u`; unreachable vertices get `None`.
    pub fn distances_from(&self, u: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[u.0] = Some(0);
        let mut queue = VecDeque::from([u.0]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for w in bits(self.adj[v]) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertex sets of the connected components, each as a bitmask, ordered by
    /// smallest vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << v;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for w in bits(frontier) {
                    next |= self.adj[w];
                }
                next &= !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_masks().len() == 1
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for w in bits(self.adj[v]) {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn without_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        let (u, v) = e.endpoints();
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(e));
        }
        let mut adj = self.adj.clone();
        adj[u.0] &= !(1 << v.0);
        adj[v.0] &= !(1 << u.0);
        Ok(Graph::from_adjacency(adj))
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for e in &self.edges {
            let (u, v) = (perm[e.0 .0], perm[e.1 .0]);
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Graph::from_adjacency(adj)
    }

    /// Splits `spec.vertex` into two adjacent vertices. The first half keeps
    /// the original index and receives `spec.part_one`; the second half is
    /// appended as vertex `n` and receives the remaining neighbors.
    pub fn split_vertex(&self, spec: &SplitSpec) -> Result<Graph, GraphError> {
        spec.validate(self)?;
        if self.n + 1 > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.n + 1));
        }
        let v = spec.vertex.0;
        let v2 = self.n;
        let part_mask = spec.part_one.iter().fold(0u64, |m, w| m | 1 << w.0);
        let rest = self.adj[v] & !part_mask;
        let mut adj = self.adj.clone();
        adj.push(0);
        for w in bits(rest) {
            adj[w] = (adj[w] & !(1 << v)) | 1 << v2;
        }
        adj[v] = part_mask | 1 << v2;
        adj[v2] = rest | 1 << v;
        Ok(Graph::from_adjacency(adj))
    }

    /// Checks symmetry, loop-freeness and the edge index table.
    pub fn validate(&self) -> bool {
        (0..self.n).all(|u| {
            self.adj[u] >> u & 1 == 0
                && (self.n == 64 || self.adj[u] >> self.n == 0)
                && bits(self.adj[u]).all(|v| self.adj[v] >> u & 1 == 1)
        }) && self
            .edges
            .iter()
            .enumerate()
            .all(|(i, e)| self.edge_index(e.0, e.1) == Some(i))
            && self.edges.len() * 2
                == self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>()
    }
}

/// Vertex-splitting parameters: the vertex and the neighbors that go to the
/// first half. Both halves must keep at least one original neighbor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSpec {
    pub vertex: VertexId,
    pub part_one: Vec<VertexId>,
}

impl SplitSpec {
    pub fn new(vertex: impl Into<VertexId>, part_one: impl IntoIterator<Item = usize>) -> Self {
        SplitSpec {
            vertex: vertex.into(),
            part_one: part_one.into_iter().map(VertexId).collect(),
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        let v = self.vertex;
        if v.0 >= g.n() {
            return Err(GraphError::VertexOutOfRange(v.0, g.n()));
        }
        let mut mask = 0u64;
        for w in &self.part_one {
            if !g.has_edge(v, *w) {
                return Err(GraphError::InvalidSplit(format!(
                    "{w} is not a neighbor of {v}"
                )));
            }
            if mask >> w.0 & 1 == 1 {
                return Err(GraphError::InvalidSplit(format!("{w} listed twice")));
            }
            mask |= 1 << w.0;
        }
        let s = self.part_one.len();
        if s == 0 || s >= g.degree(v) {
            return Err(GraphError::InvalidSplit(format!(
                "part size {s} outside [1, {}]",
                g.degree(v).saturating_sub(1)
            )));
        }
        Ok(())
    }
}

/// Iterates the set bit positions of `mask` in increasing order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn max_degree_of_fixtures() {
        assert_eq!(builtin_fixture("triangle").unwrap().max_degree(), 2);
        assert_eq!(builtin_fixture("pstar").unwrap().max_degree(), 3);
        assert_eq!(builtin_fixture("splitk4").unwrap().max_degree(), 3);
    }

    #[test]
    fn overfull_examples() {
        assert!(builtin_fixture("triangle").unwrap().is_overfull());
        assert!(!builtin_fixture("pstar").unwrap().is_overfull());
        assert!(builtin_fixture("splitk4").unwrap().is_overfull());
        for g in [Graph::cycle(5), Graph::complete(5), Graph::complete(7)] {
            assert!(g.unwrap().is_overfull());
        }
        assert!(!Graph::complete(6).unwrap().is_overfull());
    }

    #[test]
    fn split_k4_matches_fixture() {
        let k4 = Graph::complete(4).unwrap();
        let g = k4.split_vertex(&SplitSpec::new(0, [1])).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 7);
        let degrees: Vec<usize> = g.vertices().map(|x| g.degree(x)).collect();
        assert_eq!(degrees, vec![2, 3, 3, 3, 3]);
        assert_eq!(g, builtin_fixture("splitk4").unwrap());
        assert!(g.validate());
    }

    #[test]
    fn split_c5() {
        let c5 = Graph::cycle(5).unwrap();
        let g = c5.split_vertex(&SplitSpec::new(0, [1])).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 6);
        // still a single 6-cycle: 0-1-2-3-4-5-0
        assert_eq!(g.degree_sequence(), vec![2; 6]);
        assert!(g.is_connected());
    }

    #[test]
    fn split_of_regular_graph_degrees() {
        let k6 = Graph::complete(6).unwrap();
        for s in 1..5 {
            let g = k6.split_vertex(&SplitSpec::new(2, (0..6).filter(|&w| w != 2).take(s))).unwrap();
            assert_eq!(g.degree(v(2)), s + 1);
            assert_eq!(g.degree(v(6)), 5 - s + 1);
            assert!(g.vertices().filter(|&x| x != v(2) && x != v(6)).all(|x| g.degree(x) == 5));
        }
    }

    #[test]
    fn invalid_splits_rejected() {
        let k4 = Graph::complete(4).unwrap();
        assert!(matches!(
            k4.split_vertex(&SplitSpec::new(0, [])),
            Err(GraphError::InvalidSplit(_))
        ));
        assert!(matches!(
            k4.split_vertex(&SplitSpec::new(0, [1, 2, 3])),
            Err(GraphError::InvalidSplit(_))
        ));
        assert!(k4.split_vertex(&SplitSpec::new(0, [0])).is_err());
    }

    #[test]
    fn full_deficiency_pairs_examples() {
        let tri = builtin_fixture("triangle").unwrap();
        assert_eq!(tri.full_deficiency_pairs().len(), 3);
        let sk4 = builtin_fixture("splitk4").unwrap();
        assert_eq!(
            sk4.full_deficiency_pairs(),
            vec![(v(0), v(1)), (v(0), v(4))]
        );
        assert!(Graph::complete(4).unwrap().full_deficiency_pairs().is_empty());
    }

    #[test]
    fn distance_to_set_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.distance_to_set(v(0), &[v(0)]), Some(0));
        assert_eq!(c5.distance_to_set(v(2), &[v(0)]), Some(2));
        let two = c5.disjoint_union(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(two.distance_to_set(v(1), &[v(6)]), None);
    }

    #[test]
    fn rejects_malformed_edge_lists() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(GraphError::Loop(0)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::ParallelEdge(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange(3, 3))
        ));
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn bipartite_and_components() {
        assert!(Graph::cycle(6).unwrap().is_bipartite());
        assert!(!Graph::cycle(5).unwrap().is_bipartite());
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.component_masks(), vec![0b00011, 0b00100, 0b11000]);
        assert!(!g.is_connected());
    }
}
