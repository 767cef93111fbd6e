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


//! Loopless multigraphs produced by identifying the endpoints of an edge.

use serde::{Deserialize, Serialize};

use super::{Edge, Graph, GraphError, VertexId};
use crate::coloring::Color;

/// A loopless multigraph stored as a sorted edge multiset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
}

impl Multigraph {
    /// Builds a multigraph; loops are rejected, parallel edges kept.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Multigraph, GraphError> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        for e in &edges {
            let (u, v) = e.endpoints();
            if v.0 >= n {
                return Err(GraphError::VertexOutOfRange(v.0, n));
            }
            if u == v {
                return Err(GraphError::Loop(u.0));
            }
        }
        edges.sort_unstable();
        Ok(Multigraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges in sorted order, one entry per parallel copy.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        let e = Edge::new(u, v);
        self.edges.iter().filter(|&&f| f == e).count()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            let (u, v) = e.endpoints();
            d[u.0] += 1;
            d[v.0] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.iter().all(|&x| Some(&x) == d.first())
    }

    /// True when `colors[i]` colors `edges()[i]`, every color is in `1..=k`,
    /// and no two edges at a vertex share a color.
    pub fn is_proper_edge_coloring(&self, colors: &[Color], k: u8) -> bool {
        if colors.len() != self.edges.len() {
            return false;
        }
        let mut seen = vec![0u64; self.n];
        for (e, c) in self.edges.iter().zip(colors) {
            if c.0 == 0 || c.0 > k {
                return false;
            }
            let bit = 1u64 << c.0;
            let (u, v) = e.endpoints();
            if seen[u.0] & bit != 0 || seen[v.0] & bit != 0 {
                return false;
            }
            seen[u.0] |= bit;
            seen[v.0] |= bit;
        }
        true
    }
}

/// Index map used by [`identify_pair`]: the merged vertex takes the smaller
/// of the two indices and later vertices shift down past the larger one.
pub fn merge_map(n: usize, a: VertexId, b: VertexId) -> Vec<usize> {
    let (lo, hi) = if a < b { (a.0, b.0) } else { (b.0, a.0) };
    (0..n)
        .map(|v| match v {
            _ if v == hi => lo,
            _ if v > hi => v - 1,
            _ => v,
        })
        .collect()
}

/// Merges adjacent `a` and `b`, dropping the edge `ab` and keeping every
/// other incidence; shared neighbors become parallel edges.
pub fn identify_pair(g: &Graph, a: VertexId, b: VertexId) -> Result<Multigraph, GraphError> {
    if !g.has_edge(a, b) {
        return Err(GraphError::NotAdjacent(a, b));
    }
    let map = merge_map(g.n(), a, b);
    let ab = Edge::new(a, b);
    Multigraph::new(
        g.n() - 1,
        g.edges()
            .iter()
            .filter(|&&e| e != ab)
            .map(|e| {
                let (u, v) = e.endpoints();
                Edge::new(map[u.0], map[v.0])
            }),
    )
}
