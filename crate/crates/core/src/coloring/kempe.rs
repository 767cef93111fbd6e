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


//! Kempe chains and the swaps built on them.
//!
//! Chains are found by alternating walks: leave a vertex on an α or β edge,
//! then keep taking the edge of the other color. In a proper coloring every
//! walk traces a path or an even cycle. Walks also work in the transient
//! improper states of a swap script, as long as the vertices they meet carry
//! each of the two colors at most once.

use serde::Serialize;

use super::{Color, ColoringError, PartialEdgeColoring};
use crate::graph::{Edge, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainKind {
    Path,
    Cycle,
}

/// A maximal (α,β)-alternating path or cycle. For a cycle the first vertex
/// is not repeated at the end and `edges.len() == vertices.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KempeChain {
    pub colors: (Color, Color),
    pub kind: ChainKind,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Edge>,
}

impl KempeChain {
    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// End vertices of a path (equal for a trivial path); `None` for a cycle.
    pub fn endpoints(&self) -> Option<(VertexId, VertexId)> {
        match self.kind {
            ChainKind::Cycle => None,
            ChainKind::Path => Some((self.vertices[0], *self.vertices.last().unwrap())),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    fn edge_set(&self) -> Vec<Edge> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }
}

pub(crate) struct Walk {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Edge>,
    pub closed: bool,
}

fn other(c: Color, a: Color, b: Color) -> Color {
    if c == a {
        b
    } else {
        a
    }
}

impl PartialEdgeColoring {
    /// Alternating walk from `start` whose first edge is `start–first`.
    pub(crate) fn walk(
        &self,
        start: VertexId,
        first: VertexId,
        a: Color,
        b: Color,
    ) -> Result<Walk, ColoringError> {
        let c0 = self
            .color(start, first)
            .filter(|&c| c == a || c == b)
            .ok_or(ColoringError::NotOnChain(Edge::new(start, first)))?;
        let mut vertices = vec![start, first];
        let mut edges = vec![Edge::new(start, first)];
        let mut visited = 1u64 << start.0 | 1u64 << first.0;
        let mut cur = first;
        let mut last = c0;
        loop {
            let next_color = other(last, a, b);
            match self.count(cur, next_color) {
                0 => return Ok(Walk { vertices, edges, closed: false }),
                1 => {}
                _ => return Err(ColoringError::Branching(a, b, cur)),
            }
            let w = self.neighbor_by_color(cur, next_color).expect("count is one");
            edges.push(Edge::new(cur, w));
            if w == start {
                return Ok(Walk { vertices, edges, closed: true });
            }
            if visited >> w.0 & 1 == 1 {
                return Err(ColoringError::Branching(a, b, w));
            }
            visited |= 1 << w.0;
            vertices.push(w);
            cur = w;
            last = next_color;
        }
    }

    /// Neighbors of `v` joined to it by an edge colored `a` or `b`.
    pub(crate) fn chain_neighbors(&self, v: VertexId, a: Color, b: Color) -> Vec<VertexId> {
        let mut out = Vec::new();
        for c in [a, b] {
            if self.present(v).contains(c) {
                out.extend(self.graph().neighbors(v).filter(|&w| self.color(v, w) == Some(c)));
            }
        }
        out
    }

    /// The (α,β)-component containing `v`. A vertex with no α or β edge gives
    /// the trivial one-vertex path.
    pub fn chain_through(&self, v: VertexId, a: Color, b: Color) -> Result<KempeChain, ColoringError> {
        if a == b {
            return Err(ColoringError::SameColors);
        }
        let nbrs = self.chain_neighbors(v, a, b);
        let path = |vertices, edges| KempeChain {
            colors: (a, b),
            kind: ChainKind::Path,
            vertices,
            edges,
        };
        match nbrs.as_slice() {
            [] => Ok(path(vec![v], vec![])),
            [w] => {
                let walk = self.walk(v, *w, a, b)?;
                debug_assert!(!walk.closed);
                Ok(path(walk.vertices, walk.edges))
            }
            [w1, w2] => {
                let forward = self.walk(v, *w1, a, b)?;
                if forward.closed {
                    return Ok(KempeChain {
                        colors: (a, b),
                        kind: ChainKind::Cycle,
                        vertices: forward.vertices,
                        edges: forward.edges,
                    });
                }
                let backward = self.walk(v, *w2, a, b)?;
                let mut vertices: Vec<VertexId> = backward.vertices.into_iter().rev().collect();
                vertices.extend_from_slice(&forward.vertices[1..]);
                let mut edges: Vec<Edge> = backward.edges.into_iter().rev().collect();
                edges.extend(forward.edges);
                Ok(path(vertices, edges))
            }
            _ => Err(ColoringError::Branching(a, b, v)),
        }
    }

    /// Whether `x` and `y` lie on the same (α,β)-chain. Requires the coloring
    /// to be proper along the chain through `x`.
    pub fn are_linked(&self, x: VertexId, y: VertexId, a: Color, b: Color) -> bool {
        if x == y {
            return true;
        }
        self.chain_through(x, a, b)
            .expect("are_linked needs a proper coloring")
            .contains(y)
    }

    /// Exchanges `a` and `b` on the given edges.
    pub(crate) fn swap_edges(&mut self, edges: &[Edge], a: Color, b: Color) -> Result<(), ColoringError> {
        let mut plan = Vec::with_capacity(edges.len());
        for &e in edges {
            let (u, v) = e.endpoints();
            let i = self.graph().edge_index(u, v).ok_or(ColoringError::NoSuchEdge(e))?;
            let c = self.color_at(i).filter(|&c| c == a || c == b);
            let c = c.ok_or(ColoringError::NotOnChain(e))?;
            plan.push((i, other(c, a, b)));
        }
        for (i, c) in plan {
            self.set_raw(i, Some(c));
        }
        Ok(())
    }

    /// Kempe change along `chain`, which must still be a component.
    pub fn swap_chain(&mut self, chain: &KempeChain) -> Result<(), ColoringError> {
        let (a, b) = chain.colors;
        let start = *chain.vertices.first().ok_or(ColoringError::StaleChain)?;
        let current = self.chain_through(start, a, b).map_err(|_| ColoringError::StaleChain)?;
        if current.edge_set() != chain.edge_set() || current.kind != chain.kind {
            return Err(ColoringError::StaleChain);
        }
        self.swap_edges(&chain.edges, a, b)
    }

    /// The chain P_x(α,β) starting at `x`. With `via`, the first edge is
    /// `x–via`; without it `x` must be an end of its path or lie on a cycle.
    pub fn chain_from(
        &self,
        x: VertexId,
        via: Option<VertexId>,
        a: Color,
        b: Color,
    ) -> Result<Vec<Edge>, ColoringError> {
        if a == b {
            return Ok(Vec::new());
        }
        let first = match via {
            Some(w) => w,
            None => match self.chain_neighbors(x, a, b).as_slice() {
                [] => return Ok(Vec::new()),
                [w] => *w,
                [w, _] => {
                    let walk = self.walk(x, *w, a, b)?;
                    if walk.closed {
                        return Ok(walk.edges);
                    }
                    return Err(ColoringError::NeedsDirection(x, a, b));
                }
                _ => return Err(ColoringError::Branching(a, b, x)),
            },
        };
        Ok(self.walk(x, first, a, b)?.edges)
    }

    /// Swaps along P_x(α,β) and returns the swapped edges. An (α,α)-swap
    /// does nothing.
    pub fn swap_at(
        &mut self,
        x: VertexId,
        via: Option<VertexId>,
        a: Color,
        b: Color,
    ) -> Result<Vec<Edge>, ColoringError> {
        let edges = self.chain_from(x, via, a, b)?;
        self.swap_edges(&edges, a, b)?;
        Ok(edges)
    }

    /// Edges of the segment P_[x,y](α,β) of the chain from `x` that reaches `y`.
    pub fn subchain(&self, x: VertexId, y: VertexId, a: Color, b: Color) -> Result<Vec<Edge>, ColoringError> {
        if x == y || a == b {
            return Ok(Vec::new());
        }
        let mut found: Option<Vec<Edge>> = None;
        let mut cycle = false;
        for w in self.chain_neighbors(x, a, b) {
            let Ok(walk) = self.walk(x, w, a, b) else { continue };
            if let Some(pos) = walk.vertices.iter().position(|&z| z == y) {
                if found.is_some() || walk.closed {
                    cycle = true;
                }
                found = Some(walk.edges[..pos].to_vec());
            }
        }
        if cycle {
            return Err(ColoringError::CycleSegment(x, a, b));
        }
        found.ok_or(ColoringError::NotLinked(x, y, a, b))
    }

    /// Exchanges α and β on P_[x,y](α,β) only. The result can be improper at
    /// `x` or `y`; callers are responsible for restoring propriety.
    pub fn swap_subchain(&mut self, x: VertexId, y: VertexId, a: Color, b: Color) -> Result<Vec<Edge>, ColoringError> {
        let edges = self.subchain(x, y, a, b)?;
        self.swap_edges(&edges, a, b)?;
        Ok(edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::tests::{triangle_minus_ab, v};
    use crate::graph::Graph;
    use std::sync::Arc;

    #[test]
    fn triangle_chain_is_path_a_c_b() {
        let c = triangle_minus_ab();
        let ch = c.chain_through(v(0), Color(1), Color(2)).unwrap();
        assert_eq!(ch.kind, ChainKind::Path);
        assert_eq!(ch.vertices, vec![v(0), v(2), v(1)]);
        assert!(c.are_linked(v(0), v(1), Color(1), Color(2)));
        assert!(c.are_linked(v(1), v(0), Color(2), Color(1)));
    }

    #[test]
    fn swap_chain_exchanges_and_is_involution() {
        let mut c = triangle_minus_ab();
        let orig = c.clone();
        let ch = c.chain_through(v(0), Color(1), Color(2)).unwrap();
        c.swap_chain(&ch).unwrap();
        assert_eq!(c.color(v(0), v(2)), Some(Color(2)));
        assert_eq!(c.color(v(1), v(2)), Some(Color(1)));
        assert!(c.validate());
        c.swap_chain(&ch).unwrap();
        assert_eq!(c, orig);
    }

    #[test]
    fn stale_chain_rejected() {
        let mut c = triangle_minus_ab();
        let ch = c.chain_through(v(0), Color(1), Color(2)).unwrap();
        c.uncolor_edge(Edge::new(1, 2)).unwrap();
        assert_eq!(c.swap_chain(&ch), Err(ColoringError::StaleChain));
    }

    #[test]
    fn alternating_c4_is_cycle() {
        let g = Arc::new(Graph::cycle(4).unwrap());
        let c = PartialEdgeColoring::from_assignment(
            g,
            2,
            &[Some(Color(1)), Some(Color(2)), Some(Color(2)), Some(Color(1))],
        )
        .unwrap();
        for x in 0..4 {
            let ch = c.chain_through(v(x), Color(1), Color(2)).unwrap();
            assert_eq!(ch.kind, ChainKind::Cycle);
            assert_eq!(ch.edges.len(), 4);
        }
        assert_eq!(c.subchain(v(0), v(2), Color(1), Color(2)), Err(ColoringError::CycleSegment(v(0), Color(1), Color(2))));
    }

    #[test]
    fn trivial_chain_and_swap() {
        let g = Arc::new(Graph::path(3).unwrap());
        let mut c = PartialEdgeColoring::new(g, 3).unwrap();
        c.assign(Edge::new(0, 1), Color(1)).unwrap();
        let ch = c.chain_through(v(2), Color(1), Color(2)).unwrap();
        assert!(ch.is_trivial());
        let before = c.clone();
        c.swap_chain(&ch).unwrap();
        assert_eq!(c, before);
        assert!(c.swap_at(v(0), None, Color(3), Color(3)).unwrap().is_empty());
    }

    #[test]
    fn subchain_segments() {
        // path 0-1-2-3-4 colored 1,2,1,2
        let g = Arc::new(Graph::path(5).unwrap());
        let col = [1, 2, 1, 2].map(|x| Some(Color(x)));
        let c = PartialEdgeColoring::from_assignment(g, 3, &col).unwrap();
        assert_eq!(c.subchain(v(1), v(3), Color(1), Color(2)).unwrap(), vec![Edge::new(1, 2), Edge::new(2, 3)]);
        assert!(c.subchain(v(2), v(2), Color(1), Color(2)).unwrap().is_empty());
        let whole = c.subchain(v(0), v(4), Color(1), Color(2)).unwrap();
        let mut a = c.clone();
        a.swap_edges(&whole, Color(1), Color(2)).unwrap();
        let mut b = c.clone();
        b.swap_chain(&c.chain_through(v(2), Color(1), Color(2)).unwrap()).unwrap();
        assert_eq!(a, b);
        assert_eq!(c.chain_from(v(2), None, Color(1), Color(2)), Err(ColoringError::NeedsDirection(v(2), Color(1), Color(2))));
        assert_eq!(c.chain_from(v(2), Some(v(3)), Color(1), Color(2)).unwrap(), vec![Edge::new(2, 3), Edge::new(3, 4)]);
        assert!(matches!(c.subchain(v(0), v(4), Color(1), Color(3)), Err(ColoringError::NotLinked(..))));
    }
}
