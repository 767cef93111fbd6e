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


//! Regular Class 1 graphs used as inputs to the vertex-splitting check.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::classify::{find_coloring, SolverConfig, SolverError};
use crate::coloring::{Color, PartialEdgeColoring};
use crate::graph::{Edge, Graph, GraphError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FamilyKind {
    /// `K_n` for even `n`.
    CompleteEven { n: usize },
    /// `K_{d,d}`.
    CompleteBipartite { d: usize },
    /// The `d`-dimensional hypercube.
    Hypercube { d: usize },
    /// Circulant on `n` vertices, `i ~ i ± j` for each listed jump `j`.
    Circulant { n: usize, jumps: &'static [usize] },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameters do not give a valid graph: {0}")]
    Invalid(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("family member is not regular")]
    NotRegular,
    #[error("family member is Class 2")]
    ClassTwo,
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// A regular graph together with a Δ-edge-coloring certifying Class 1.
#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub name: String,
    pub graph: Arc<Graph>,
    pub coloring: PartialEdgeColoring,
}

/// The round-robin schedule: with `n − 1` placed on a circle's center,
/// round `r` pairs `r` with `n − 1` and `r − i` with `r + i` (mod `n − 1`).
pub fn round_robin_coloring(n: usize) -> Result<PartialEdgeColoring, FamilyError> {
    if n == 0 || n % 2 == 1 || n > 64 {
        return Err(FamilyError::Invalid(format!("round robin needs even n in 2..=64, got {n}")));
    }
    let g = Arc::new(Graph::complete(n)?);
    let m = n - 1;
    let mut c = PartialEdgeColoring::new(g, m as u8).map_err(|e| FamilyError::Invalid(e.to_string()))?;
    for r in 0..m {
        let col = Color(r as u8 + 1);
        c.assign(Edge::new(r, m), col).map_err(|e| FamilyError::Invalid(e.to_string()))?;
        for i in 1..=(m - 1) / 2 {
            let x = (r + m - i) % m;
            let y = (r + i) % m;
            c.assign(Edge::new(x, y), col).map_err(|e| FamilyError::Invalid(e.to_string()))?;
        }
    }
    Ok(c)
}

fn hypercube(d: usize) -> Result<Graph, GraphError> {
    let n = 1usize << d;
    let edges = (0..n).flat_map(|v| (0..d).map(move |i| (v, v ^ (1 << i)))).filter(|(u, v)| u < v);
    Graph::from_edges(n, edges)
}

fn circulant(n: usize, jumps: &[usize]) -> Result<Graph, FamilyError> {
    if jumps.iter().any(|&j| j == 0 || 2 * j > n) {
        return Err(FamilyError::Invalid(format!("jumps must lie in 1..=n/2, got {jumps:?}")));
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 0..n {
        for &j in jumps {
            let w = (v + j) % n;
            let e = (v.min(w), v.max(w));
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// Builds a family member. Complete graphs of even order are certified by
/// the round-robin schedule, the others by the exact solver.
pub fn class1_regular_family(kind: FamilyKind) -> Result<FamilyMember, FamilyError> {
    let (name, graph) = match kind {
        FamilyKind::CompleteEven { n } => {
            let c = round_robin_coloring(n)?;
            return Ok(FamilyMember { name: format!("K{n}"), graph: c.shared_graph().clone(), coloring: c });
        }
        FamilyKind::CompleteBipartite { d } => {
            let edges = (0..d).flat_map(|i| (0..d).map(move |j| (i, d + j)));
            (format!("K{d},{d}"), Graph::from_edges(2 * d, edges)?)
        }
        FamilyKind::Hypercube { d } => (format!("Q{d}"), hypercube(d)?),
        FamilyKind::Circulant { n, jumps } => {
            let js: Vec<String> = jumps.iter().map(|j| j.to_string()).collect();
            (format!("C{n}({})", js.join(",")), circulant(n, jumps)?)
        }
    };
    if !graph.is_regular() {
        return Err(FamilyError::NotRegular);
    }
    let graph = Arc::new(graph);
    let delta = graph.max_degree();
    let coloring = find_coloring(&graph, delta as u8, None, SolverConfig::default())?.ok_or(FamilyError::ClassTwo)?;
    Ok(FamilyMember { name, graph, coloring })
}

/// The default family list for the splitting check.
pub fn default_families() -> Vec<FamilyKind> {
    vec![
        FamilyKind::CompleteEven { n: 4 },
        FamilyKind::CompleteEven { n: 6 },
        FamilyKind::CompleteBipartite { d: 3 },
        FamilyKind::Hypercube { d: 3 },
        FamilyKind::Circulant { n: 8, jumps: &[1, 2] },
        FamilyKind::CompleteEven { n: 8 },
        FamilyKind::Circulant { n: 8, jumps: &[1, 2, 3] },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_robin_is_a_one_factorization() {
        for n in [2, 4, 6, 8, 10] {
            let c = round_robin_coloring(n).unwrap();
            assert!(c.is_full() && c.validate(), "K{n}");
            assert_eq!(c.k() as usize, n - 1);
        }
        assert!(round_robin_coloring(5).is_err());
    }

    #[test]
    fn families_are_regular_class_one() {
        for kind in default_families() {
            let m = class1_regular_family(kind).unwrap();
            assert!(m.graph.is_regular());
            assert!(m.coloring.is_full() && m.coloring.validate());
            assert_eq!(m.coloring.k() as usize, m.graph.max_degree(), "{}", m.name);
        }
    }

    #[test]
    fn class_two_member_rejected() {
        // C5 is 2-regular and Class 2
        let e = class1_regular_family(FamilyKind::Circulant { n: 5, jumps: &[1] }).unwrap_err();
        assert_eq!(e, FamilyError::ClassTwo);
    }
}
