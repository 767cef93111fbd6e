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


//! Chromatic index and criticality.
//!
//! By Vizing's theorem χ′(G) ∈ {Δ, Δ+1}, so deciding the class of a graph is
//! a single question: does G have a Δ-edge-coloring? The exact solver
//! answers it by backtracking ([`exact_chromatic_index`]); the constructive
//! upper bound comes from [`vizing_plus_one_coloring`].

mod exact;
mod vizing;

pub use vizing::vizing_plus_one_coloring;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, PartialEdgeColoring};
use crate::graph::{Edge, Graph};

/// Default cap on search nodes per solver call.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Class {
    One,
    Two,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Class::One => write!(f, "Class 1"),
            Class::Two => write!(f, "Class 2"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    /// The node budget ran out. `deepest` is the largest number of edges
    /// colored simultaneously; rerun with a larger budget to continue.
    #[error("search budget exhausted after {nodes} nodes (deepest partial coloring: {deepest} edges)")]
    Budget { nodes: u64, deepest: usize },
    #[error("graph is Class 1; criticality is only defined for Class 2 graphs")]
    NotClassTwo,
    #[error("edge {0} is not in the graph")]
    NoSuchEdge(Edge),
    #[error("edge {0} is not critical: G minus it has no Δ-coloring")]
    NotCritical(Edge),
}

/// Solver settings. `seed` randomizes tie-breaks so repeated calls return
/// different colorings; `None` breaks ties by smallest index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub budget: u64,
    pub seed: Option<u64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget: DEFAULT_BUDGET,
            seed: None,
        }
    }
}

impl SolverConfig {
    pub fn seeded(seed: u64) -> Self {
        SolverConfig {
            seed: Some(seed),
            ..Default::default()
        }
    }
}

fn to_coloring(g: &Arc<Graph>, k: u8, colors: &[u8]) -> PartialEdgeColoring {
    let assignment: Vec<Option<Color>> = colors.iter().map(|&c| (c != 0).then_some(Color(c))).collect();
    PartialEdgeColoring::from_assignment(g.clone(), k, &assignment).expect("solver output is proper")
}

/// A proper k-coloring of `g` minus `skip` (which stays uncolored), if any.
pub fn find_coloring(
    g: &Arc<Graph>,
    k: u8,
    skip: Option<Edge>,
    config: SolverConfig,
) -> Result<Option<PartialEdgeColoring>, SolverError> {
    let skip = match skip {
        Some(e) => {
            let (u, v) = e.endpoints();
            Some(g.edge_index(u, v).ok_or(SolverError::NoSuchEdge(e))?)
        }
        None => None,
    };
    if k == 0 {
        return Ok((g.edge_count() == skip.map_or(0, |_| 1)).then(|| {
            PartialEdgeColoring::new(g.clone(), 1).expect("palette fits")
        }));
    }
    let mut budget = exact::Budget::new(config.budget);
    let sol = exact::solve(g, k, skip, config.seed, &mut budget)?;
    Ok(sol.map(|colors| to_coloring(g, k, &colors)))
}

/// Every proper k-coloring of `g` minus `skip`, up to renaming colors, capped
/// at `cap`. The flag reports whether the enumeration finished.
pub fn all_colorings(
    g: &Arc<Graph>,
    k: u8,
    skip: Option<Edge>,
    cap: usize,
) -> Result<(Vec<PartialEdgeColoring>, bool), SolverError> {
    let skip = match skip {
        Some(e) => {
            let (u, v) = e.endpoints();
            Some(g.edge_index(u, v).ok_or(SolverError::NoSuchEdge(e))?)
        }
        None => None,
    };
    let (raw, complete) = exact::enumerate(g, k.max(1), skip, cap);
    Ok((raw.iter().map(|c| to_coloring(g, k.max(1), c)).collect(), complete))
}

/// χ′(g) with a given budget.
pub fn exact_chromatic_index_with(g: &Graph, config: SolverConfig) -> Result<usize, SolverError> {
    let delta = g.max_degree();
    if delta == 0 {
        return Ok(0);
    }
    if g.is_overfull() {
        return Ok(delta + 1);
    }
    let mut budget = exact::Budget::new(config.budget);
    match exact::solve(g, delta as u8, None, config.seed, &mut budget)? {
        Some(_) => Ok(delta),
        None => Ok(delta + 1),
    }
}

/// χ′(g): Δ if a Δ-edge-coloring exists, otherwise Δ+1.
pub fn exact_chromatic_index(g: &Graph) -> Result<usize, SolverError> {
    exact_chromatic_index_with(g, SolverConfig::default())
}

pub fn classify_with(g: &Graph, config: SolverConfig) -> Result<Class, SolverError> {
    Ok(if exact_chromatic_index_with(g, config)? == g.max_degree() {
        Class::One
    } else {
        Class::Two
    })
}

pub fn classify(g: &Graph) -> Result<Class, SolverError> {
    classify_with(g, SolverConfig::default())
}

/// For a Class 2 graph, whether G − e has a Δ(G)-edge-coloring.
pub fn is_critical_edge(g: &Graph, e: Edge) -> Result<bool, SolverError> {
    if classify(g)? == Class::One {
        return Err(SolverError::NotClassTwo);
    }
    critical_unchecked(g, e, SolverConfig::default())
}

fn critical_unchecked(g: &Graph, e: Edge, config: SolverConfig) -> Result<bool, SolverError> {
    let (u, v) = e.endpoints();
    let i = g.edge_index(u, v).ok_or(SolverError::NoSuchEdge(e))?;
    let mut budget = exact::Budget::new(config.budget);
    Ok(exact::solve(g, g.max_degree() as u8, Some(i), config.seed, &mut budget)?.is_some())
}

/// Connected, Class 2, and every edge critical.
pub fn is_delta_critical(g: &Graph) -> Result<bool, SolverError> {
    if !g.is_connected() || g.edge_count() == 0 || classify(g)? == Class::One {
        return Ok(false);
    }
    for &e in g.edges() {
        if !critical_unchecked(g, e, SolverConfig::default())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A Δ-coloring of G − e with `e` uncolored, deterministic for a given seed.
/// `k` is Δ(G) even when Δ(G − e) is smaller.
pub fn delta_coloring_of_minus_e(g: &Arc<Graph>, e: Edge, seed: Option<u64>) -> Result<PartialEdgeColoring, SolverError> {
    let k = g.max_degree() as u8;
    find_coloring(
        g,
        k,
        Some(e),
        SolverConfig {
            seed,
            ..Default::default()
        },
    )?
    .ok_or(SolverError::NotCritical(e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{builtin_fixture, VertexId};
    use crate::structures::check_parity;

    fn fixture(name: &str) -> Graph {
        builtin_fixture(name).unwrap()
    }

    #[test]
    fn chromatic_indices_of_fixtures() {
        assert_eq!(exact_chromatic_index(&fixture("k4")).unwrap(), 3);
        assert_eq!(exact_chromatic_index(&fixture("k6")).unwrap(), 5);
        assert_eq!(exact_chromatic_index(&fixture("pstar")).unwrap(), 4);
        assert_eq!(exact_chromatic_index(&fixture("c5")).unwrap(), 3);
        assert_eq!(exact_chromatic_index(&fixture("petersen")).unwrap(), 4);
    }

    #[test]
    fn classes() {
        assert_eq!(classify(&fixture("k6")).unwrap(), Class::One);
        assert_eq!(classify(&fixture("triangle")).unwrap(), Class::Two);
        for name in ["c5", "k5", "k7"] {
            assert_eq!(classify(&fixture(name)).unwrap(), Class::Two, "{name}");
        }
    }

    #[test]
    fn criticality_of_fixtures() {
        for name in ["triangle", "pstar", "splitk4"] {
            assert!(is_delta_critical(&fixture(name)).unwrap(), "{name}");
        }
        assert!(!is_delta_critical(&fixture("k4")).unwrap());
        assert!(!is_delta_critical(&fixture("petersen")).unwrap());
        let g = fixture("triangle");
        for &e in g.edges() {
            assert!(is_critical_edge(&g, e).unwrap());
        }
        assert_eq!(is_critical_edge(&fixture("k4"), Edge::new(0, 1)), Err(SolverError::NotClassTwo));
    }

    #[test]
    fn class_two_component_blocks_criticality() {
        // C5 plus a disjoint K3 with Δ = 2: removing a C5 edge leaves K3 Class 2
        let g = fixture("c5").disjoint_union(&fixture("triangle")).unwrap();
        assert_eq!(classify(&g).unwrap(), Class::Two);
        assert!(!is_critical_edge(&g, Edge::new(0, 1)).unwrap());
        assert!(!is_delta_critical(&g).unwrap());
    }

    #[test]
    fn triangle_minus_edge_coloring() {
        let g = Arc::new(fixture("triangle"));
        let c = delta_coloring_of_minus_e(&g, Edge::new(0, 1), None).unwrap();
        assert_eq!(c.k(), 2);
        assert_eq!(c.uncolored_edges(), vec![Edge::new(0, 1)]);
        assert_ne!(c.color(VertexId(0), VertexId(2)), c.color(VertexId(1), VertexId(2)));
    }

    #[test]
    fn k4_minus_edge_has_three_coloring() {
        let g = Arc::new(fixture("k4"));
        for &e in g.edges() {
            let c = delta_coloring_of_minus_e(&g, e, Some(3)).unwrap();
            assert!(c.validate() && c.uncolored_count() == 1);
        }
    }

    #[test]
    fn seeds_give_valid_and_varied_colorings() {
        let g = Arc::new(fixture("pstar"));
        let e = g.edges()[0];
        let mut seen = std::collections::BTreeSet::new();
        for seed in 0..16 {
            let c = delta_coloring_of_minus_e(&g, e, Some(seed)).unwrap();
            assert!(c.validate());
            seen.insert(c.to_text());
        }
        assert!(seen.len() > 1);
    }

    #[test]
    fn vizing_on_fixtures_and_stars() {
        for name in crate::graph::fixture_names() {
            let g = fixture(name);
            let c = vizing_plus_one_coloring(&g);
            assert!(c.validate() && c.is_full(), "{name}");
            assert_eq!(c.k() as usize, g.max_degree() + 1);
        }
        let star = Graph::star(6).unwrap();
        let c = vizing_plus_one_coloring(&star);
        assert!(c.validate() && c.is_full());
    }

    #[test]
    fn full_colorings_have_parity() {
        let g = Arc::new(fixture("k6"));
        let c = find_coloring(&g, 5, None, SolverConfig::default()).unwrap().unwrap();
        assert!(check_parity(&c).unwrap().passed());
    }

    #[test]
    fn enumeration_up_to_renaming() {
        // K3 minus an edge: the path has exactly one 2-coloring up to renaming
        let g = Arc::new(fixture("triangle"));
        let (all, complete) = all_colorings(&g, 2, Some(Edge::new(0, 1)), 100).unwrap();
        assert!(complete);
        assert_eq!(all.len(), 1);
        // C4 with 2 colors: one coloring; with 3 colors: 1 (two colors) + ...
        let c4 = Arc::new(Graph::cycle(4).unwrap());
        assert_eq!(all_colorings(&c4, 2, None, 100).unwrap().0.len(), 1);
    }

    #[test]
    fn budget_error_is_reported() {
        let g = fixture("petersen");
        let r = exact_chromatic_index_with(&g, SolverConfig { budget: 3, seed: None });
        assert!(matches!(r, Err(SolverError::Budget { .. })));
    }
}
