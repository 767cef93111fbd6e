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


//! Locating the colored configurations around an uncolored edge and
//! checking the degree and color conclusions that hold for them in
//! critical graphs.

mod kierstead;
mod multifan;
mod witness;

pub use kierstead::{
    check_k5_claims, check_k5_companion, check_k5_degrees, check_kierstead4, end_overlap,
    find_kierstead_paths, find_kierstead_paths_from, is_kierstead_path, KiersteadPath,
};
pub use multifan::{
    alpha_sequences, check_fan_elementary_linkage, check_fan_lemmas, check_fan_pair_linkage,
    grow_multifan, is_maximal, is_multifan, AlphaSequences, Multifan,
};
pub use witness::{
    check_fork_absence, check_kite, check_shortkite, find_structure_witnesses, fork_degree_bound_met,
    is_structure_witness, StructureWitness, WitnessKind,
};

use thiserror::Error;

use crate::coloring::PartialEdgeColoring;
use crate::graph::{to_graph6, Edge, Graph, VertexId};
use crate::report::{Counterexample, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("edge {0} is not an uncolored edge of the coloring")]
    NotUncolored(Edge),
    #[error("vertex set is not elementary; shared missing colors at {0:?}")]
    NotElementary(Vec<(VertexId, VertexId)>),
    #[error("leaf sequence does not satisfy the multifan condition")]
    NotAMultifan,
    #[error("coloring has {0} uncolored edges; a full coloring is required")]
    NotFull(usize),
    #[error("({0}, {1}) is not a full-deficiency pair")]
    NotFullDeficiencyPair(VertexId, VertexId),
}

/// Counterexample carrying the graph, the coloring and a witness description.
pub(crate) fn cx(c: &PartialEdgeColoring, clause: impl Into<String>, witness: impl Into<String>) -> Counterexample {
    Counterexample::new(to_graph6(c.graph()), clause)
        .with_witness(witness)
        .with_coloring(c.to_text())
}

fn gcx(g: &Graph, clause: impl Into<String>, witness: impl Into<String>) -> Counterexample {
    Counterexample::new(to_graph6(g), clause).with_witness(witness)
}

fn count_delta_neighbors(g: &Graph, x: VertexId, exclude: VertexId) -> usize {
    let delta = g.max_degree();
    g.neighbors(x).filter(|&w| w != exclude && g.degree(w) == delta).count()
}

/// Adjacency lemma for a critical edge `xy`: each endpoint has at least
/// `Δ − d(other) + 1` neighbors of degree Δ besides the other endpoint.
/// Both orientations count as one instance each. The caller is
/// responsible for `xy` being critical in a Class 2 graph.
pub fn check_val(g: &Graph, e: Edge) -> VerificationReport {
    let mut rep = VerificationReport::new("val");
    let delta = g.max_degree();
    let (u, w) = e.endpoints();
    if !g.has_edge(u, w) {
        rep.skip();
        return rep;
    }
    for (x, y) in [(u, w), (w, u)] {
        let need = delta + 1 - g.degree(y);
        let have = count_delta_neighbors(g, x, y);
        rep.check(have >= need, || {
            gcx(g, format!("{x} has {have} Δ-neighbors, needs {need}"), format!("edge {x}-{y}"))
        });
    }
    rep
}

/// Every color is missing at a number of vertices congruent to `n` mod 2.
pub fn check_parity(c: &PartialEdgeColoring) -> Result<VerificationReport, StructureError> {
    if !c.is_full() {
        return Err(StructureError::NotFull(c.uncolored_count()));
    }
    let n = c.graph().n();
    let mut rep = VerificationReport::new("parity");
    for (i, count) in c.deficiency_counts().into_iter().enumerate() {
        rep.check(count % 2 == n % 2, || {
            cx(c, format!("color {} missing at {count} vertices, n={n}", i + 1), "")
        });
    }
    Ok(rep)
}

fn open_union(g: &Graph, a: VertexId, b: VertexId) -> u64 {
    g.neighbor_mask(a) | g.neighbor_mask(b)
}

/// Degree consequences of a full-deficiency pair `(a, b)` with `ab`
/// critical in a Class 2 graph: clauses (i)-(iv) and, when
/// `4Δ ≥ 3(n − 1)`, at most one vertex of degree `Δ − 1` outside `{a, b}`.
/// Criticality and class are the caller's responsibility.
pub fn check_fulldpair_lemma(g: &Graph, a: VertexId, b: VertexId) -> Result<VerificationReport, StructureError> {
    let delta = g.max_degree();
    if !g.has_edge(a, b) || g.degree(a) + g.degree(b) != delta + 2 {
        return Err(StructureError::NotFullDeficiencyPair(a, b));
    }
    let n = g.n();
    let both_low = g.degree(a) < delta && g.degree(b) < delta;
    let pair = format!("pair {a},{b}");
    let mut rep = VerificationReport::new("fulldpair");

    // (i)
    let joint = open_union(g, a, b);
    for x in g.vertices().filter(|&x| x != a && x != b && joint >> x.0 & 1 == 1) {
        rep.bump("clause_i", 1);
        rep.check(g.degree(x) == delta, || {
            gcx(g, format!("(i) neighbor {x} has degree {} < Δ={delta}", g.degree(x)), pair.clone())
        });
    }

    // (ii)
    for x in g.vertices().filter(|&x| x != a && x != b) {
        if g.distance_to_set(x, &[a, b]) != Some(2) {
            continue;
        }
        rep.bump("clause_ii", 1);
        let need = if both_low { delta } else { delta - 1 };
        rep.check(g.degree(x) >= need, || {
            gcx(g, format!("(ii) distance-2 vertex {x} has degree {} < {need}", g.degree(x)), pair.clone())
        });
    }

    // (iii)
    let threshold = n - joint.count_ones() as usize;
    for x in g.vertices().filter(|&x| x != a && x != b) {
        if g.degree(x) < threshold {
            continue;
        }
        rep.bump("clause_iii", 1);
        let need = if both_low { delta } else { delta - 1 };
        rep.check(g.degree(x) >= need, || {
            gcx(g, format!("(iii) vertex {x} of degree {} >= {threshold} but < {need}", g.degree(x)), pair.clone())
        });
    }

    // (iv)
    let low: Vec<VertexId> = g.vertices().filter(|&x| x != a && x != b && g.degree(x) < delta).collect();
    if !low.is_empty() {
        rep.bump("clause_iv", 1);
        rep.check(low.len() >= 2, || {
            gcx(g, format!("(iv) {} is the only vertex below Δ outside the pair", low[0]), pair.clone())
        });
    }

    // corollary
    if 4 * delta >= 3 * (n.saturating_sub(1)) {
        rep.bump("corollary", 1);
        let near: Vec<String> = g
            .vertices()
            .filter(|&x| x != a && x != b && g.degree(x) + 1 == delta)
            .map(|x| x.to_string())
            .collect();
        rep.check(near.len() <= 1, || {
            gcx(g, format!("corollary: vertices {} all have degree Δ-1", near.join(",")), pair.clone())
        });
    }
    Ok(rep)
}
