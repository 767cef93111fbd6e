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


//! Kierstead paths: `v₀v₁` uncolored, and each later edge `v_{i-1}vᵢ`
//! colored with a color missing at some earlier vertex `v_j`, `0 ≤ j < i`.

use serde::Serialize;

use super::cx;
use crate::coloring::{ColorSet, PartialEdgeColoring};
use crate::graph::VertexId;
use crate::report::VerificationReport;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct KiersteadPath {
    pub vertices: Vec<VertexId>,
}

impl KiersteadPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn describe(&self) -> String {
        let vs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        format!("kierstead [{}]", vs.join(","))
    }
}

/// Independent check of the defining condition.
pub fn is_kierstead_path(c: &PartialEdgeColoring, k: &KiersteadPath) -> bool {
    let g = c.graph();
    let vs = &k.vertices;
    if vs.len() < 2 || vs.iter().any(|v| v.0 >= g.n()) {
        return false;
    }
    if vs.iter().enumerate().any(|(i, v)| vs[..i].contains(v)) {
        return false;
    }
    if !g.has_edge(vs[0], vs[1]) || c.color(vs[0], vs[1]).is_some() {
        return false;
    }
    (2..vs.len()).all(|i| {
        g.has_edge(vs[i - 1], vs[i])
            && c.color(vs[i - 1], vs[i]).is_some_and(|col| c.missing_union(&vs[..i]).contains(col))
    })
}

/// All Kierstead paths with `p` edges starting `v₀, v₁`.
pub fn find_kierstead_paths_from(
    c: &PartialEdgeColoring,
    v0: VertexId,
    v1: VertexId,
    p: usize,
) -> Vec<KiersteadPath> {
    let mut out = Vec::new();
    if p == 0 || !c.graph().has_edge(v0, v1) || c.color(v0, v1).is_some() {
        return out;
    }
    fn extend(
        c: &PartialEdgeColoring,
        path: &mut Vec<VertexId>,
        reach: ColorSet,
        p: usize,
        out: &mut Vec<KiersteadPath>,
    ) {
        if path.len() == p + 1 {
            out.push(KiersteadPath { vertices: path.clone() });
            return;
        }
        let last = *path.last().unwrap();
        for w in c.graph().neighbors(last) {
            if path.contains(&w) {
                continue;
            }
            if c.color(last, w).is_some_and(|col| reach.contains(col)) {
                path.push(w);
                extend(c, path, reach.union(c.missing(w)), p, out);
                path.pop();
            }
        }
    }
    let mut path = vec![v0, v1];
    let reach = c.missing(v0).union(c.missing(v1));
    extend(c, &mut path, reach, p, &mut out);
    out
}

/// All Kierstead paths with `p` edges rooted at the uncolored edges of `c`,
/// trying both orientations. For `p = 1` only the orientation with the
/// smaller vertex first is returned, since the path is the edge itself.
pub fn find_kierstead_paths(c: &PartialEdgeColoring, p: usize) -> Vec<KiersteadPath> {
    let mut out = Vec::new();
    for e in c.uncolored_edges() {
        let (x, y) = e.endpoints();
        out.extend(find_kierstead_paths_from(c, x, y, p));
        if p > 1 {
            out.extend(find_kierstead_paths_from(c, y, x, p));
        }
    }
    out
}

/// On a 4-vertex path: if min(d(v₂), d(v₃)) < Δ then V(K) is elementary;
/// and always |φ̄(v₃) ∩ (φ̄(v₀) ∪ φ̄(v₁))| ≤ 1.
pub fn check_kierstead4(c: &PartialEdgeColoring, k: &KiersteadPath) -> VerificationReport {
    let mut rep = VerificationReport::new("kierstead4");
    if k.len() != 4 {
        rep.skip();
        return rep;
    }
    let g = c.graph();
    let delta = g.max_degree();
    let [v0, v1, v2, v3] = [k.vertices[0], k.vertices[1], k.vertices[2], k.vertices[3]];
    if g.degree(v2).min(g.degree(v3)) < delta {
        rep.bump("elementary_clause", 1);
        let ok = c.is_elementary(&k.vertices);
        rep.check(ok, || cx(c, "low-degree path vertex but V(K) not elementary", k.describe()));
    } else {
        rep.skip();
    }
    rep.bump("overlap_clause", 1);
    let overlap = c.missing(v3).intersection(c.missing(v0).union(c.missing(v1))).len();
    rep.check(overlap <= 1, || {
        cx(c, format!("last vertex shares {overlap} missing colors with the uncolored edge"), k.describe())
    });
    rep
}

/// |φ̄(t) ∩ (φ̄(a) ∪ φ̄(b))| for a path (a, b, ..., t).
pub fn end_overlap(c: &PartialEdgeColoring, k: &KiersteadPath) -> usize {
    let a = k.vertices[0];
    let b = k.vertices[1];
    let t = *k.vertices.last().unwrap();
    c.missing(t).intersection(c.missing(a).union(c.missing(b))).len()
}

/// On a 5-vertex path (a, b, u, s, t) with overlap at least 3:
/// d(b) = d(u) = Δ.
pub fn check_k5_degrees(c: &PartialEdgeColoring, k: &KiersteadPath) -> VerificationReport {
    let mut rep = VerificationReport::new("k5_degrees");
    if k.len() != 5 || end_overlap(c, k) < 3 {
        rep.skip();
        return rep;
    }
    let g = c.graph();
    let delta = g.max_degree();
    let (b, u) = (k.vertices[1], k.vertices[2]);
    rep.check(g.degree(b) == delta && g.degree(u) == delta, || {
        cx(c, format!("overlap >= 3 but d(b)={}, d(u)={}, Δ={delta}", g.degree(b), g.degree(u)), k.describe())
    });
    rep
}

/// On a 5-vertex path (a, b, u, s, t) with overlap at least 4: every
/// `x ∈ N(u) ∖ V(K)` such that (a, b, u, x) is a Kierstead path and
/// φ̄(x) ⊆ φ̄(a) ∪ φ̄(b) has degree Δ.
pub fn check_k5_companion(c: &PartialEdgeColoring, k: &KiersteadPath) -> VerificationReport {
    let mut rep = VerificationReport::new("k5_companion");
    if k.len() != 5 || end_overlap(c, k) < 4 {
        rep.skip();
        return rep;
    }
    let g = c.graph();
    let delta = g.max_degree();
    let (a, b, u) = (k.vertices[0], k.vertices[1], k.vertices[2]);
    let ab = c.missing(a).union(c.missing(b));
    let mut any = false;
    for x in g.neighbors(u) {
        if k.vertices.contains(&x) {
            continue;
        }
        let companion = KiersteadPath { vertices: vec![a, b, u, x] };
        if !is_kierstead_path(c, &companion) || !c.missing(x).is_subset(ab) {
            continue;
        }
        any = true;
        rep.check(g.degree(x) == delta, || {
            cx(
                c,
                format!("companion {x} has degree {} < Δ={delta}", g.degree(x)),
                format!("{} x={x}", k.describe()),
            )
        });
    }
    if !any {
        rep.skip();
    }
    rep
}

/// Both 5-vertex checks merged.
pub fn check_k5_claims(c: &PartialEdgeColoring, k: &KiersteadPath) -> VerificationReport {
    let mut rep = check_k5_degrees(c, k);
    rep.merge(&check_k5_companion(c, k));
    rep.check = "k5".into();
    rep
}
