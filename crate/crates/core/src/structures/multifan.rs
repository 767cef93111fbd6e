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


//! Multifans: a center `r`, the uncolored edge `rs₁`, and further leaves
//! `s₂..s_p` where each edge `rsᵢ` carries a color missing at an earlier leaf.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{cx, StructureError};
use crate::coloring::{Color, ColorSet, PartialEdgeColoring};
use crate::graph::{Edge, VertexId};
use crate::report::VerificationReport;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multifan {
    pub center: VertexId,
    /// `s₁, ..., s_p`; `rs₁` is uncolored.
    pub leaves: Vec<VertexId>,
}

impl Multifan {
    pub fn vertices(&self) -> Vec<VertexId> {
        let mut v = vec![self.center];
        v.extend_from_slice(&self.leaves);
        v
    }

    pub fn describe(&self) -> String {
        let leaves: Vec<String> = self.leaves.iter().map(|v| v.to_string()).collect();
        format!("multifan r={} s=[{}]", self.center, leaves.join(","))
    }
}

/// Grows a maximal multifan at `r` from the uncolored edge `rs₁`, adding the
/// smallest qualifying neighbor at each step.
pub fn grow_multifan(c: &PartialEdgeColoring, r: VertexId, s1: VertexId) -> Result<Multifan, StructureError> {
    if !c.graph().has_edge(r, s1) || c.color(r, s1).is_some() {
        return Err(StructureError::NotUncolored(Edge::new(r, s1)));
    }
    let mut leaves = vec![s1];
    let mut in_fan = 1u64 << r.0 | 1u64 << s1.0;
    let mut reach = c.missing(s1);
    loop {
        let next = c.graph().neighbors(r).find(|&w| {
            in_fan >> w.0 & 1 == 0 && c.color(r, w).is_some_and(|col| reach.contains(col))
        });
        match next {
            Some(w) => {
                leaves.push(w);
                in_fan |= 1 << w.0;
                reach = reach.union(c.missing(w));
            }
            None => return Ok(Multifan { center: r, leaves }),
        }
    }
}

/// Independent check of the defining condition: distinct vertices, `rs₁`
/// uncolored, and each later edge colored with a color missing at an
/// earlier leaf.
pub fn is_multifan(c: &PartialEdgeColoring, f: &Multifan) -> bool {
    let g = c.graph();
    let vs = f.vertices();
    let distinct = vs.iter().enumerate().all(|(i, v)| !vs[..i].contains(v));
    if !distinct || f.leaves.is_empty() || vs.iter().any(|v| v.0 >= g.n()) {
        return false;
    }
    let r = f.center;
    if !g.has_edge(r, f.leaves[0]) || c.color(r, f.leaves[0]).is_some() {
        return false;
    }
    (1..f.leaves.len()).all(|i| {
        let s = f.leaves[i];
        g.has_edge(r, s)
            && c.color(r, s).is_some_and(|col| c.missing_union(&f.leaves[..i]).contains(col))
    })
}

/// Whether a multifan at `r` rooted at `rs₁` can still be extended.
pub fn is_maximal(c: &PartialEdgeColoring, f: &Multifan) -> bool {
    let reach = c.missing_union(&f.leaves);
    !c.graph().neighbors(f.center).any(|w| {
        !f.vertices().contains(&w) && c.color(f.center, w).is_some_and(|col| reach.contains(col))
    })
}

/// The α-sequences of an elementary multifan, as a forest on the leaves.
///
/// Every leaf `sᵢ` (i ≥ 2) hangs below the unique leaf missing `φ(rsᵢ)`;
/// leaves hanging directly below `s₁` start the α-sequences, where α is the
/// color of their edge. An α-sequence is any downward path from such a
/// start.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaSequences {
    /// Parent leaf of each leaf other than `s₁`.
    pub parent: BTreeMap<VertexId, VertexId>,
    /// Anchor color α of each leaf other than `s₁`.
    pub anchor: BTreeMap<VertexId, Color>,
    /// For each anchor α ∈ φ̄(s₁), the leaves it induces in fan order.
    pub sequences: BTreeMap<Color, Vec<VertexId>>,
    missing_s1: ColorSet,
    owner: BTreeMap<Color, VertexId>,
}

impl AlphaSequences {
    /// The color of φ̄(s₁) inducing `color`, if `color` is missing at a leaf.
    pub fn induced_by(&self, color: Color) -> Option<Color> {
        if self.missing_s1.contains(color) {
            return Some(color);
        }
        self.owner.get(&color).and_then(|v| self.anchor.get(v)).copied()
    }

    fn is_ancestor(&self, x: VertexId, mut y: VertexId) -> bool {
        while let Some(&p) = self.parent.get(&y) {
            if p == x {
                return true;
            }
            y = p;
        }
        false
    }

    /// `δ ≺ β`: both induced by the same α, and either δ = α ≠ β, or δ is
    /// missing at a leaf strictly above the leaf missing β on one α-sequence.
    pub fn precedes(&self, delta: Color, beta: Color) -> bool {
        if delta == beta {
            return false;
        }
        let (Some(ad), Some(ab)) = (self.induced_by(delta), self.induced_by(beta)) else {
            return false;
        };
        if ad != ab {
            return false;
        }
        if delta == ad {
            return true;
        }
        match (self.owner.get(&delta), self.owner.get(&beta)) {
            (Some(&x), Some(&y)) => self.is_ancestor(x, y),
            _ => false,
        }
    }
}

/// Decomposes the leaves into α-sequences. Requires V(F) to be elementary.
pub fn alpha_sequences(c: &PartialEdgeColoring, f: &Multifan) -> Result<AlphaSequences, StructureError> {
    let vs = f.vertices();
    if !c.is_elementary(&vs) {
        let mut conflicts = Vec::new();
        for (i, &x) in vs.iter().enumerate() {
            for &y in &vs[i + 1..] {
                if !c.missing(x).is_disjoint(c.missing(y)) {
                    conflicts.push((x, y));
                }
            }
        }
        return Err(StructureError::NotElementary(conflicts));
    }
    let s1 = f.leaves[0];
    let mut owner = BTreeMap::new();
    for &s in &f.leaves {
        for col in c.missing(s).iter() {
            owner.insert(col, s);
        }
    }
    let mut parent = BTreeMap::new();
    let mut anchor = BTreeMap::new();
    let mut sequences: BTreeMap<Color, Vec<VertexId>> = BTreeMap::new();
    for &s in &f.leaves[1..] {
        let col = c.color(f.center, s).expect("fan edges are colored");
        let p = *owner.get(&col).ok_or(StructureError::NotAMultifan)?;
        parent.insert(s, p);
        let a = if p == s1 { col } else { *anchor.get(&p).ok_or(StructureError::NotAMultifan)? };
        anchor.insert(s, a);
        sequences.entry(a).or_default().push(s);
    }
    Ok(AlphaSequences {
        parent,
        anchor,
        sequences,
        missing_s1: c.missing(s1),
        owner,
    })
}

/// Elementarity of V(F), and (α,β)-linkage of `r` with every leaf `sᵢ` for
/// α ∈ φ̄(r), β ∈ φ̄(sᵢ). Assumes `rs₁` is critical in a Class 2 graph.
pub fn check_fan_elementary_linkage(c: &PartialEdgeColoring, f: &Multifan) -> VerificationReport {
    let mut rep = VerificationReport::new("multifan_elementary_linkage");
    let vs = f.vertices();
    let elementary = c.is_elementary(&vs);
    rep.bump("elementary_checked", 1);
    rep.check(elementary, || cx(c, "multifan vertex set is not elementary", f.describe()));
    if !elementary || !c.is_proper() {
        return rep;
    }
    let r = f.center;
    for alpha in c.missing(r).iter() {
        for &s in &f.leaves {
            for beta in c.missing(s).iter() {
                rep.bump("linkage_checked", 1);
                let ok = c.are_linked(r, s, alpha, beta);
                rep.check(ok, || {
                    cx(c, format!("center and leaf {s} not ({alpha},{beta})-linked"), f.describe())
                });
            }
        }
    }
    rep
}

/// For leaves sᵢ ≠ sⱼ and δ ∈ φ̄(sᵢ), λ ∈ φ̄(sⱼ): if δ and λ are induced by
/// different colors then sᵢ, sⱼ are (δ,λ)-linked; if by the same color with
/// δ ≺ λ and sᵢ, sⱼ unlinked, then r lies on the (λ,δ)-chain from sⱼ.
pub fn check_fan_pair_linkage(c: &PartialEdgeColoring, f: &Multifan) -> VerificationReport {
    let mut rep = VerificationReport::new("multifan_pair_linkage");
    let Ok(seq) = alpha_sequences(c, f) else {
        rep.skip();
        return rep;
    };
    if !c.is_proper() {
        rep.skip();
        return rep;
    }
    for &si in &f.leaves {
        for &sj in &f.leaves {
            if si == sj {
                continue;
            }
            for delta in c.missing(si).iter() {
                for lambda in c.missing(sj).iter() {
                    let (Some(ad), Some(al)) = (seq.induced_by(delta), seq.induced_by(lambda)) else {
                        continue;
                    };
                    if ad != al {
                        rep.bump("distinct_inducers", 1);
                        let ok = c.are_linked(si, sj, delta, lambda);
                        rep.check(ok, || {
                            cx(
                                c,
                                format!("leaves {si},{sj} with colors induced by {ad},{al} not ({delta},{lambda})-linked"),
                                f.describe(),
                            )
                        });
                    } else if seq.precedes(delta, lambda) && !c.are_linked(si, sj, delta, lambda) {
                        rep.bump("same_inducer_unlinked", 1);
                        let on_chain = c
                            .chain_through(sj, lambda, delta)
                            .map(|ch| ch.contains(f.center))
                            .unwrap_or(false);
                        rep.check(on_chain, || {
                            cx(
                                c,
                                format!("center not on ({lambda},{delta})-chain from {sj} though {delta} precedes {lambda}"),
                                f.describe(),
                            )
                        });
                    } else {
                        rep.skip();
                    }
                }
            }
        }
    }
    rep
}

/// Both multifan checks merged.
pub fn check_fan_lemmas(c: &PartialEdgeColoring, f: &Multifan) -> VerificationReport {
    let mut rep = check_fan_elementary_linkage(c, f);
    rep.merge(&check_fan_pair_linkage(c, f));
    rep.check = "multifan".into();
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{builtin_fixture, Graph};
    use std::sync::Arc;

    fn v(i: usize) -> VertexId {
        VertexId(i)
    }

    fn triangle() -> PartialEdgeColoring {
        let g = Arc::new(builtin_fixture("triangle").unwrap());
        let mut c = PartialEdgeColoring::new(g, 2).unwrap();
        c.assign(Edge::new(0, 2), Color(1)).unwrap();
        c.assign(Edge::new(1, 2), Color(2)).unwrap();
        c
    }

    #[test]
    fn triangle_fan() {
        let c = triangle();
        let f = grow_multifan(&c, v(0), v(1)).unwrap();
        assert_eq!(f.leaves, vec![v(1), v(2)]);
        assert!(is_multifan(&c, &f) && is_maximal(&c, &f));
        let seq = alpha_sequences(&c, &f).unwrap();
        assert_eq!(seq.sequences.get(&Color(1)), Some(&vec![v(2)]));
        assert_eq!(seq.induced_by(Color(1)), Some(Color(1)));
        let rep = check_fan_lemmas(&c, &f);
        assert!(rep.passed());
        assert!(rep.hypothesis_met > 0);
    }

    #[test]
    fn base_case_fan() {
        let g = Arc::new(Graph::path(3).unwrap());
        let mut c = PartialEdgeColoring::new(g, 2).unwrap();
        c.assign(Edge::new(1, 2), Color(1)).unwrap();
        // r = 1, s1 = 0; φ(12) = 1 is missing at 0, so 2 joins
        let f = grow_multifan(&c, v(1), v(0)).unwrap();
        assert_eq!(f.leaves, vec![v(0), v(2)]);
        // s1 = 1 misses nothing, so the fan stops at p = 1
        let g = Arc::new(Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap());
        let mut c = PartialEdgeColoring::new(g, 2).unwrap();
        c.assign(Edge::new(1, 2), Color(1)).unwrap();
        c.assign(Edge::new(1, 3), Color(2)).unwrap();
        let f = grow_multifan(&c, v(0), v(1)).unwrap();
        assert_eq!(f.leaves, vec![v(1)]);
        assert!(alpha_sequences(&c, &f).unwrap().sequences.is_empty());
        assert!(grow_multifan(&triangle(), v(0), v(2)).is_err());
    }

    #[test]
    fn corrupted_coloring_fails() {
        // K3 minus ab colored with 3 colors where a and b miss a common color
        let g = Arc::new(builtin_fixture("triangle").unwrap());
        let mut c = PartialEdgeColoring::new(g, 3).unwrap();
        c.assign(Edge::new(0, 2), Color(1)).unwrap();
        c.assign(Edge::new(1, 2), Color(2)).unwrap();
        let f = grow_multifan(&c, v(0), v(1)).unwrap();
        let rep = check_fan_elementary_linkage(&c, &f);
        assert!(!rep.passed());
        assert!(rep.counterexamples[0].clause.contains("elementary"));
    }

    #[test]
    fn precedence_along_a_sequence() {
        // star at r=0 with leaves 1..4, edge 0-1 uncolored; build a chain of
        // inducing: φ(02)=1 ∈ φ̄(1), φ(03)=2 ∈ φ̄(2), φ(04)=3 ∈ φ̄(3)
        let g = Arc::new(Graph::star(4).unwrap());
        let mut c = PartialEdgeColoring::new(g, 4).unwrap();
        c.assign(Edge::new(0, 2), Color(1)).unwrap();
        c.assign(Edge::new(0, 3), Color(2)).unwrap();
        c.assign(Edge::new(0, 4), Color(3)).unwrap();
        let f = Multifan { center: v(0), leaves: vec![v(1), v(2), v(3), v(4)] };
        assert!(is_multifan(&c, &f));
        // not elementary (leaves miss 4 in common), so no decomposition
        assert!(alpha_sequences(&c, &f).is_err());
    }
}
