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


//! Lemma sweeps: every structural check run over every critical edge of a
//! corpus, under several Δ-colorings of `G − e` each.

use std::collections::HashSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::corpus::Corpus;
use crate::classify::{all_colorings, classify, delta_coloring_of_minus_e, vizing_plus_one_coloring, Class};
use crate::coloring::PartialEdgeColoring;
use crate::graph::{from_graph6, to_graph6, Edge, Graph, VertexId};
use crate::normalize::{target_pattern, normalize_k5, NormalizationOutcome, MAX_SWAPS};
use crate::report::{Counterexample, VerificationReport};
use crate::structures::{
    check_fan_elementary_linkage, check_fan_pair_linkage, check_fork_absence, check_fulldpair_lemma, check_k5_companion,
    check_k5_degrees, check_kierstead4, check_kite, check_parity, check_shortkite, check_val, end_overlap,
    find_kierstead_paths_from, find_structure_witnesses, grow_multifan, KiersteadPath, WitnessKind,
};

/// Report names of [`lemma_sweep`], in output order.
pub const LEMMA_CHECKS: &[&str] = &[
    "val",
    "parity",
    "fulldpair_lemma",
    "multifan_elementary_linkage",
    "multifan_pair_linkage",
    "kierstead4",
    "k5_degrees",
    "k5_companion",
    "shortkite",
    "kite",
    "fork_absence",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    /// Solver seeds per critical edge.
    pub seeds: u64,
    /// Orders up to which every Δ-coloring of `G − e` (up to renaming) is
    /// used instead of seeded ones.
    pub exhaustive_up_to: usize,
    /// Cap on colorings per edge in exhaustive mode.
    pub exhaustive_cap: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { seeds: 8, exhaustive_up_to: 6, exhaustive_cap: 2000 }
    }
}

/// Distinct Δ-colorings of `g − e` with `e` uncolored.
pub fn colorings_for_edge(g: &Arc<Graph>, e: Edge, cfg: &SweepConfig) -> Vec<PartialEdgeColoring> {
    let k = g.max_degree() as u8;
    if g.n() <= cfg.exhaustive_up_to {
        if let Ok((all, _)) = all_colorings(g, k, Some(e), cfg.exhaustive_cap) {
            return all;
        }
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for seed in 0..cfg.seeds {
        if let Ok(c) = delta_coloring_of_minus_e(g, e, Some(seed)) {
            if seen.insert(c.assignment()) {
                out.push(c);
            }
        }
    }
    out
}

/// The coloring of `G − e` as a full coloring of that graph.
fn restrict(c: &PartialEdgeColoring, e: Edge) -> Option<PartialEdgeColoring> {
    let h = Arc::new(c.graph().without_edge(e).ok()?);
    let assignment: Vec<_> = h.edges().iter().map(|&f| c.edge_color(f)).collect();
    PartialEdgeColoring::from_assignment(h, c.k(), &assignment).ok()
}

fn absorb(into: &mut VerificationReport, part: VerificationReport) {
    into.merge(&part);
}

/// All lemma checks on one graph; one report per entry of [`LEMMA_CHECKS`].
pub fn sweep_graph(g: &Arc<Graph>, cfg: &SweepConfig) -> Vec<VerificationReport> {
    let mut reps: Vec<VerificationReport> = LEMMA_CHECKS.iter().map(|&n| VerificationReport::new(n)).collect();
    let g6 = to_graph6(g);
    let idx = |name: &str| LEMMA_CHECKS.iter().position(|&n| n == name).unwrap();

    for &e in g.edges() {
        absorb(&mut reps[idx("val")], check_val(g, e));
    }
    if let Ok(rep) = check_parity(&vizing_plus_one_coloring(g)) {
        absorb(&mut reps[idx("parity")], rep);
    }
    for (a, b) in g.full_deficiency_pairs() {
        match check_fulldpair_lemma(g, a, b) {
            Ok(rep) => absorb(&mut reps[idx("fulldpair_lemma")], rep),
            Err(err) => reps[idx("fulldpair_lemma")].fail(Counterexample::new(g6.clone(), err.to_string())),
        }
    }

    for &e in g.edges() {
        let (x, y) = e.endpoints();
        for c in colorings_for_edge(g, e, cfg) {
            reps[idx("parity")].bump("colorings", 1);
            if let Some(full) = restrict(&c, e) {
                if let Ok(rep) = check_parity(&full) {
                    absorb(&mut reps[idx("parity")], rep);
                }
            }
            for (r, s1) in [(x, y), (y, x)] {
                if let Ok(f) = grow_multifan(&c, r, s1) {
                    absorb(&mut reps[idx("multifan_elementary_linkage")], check_fan_elementary_linkage(&c, &f));
                    absorb(&mut reps[idx("multifan_pair_linkage")], check_fan_pair_linkage(&c, &f));
                }
                for k in find_kierstead_paths_from(&c, r, s1, 3) {
                    absorb(&mut reps[idx("kierstead4")], check_kierstead4(&c, &k));
                }
                for k in find_kierstead_paths_from(&c, r, s1, 4) {
                    reps[idx("k5_degrees")].bump("paths", 1);
                    absorb(&mut reps[idx("k5_degrees")], check_k5_degrees(&c, &k));
                    absorb(&mut reps[idx("k5_companion")], check_k5_companion(&c, &k));
                }
            }
            for (kind, name) in [(WitnessKind::ShortKite, "shortkite"), (WitnessKind::Kite, "kite")] {
                let ws = find_structure_witnesses(&c, kind);
                let i = idx(name);
                reps[i].bump("witnesses", ws.len() as u64);
                if ws.is_empty() {
                    reps[i].skip();
                }
                for w in ws {
                    let rep = match kind {
                        WitnessKind::ShortKite => check_shortkite(&c, &w),
                        _ => check_kite(&c, &w),
                    };
                    absorb(&mut reps[i], rep);
                }
            }
            absorb(&mut reps[idx("fork_absence")], check_fork_absence(&c));
        }
    }
    reps
}

/// [`sweep_graph`] over a corpus, merged per check in corpus order. Checks
/// whose hypothesis was never met get a note saying so.
pub fn lemma_sweep(corpus: &Corpus, cfg: &SweepConfig) -> Vec<VerificationReport> {
    let parts: Vec<Vec<VerificationReport>> = corpus.entries.par_iter().map(|e| sweep_graph(&e.graph, cfg)).collect();
    LEMMA_CHECKS
        .iter()
        .enumerate()
        .map(|(i, &name)| {
            let mut rep = VerificationReport::combine(name, parts.iter().map(|p| &p[i]));
            if rep.hypothesis_met == 0 {
                rep.note("hypothesis never met on this corpus");
            }
            rep
        })
        .collect()
}

/// Random connected graphs on 7 to 11 vertices, denser away from a few
/// designated low-degree vertices, for mining 5-vertex Kierstead paths
/// whose end shares many missing colors with the uncolored edge.
pub fn mining_hosts(seed: u64, count: usize) -> Vec<Arc<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(7..=11);
        let p: f64 = rng.gen_range(0.5..0.9);
        let low: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.3)).collect();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let q = if low[u] || low[v] { 0.25 } else { p };
                if rng.gen_bool(q) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).expect("valid edges");
        if g.edge_count() > 0 && g.is_connected() {
            out.push(Arc::new(g));
        }
    }
    out
}

/// Runs [`normalize_k5`] on one instance and checks the outcome. A
/// normalized result must satisfy the target pattern, stay within the swap
/// bound and replay with every step proper; a proper-coloring result must
/// be a full Δ-coloring.
pub fn check_normalize_instance(c: &PartialEdgeColoring, k: &KiersteadPath) -> VerificationReport {
    let mut rep = VerificationReport::new("normalize_k5");
    let cx = |clause: String| {
        Counterexample::new(to_graph6(c.graph()), clause)
            .with_witness(k.describe())
            .with_coloring(c.to_compact())
    };
    match normalize_k5(c, k) {
        Ok(NormalizationOutcome::Normalized { coloring, script, trace, path, .. }) => {
            let [a, b, u, s, t] = [k.vertices[0], k.vertices[1], k.vertices[2], k.vertices[3], k.vertices[4]];
            let ok = target_pattern(&coloring, a, b, u, s, t).is_some()
                && script.swap_count() <= MAX_SWAPS
                && trace.all_proper()
                && coloring.uncolored_edges() == vec![Edge::new(a, b)];
            rep.bump("normalized", 1);
            rep.bump(&format!("branch {}", path.join(">")), 1);
            rep.check(ok, || cx(format!("normalized output fails the target pattern ({})", path.join(">"))));
        }
        Ok(NormalizationOutcome::ProperColoring { coloring, .. }) => {
            let ok = coloring.is_full()
                && coloring.validate()
                && coloring.k() as usize == coloring.graph().max_degree();
            rep.bump("proper_coloring", 1);
            rep.check(ok, || cx("returned coloring is not a full Δ-coloring".into()));
        }
        Err(err) => rep.fail(cx(err.to_string())),
    }
    rep
}

/// Every 5-vertex Kierstead path with overlap at least 3 under the given
/// colorings of `G − e`, for each edge `e` of each host.
pub fn normalize_sweep(hosts: &[Arc<Graph>], seeds: u64) -> VerificationReport {
    let parts: Vec<VerificationReport> = hosts
        .par_iter()
        .map(|g| {
            let mut rep = VerificationReport::new("normalize_k5");
            let mut class_two = None;
            for &e in g.edges() {
                let (x, y) = e.endpoints();
                for seed in 0..seeds {
                    let Ok(c) = delta_coloring_of_minus_e(g, e, Some(seed)) else { break };
                    for (a, b) in [(x, y), (y, x)] {
                        for k in find_kierstead_paths_from(&c, a, b, 4) {
                            if end_overlap(&c, &k) < 3 {
                                continue;
                            }
                            let two = *class_two.get_or_insert_with(|| classify(g) == Ok(Class::Two));
                            rep.bump(if two { "class2_hosts" } else { "class1_hosts" }, 1);
                            rep.merge(&check_normalize_instance(&c, &k));
                        }
                    }
                }
            }
            rep
        })
        .collect();
    VerificationReport::combine("normalize_k5", &parts)
}

/// A Class 1 host with a Δ-coloring of `G − ab` and a 5-vertex Kierstead
/// path of overlap 3 on which normalization cannot proceed: the host is
/// colored outright instead.
pub fn planted_class_one() -> (PartialEdgeColoring, KiersteadPath) {
    let g = Arc::new(from_graph6("G~wTv{").expect("valid graph6"));
    let k = g.max_degree() as u8;
    let c = PartialEdgeColoring::from_compact(g, k, "1-3742563472635211675").expect("proper coloring");
    let path = KiersteadPath { vertices: [0, 2, 1, 3, 5].into_iter().map(VertexId).collect() };
    (c, path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::fixture_corpus;
    use crate::report::Status;

    #[test]
    fn small_sweep_passes() {
        let corpus = fixture_corpus(&["triangle", "c5", "splitk4"]);
        let reps = lemma_sweep(&corpus, &SweepConfig::default());
        assert_eq!(reps.len(), LEMMA_CHECKS.len());
        for r in &reps {
            assert!(r.passed(), "{}", r.summary_line());
        }
        let get = |n: &str| reps.iter().find(|r| r.check == n).unwrap();
        assert_eq!(get("val").status, Status::Pass);
        assert_eq!(get("parity").status, Status::Pass);
        assert_eq!(get("multifan_elementary_linkage").status, Status::Pass);
        assert_eq!(get("fork_absence").status, Status::Vacuous);
        assert!(get("fork_absence").notes.iter().any(|n| n.contains("never met")));
    }

    #[test]
    fn exhaustive_colorings_are_distinct() {
        let g = Arc::new(crate::graph::builtin_fixture("k4").unwrap());
        let e = g.edges()[0];
        let cs = colorings_for_edge(&g, e, &SweepConfig::default());
        assert!(!cs.is_empty());
        let set: HashSet<_> = cs.iter().map(|c| c.assignment()).collect();
        assert_eq!(set.len(), cs.len());
    }

    #[test]
    fn mining_is_reproducible() {
        let a: Vec<String> = mining_hosts(3, 5).iter().map(|g| to_graph6(g)).collect();
        let b: Vec<String> = mining_hosts(3, 5).iter().map(|g| to_graph6(g)).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn planted_instance_meets_the_overlap() {
        let (c, k) = planted_class_one();
        assert!(end_overlap(&c, &k) >= 3);
        let rep = check_normalize_instance(&c, &k);
        assert!(rep.passed());
        assert_eq!(rep.counters.get("proper_coloring"), Some(&1));
    }
}
