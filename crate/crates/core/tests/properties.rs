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




use proptest::prelude::*;

use vizing::classify::{exact_chromatic_index, vizing_plus_one_coloring};
use vizing::coloring::{apply_script, Color, Step, SwapScript};
use vizing::graph::{canonical_form, from_graph6, identify_pair, to_graph6, Edge, Graph, SplitSpec, VertexId};
use vizing::report::{Counterexample, VerificationReport};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let edges: Vec<(usize, usize)> = pairs.zip(&bits).filter(|(_, &b)| b).map(|(p, _)| p).collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph6_roundtrips(g in graph_strategy(20)) {
        let text = to_graph6(&g);
        let back = from_graph6(&text).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(to_graph6(&back), text);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_and_perm(9)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(h.degree_sequence(), g.degree_sequence());
    }

    #[test]
    fn vizing_uses_at_most_delta_plus_one(g in graph_strategy(16)) {
        let c = vizing_plus_one_coloring(&g);
        prop_assert!(c.is_full());
        prop_assert!(c.validate());
        prop_assert!(c.k() as usize <= g.max_degree() + 1);
    }

    #[test]
    fn chromatic_index_is_delta_or_delta_plus_one(g in graph_strategy(7)) {
        let chi = exact_chromatic_index(&g).unwrap();
        let d = g.max_degree();
        prop_assert!(chi == d || chi == d + 1);
        if g.is_bipartite() {
            prop_assert_eq!(chi, d);
        }
        if g.is_overfull() {
            prop_assert_eq!(chi, d + 1);
        }
    }

    #[test]
    fn kempe_swaps_keep_colorings_proper(g in graph_strategy(12), v in 0usize..12, a in 1u8..=4, b in 1u8..=4) {
        prop_assume!(a != b && v < g.n());
        let c = vizing_plus_one_coloring(&g);
        prop_assume!(a <= c.k() && b <= c.k());
        let (a, b) = (Color(a), Color(b));
        let chain = c.chain_through(VertexId(v), a, b).unwrap();
        let mut d = c.clone();
        d.swap_chain(&chain).unwrap();
        prop_assert!(d.is_full() && d.validate());
        // swapping the same chain again restores the coloring
        d.swap_chain(&chain).unwrap();
        prop_assert_eq!(d.assignment(), c.assignment());
    }

    #[test]
    fn missing_color_counts_have_the_parity_of_n(g in graph_strategy(14)) {
        let c = vizing_plus_one_coloring(&g);
        for count in c.deficiency_counts() {
            prop_assert_eq!(count % 2, g.n() % 2);
        }
    }

    #[test]
    fn double_rename_is_the_identity(g in graph_strategy(10), a in 1u8..=3, b in 1u8..=3) {
        let c = vizing_plus_one_coloring(&g);
        prop_assume!(a <= c.k() && b <= c.k());
        let mut s = SwapScript::new();
        s.push(Step::rename(Color(a), Color(b)));
        s.push(Step::rename(Color(a), Color(b)));
        let (out, trace) = apply_script(&c, &s).unwrap();
        prop_assert!(trace.all_proper());
        prop_assert_eq!(out.assignment(), c.assignment());
    }

    #[test]
    fn splitting_then_identifying_gives_back_the_graph(g in graph_strategy(10), v in 0usize..10, mask in any::<u64>()) {
        prop_assume!(v < g.n());
        let nbrs: Vec<usize> = g.neighbors(VertexId(v)).map(|w| w.0).collect();
        prop_assume!(nbrs.len() >= 2);
        let k = mask as usize % (nbrs.len() - 1) + 1;
        let spec = SplitSpec::new(v, nbrs[..k].iter().copied());
        let h = g.split_vertex(&spec).unwrap();
        prop_assert_eq!(h.n(), g.n() + 1);
        prop_assert_eq!(h.edge_count(), g.edge_count() + 1);
        prop_assert_eq!(h.degree(VertexId(v)) + h.degree(VertexId(g.n())), g.degree(VertexId(v)) + 2);
        let m = identify_pair(&h, VertexId(v), VertexId(g.n())).unwrap();
        let mut merged: Vec<Edge> = m.edges().to_vec();
        merged.sort();
        prop_assert_eq!(merged, g.edges().to_vec());
    }

    #[test]
    fn report_merge_is_order_independent(events in proptest::collection::vec(0u8..3, 0..40), cut in 0usize..40) {
        let build = |evs: &[u8]| {
            let mut r = VerificationReport::new("x");
            for &e in evs {
                match e {
                    0 => r.pass(),
                    1 => r.skip(),
                    _ => r.fail(Counterexample::new("A_", "bad")),
                }
            }
            r
        };
        let cut = cut.min(events.len());
        let (l, r) = (build(&events[..cut]), build(&events[cut..]));
        let lr = VerificationReport::combine("x", [&l, &r]);
        let rl = VerificationReport::combine("x", [&r, &l]);
        let whole = build(&events);
        for rep in [&lr, &rl] {
            prop_assert_eq!(rep.instances, whole.instances);
            prop_assert_eq!(rep.hypothesis_met, whole.hypothesis_met);
            prop_assert_eq!(rep.vacuous, whole.vacuous);
            prop_assert_eq!(rep.failures, whole.failures);
            prop_assert_eq!(rep.status, whole.status);
        }
    }
}

#[test]
fn split_graphs_share_the_original_edge_set() {
    let g = Graph::complete(4).unwrap();
    let h = g.split_vertex(&SplitSpec::new(0, [1])).unwrap();
    assert_eq!(h.n(), 5);
    assert_eq!(h.max_degree(), 3);
}
