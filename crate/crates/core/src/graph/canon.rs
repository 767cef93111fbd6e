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


//! Canonical labeling by individualization and color refinement.
//!
//! The search tree individualizes vertices of the first non-singleton cell of
//! an equitable ordered partition and refines after each step. Every leaf is
//! a discrete partition, i.e. a relabeling; the canonical form is the
//! smallest relabeled adjacency matrix over all leaves. Subtrees are pruned by
//! automorphisms discovered along the way (two leaves with equal encodings),
//! restricted to those fixing the current individualized prefix.

use serde::{Deserialize, Serialize};

use super::{bits, Graph};

/// Adjacency rows of the canonically relabeled graph. Two graphs are
/// isomorphic iff their canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        Graph::from_adjacency(self.rows.clone())
    }
}

/// Refines `color` (cell start positions) until equitable.
fn refine(g: &Graph, color: &mut [usize]) {
    let n = color.len();
    let mut cells = distinct(color);
    let mut sig: Vec<(usize, Vec<usize>, usize)> = Vec::with_capacity(n);
    loop {
        if cells == n {
            return;
        }
        sig.clear();
        for v in 0..n {
            let mut nb: Vec<usize> = bits(g.adj[v]).map(|w| color[w]).collect();
            nb.sort_unstable();
            sig.push((color[v], nb, v));
        }
        sig.sort_unstable();
        let mut i = 0;
        while i < n {
            let mut j = i;
            while j < n && sig[j].0 == sig[i].0 && sig[j].1 == sig[i].1 {
                color[sig[j].2] = i;
                j += 1;
            }
            i = j;
        }
        let next = distinct(color);
        if next == cells {
            return;
        }
        cells = next;
    }
}

fn distinct(color: &[usize]) -> usize {
    let mut seen = 0u64;
    for &c in color {
        seen |= 1 << c;
    }
    seen.count_ones() as usize
}

fn encode(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let mut rows = vec![0u64; perm.len()];
    for e in g.edges() {
        let (u, v) = e.endpoints();
        rows[perm[u.0]] |= 1 << perm[v.0];
        rows[perm[v.0]] |= 1 << perm[u.0];
    }
    rows
}

struct Search<'g> {
    g: &'g Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, color: Vec<usize>, prefix: &mut Vec<usize>) {
        let n = color.len();
        if distinct(&color) == n {
            let rows = encode(self.g, &color);
            match &self.best {
                None => self.best = Some((rows, color)),
                Some((best_rows, best_perm)) => {
                    if rows < *best_rows {
                        self.best = Some((rows, color));
                    } else if rows == *best_rows {
                        let mut inv = vec![0; n];
                        for (v, &p) in best_perm.iter().enumerate() {
                            inv[p] = v;
                        }
                        let auto: Vec<usize> = color.iter().map(|&p| inv[p]).collect();
                        if auto.iter().enumerate().any(|(v, &w)| v != w) {
                            self.automorphisms.push(auto);
                        }
                    }
                }
            }
            return;
        }
        let mut size = vec![0usize; n];
        for &c in &color {
            size[c] += 1;
        }
        let target = (0..n).find(|&c| size[c] > 1).expect("partition not discrete");
        let members: Vec<usize> = (0..n).filter(|&v| color[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            explored.push(v);
            let mut child = color.clone();
            for &w in &members {
                if w != v {
                    child[w] = target + 1;
                }
            }
            refine(self.g, &mut child);
            prefix.push(v);
            self.visit(child, prefix);
            prefix.pop();
        }
    }

    // Whether v shares an orbit with an explored vertex under the group
    // generated by known automorphisms that fix every prefix vertex.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in &self.automorphisms {
            if prefix.iter().all(|&x| a[x] == x) {
                any = true;
                for x in 0..n {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, a[x]));
                    parent[rx] = ry;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&x| find(&mut parent, x) == rv)
    }
}

/// Permutation `perm` with `perm[old] = new` producing the canonical form.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut color = vec![0usize; n];
    refine(g, &mut color);
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    search.visit(color, &mut Vec::new());
    search.best.expect("search visits at least one leaf").1
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let perm = canonical_labeling(g);
    CanonicalForm {
        n: g.n(),
        rows: encode(g, &perm),
    }
}
