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


//! Backtracking search for edge k-colorings.
//!
//! Each connected component is solved on its own. Within a component the
//! edges at one maximum-degree vertex are precolored `1..d` (any coloring can
//! be renamed to agree there), then the search repeatedly picks the
//! uncolored edge with the fewest available colors. A color not used so far
//! is tried at most once per node, as the next unused color. Besides the
//! dead-edge cut, a node is abandoned when the colors cannot cover the
//! remaining edges: color `c` can still be placed on at most ⌊m_c/2⌋ more
//! edges, where `m_c` counts vertices with uncolored edges that miss `c`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::SolverError;
use crate::graph::{bits, Graph};

pub(crate) struct Budget {
    pub limit: u64,
    pub used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Budget {
        Budget { limit, used: 0 }
    }

    fn tick(&mut self, depth: usize, best: &mut usize) -> Result<(), SolverError> {
        self.used += 1;
        *best = (*best).max(depth);
        if self.used > self.limit {
            Err(SolverError::Budget {
                nodes: self.used,
                deepest: *best,
            })
        } else {
            Ok(())
        }
    }
}

fn palette(k: u8) -> u64 {
    ((1u128 << (k as u32 + 1)) - 2) as u64
}

struct Search<'a> {
    k: u8,
    // (u, v) per local edge
    ends: Vec<(usize, usize)>,
    rank: Vec<usize>,
    colors: Vec<u8>,
    present: Vec<u64>,
    // uncolored edge count per vertex
    open: Vec<u32>,
    used_max: u8,
    rng: Option<ChaCha8Rng>,
    budget: &'a mut Budget,
    deepest: usize,
    colored: usize,
}

impl Search<'_> {
    fn set(&mut self, i: usize, c: u8) {
        let (u, v) = self.ends[i];
        self.colors[i] = c;
        self.present[u] |= 1 << c;
        self.present[v] |= 1 << c;
        self.open[u] -= 1;
        self.open[v] -= 1;
        self.colored += 1;
    }

    fn unset(&mut self, i: usize) {
        let (u, v) = self.ends[i];
        let c = self.colors[i];
        self.colors[i] = 0;
        self.present[u] &= !(1 << c);
        self.present[v] &= !(1 << c);
        self.open[u] += 1;
        self.open[v] += 1;
        self.colored -= 1;
    }

    fn coverable(&self, remaining: usize, verts: u64) -> bool {
        let mut room = 0usize;
        let full = palette(self.k);
        let mut miss = [0u32; 64];
        for v in bits(verts) {
            if self.open[v] == 0 {
                continue;
            }
            for c in bits(full & !self.present[v]) {
                miss[c] += 1;
            }
        }
        for c in 1..=self.k as usize {
            room += (miss[c] / 2) as usize;
        }
        room >= remaining
    }

    fn dfs(&mut self, verts: u64) -> Result<bool, SolverError> {
        self.budget.tick(self.colored, &mut self.deepest)?;
        let remaining = self.colors.iter().filter(|&&c| c == 0).count();
        if remaining == 0 {
            return Ok(true);
        }
        if !self.coverable(remaining, verts) {
            return Ok(false);
        }
        let full = palette(self.k);
        let mut best: Option<(u32, usize, usize, u64)> = None;
        for i in 0..self.ends.len() {
            if self.colors[i] != 0 {
                continue;
            }
            let (u, v) = self.ends[i];
            let avail = full & !(self.present[u] | self.present[v]);
            let cnt = avail.count_ones();
            if cnt == 0 {
                return Ok(false);
            }
            let key = (cnt, self.rank[i]);
            if best.map_or(true, |b| key < (b.0, b.1)) {
                best = Some((cnt, self.rank[i], i, avail));
            }
        }
        let (_, _, i, avail) = best.expect("some edge is uncolored");
        let mut values: Vec<u8> = bits(avail)
            .map(|c| c as u8)
            .filter(|&c| c <= self.used_max)
            .collect();
        if let Some(rng) = self.rng.as_mut() {
            values.shuffle(rng);
        }
        let fresh = self.used_max + 1;
        if fresh <= self.k && avail >> fresh & 1 == 1 {
            values.push(fresh);
        }
        for c in values {
            let prev_max = self.used_max;
            self.used_max = self.used_max.max(c);
            self.set(i, c);
            if self.dfs(verts)? {
                return Ok(true);
            }
            self.unset(i);
            self.used_max = prev_max;
        }
        Ok(false)
    }
}

/// Finds a proper k-coloring of every edge except `skip`, as per-edge colors
/// (0 on the skipped edge), or `None` if none exists.
pub(crate) fn solve(
    g: &Graph,
    k: u8,
    skip: Option<usize>,
    seed: Option<u64>,
    budget: &mut Budget,
) -> Result<Option<Vec<u8>>, SolverError> {
    let n = g.n();
    let mut adj: Vec<u64> = (0..n).map(|v| g.neighbor_mask(v.into())).collect();
    if let Some(s) = skip {
        let (u, v) = g.edges()[s].endpoints();
        adj[u.0] &= !(1 << v.0);
        adj[v.0] &= !(1 << u.0);
    }
    if adj.iter().any(|m| m.count_ones() > k as u32) {
        return Ok(None);
    }
    let h = Graph::from_adjacency(adj.clone());
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let mut out = vec![0u8; g.edge_count()];
    for comp in h.component_masks() {
        let local: Vec<usize> = (0..g.edge_count())
            .filter(|&i| Some(i) != skip)
            .filter(|&i| comp >> g.edges()[i].endpoints().0 .0 & 1 == 1)
            .collect();
        if local.is_empty() {
            continue;
        }
        let size = comp.count_ones() as usize;
        if local.len() > k as usize * (size / 2) {
            return Ok(None);
        }
        let ends: Vec<(usize, usize)> = local
            .iter()
            .map(|&i| {
                let (u, v) = g.edges()[i].endpoints();
                (u.0, v.0)
            })
            .collect();
        let mut rank: Vec<usize> = (0..local.len()).collect();
        let mut vorder: Vec<usize> = bits(comp).collect();
        if let Some(r) = rng.as_mut() {
            rank.shuffle(r);
            vorder.shuffle(r);
        }
        let mut open = vec![0u32; n];
        for &(u, v) in &ends {
            open[u] += 1;
            open[v] += 1;
        }
        let mut search = Search {
            k,
            ends,
            rank,
            colors: vec![0; local.len()],
            present: vec![0; n],
            open,
            used_max: 0,
            rng: rng.take(),
            budget,
            deepest: 0,
            colored: 0,
        };
        let hub = *vorder
            .iter()
            .max_by_key(|&&v| (adj[v].count_ones(), std::cmp::Reverse(v)))
            .expect("component is non-empty");
        let mut star: Vec<usize> = (0..local.len())
            .filter(|&i| search.ends[i].0 == hub || search.ends[i].1 == hub)
            .collect();
        star.sort_by_key(|&i| search.rank[i]);
        for (c, &i) in star.iter().enumerate() {
            search.set(i, c as u8 + 1);
        }
        search.used_max = star.len() as u8;
        let found = search.dfs(comp)?;
        rng = search.rng.take();
        if !found {
            return Ok(None);
        }
        for (j, &i) in local.iter().enumerate() {
            out[i] = search.colors[j];
        }
    }
    Ok(Some(out))
}

/// Every k-coloring of the edges except `skip`, up to renaming colors, in a
/// fixed order; stops after `cap` colorings. Returns the colorings and
/// whether the list is complete.
pub(crate) fn enumerate(g: &Graph, k: u8, skip: Option<usize>, cap: usize) -> (Vec<Vec<u8>>, bool) {
    let order: Vec<usize> = (0..g.edge_count()).filter(|&i| Some(i) != skip).collect();
    let mut colors = vec![0u8; g.edge_count()];
    let mut present = vec![0u64; g.n()];
    let mut out = Vec::new();
    let full = palette(k);
    fn rec(
        g: &Graph,
        order: &[usize],
        pos: usize,
        used_max: u8,
        k: u8,
        full: u64,
        colors: &mut Vec<u8>,
        present: &mut Vec<u64>,
        out: &mut Vec<Vec<u8>>,
        cap: usize,
    ) -> bool {
        if pos == order.len() {
            out.push(colors.clone());
            return out.len() < cap;
        }
        let i = order[pos];
        let (u, v) = g.edges()[i].endpoints();
        let avail = full & !(present[u.0] | present[v.0]);
        let top = (used_max + 1).min(k);
        for c in bits(avail).map(|c| c as u8).filter(|&c| c <= top) {
            colors[i] = c;
            present[u.0] |= 1 << c;
            present[v.0] |= 1 << c;
            let go = rec(g, order, pos + 1, used_max.max(c), k, full, colors, present, out, cap);
            present[u.0] &= !(1 << c);
            present[v.0] &= !(1 << c);
            colors[i] = 0;
            if !go {
                return false;
            }
        }
        true
    }
    let complete = rec(g, &order, 0, 0, k, full, &mut colors, &mut present, &mut out, cap);
    (out, complete)
}
