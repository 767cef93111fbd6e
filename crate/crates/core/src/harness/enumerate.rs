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


//! All simple graphs on `n ≤ 8` vertices up to isomorphism.
//!
//! Each graph on `n` vertices is some graph on `n − 1` vertices plus one
//! vertex joined to a subset of the old ones. Level `n` is produced by
//! extending every representative of level `n − 1` in all `2^(n−1)` ways and
//! keeping one graph per canonical form.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{canonical_form, CanonicalForm, Graph};

pub const MAX_ENUMERATION_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("enumeration is limited to n <= {MAX_ENUMERATION_ORDER}, got {0}")]
    TooLarge(usize),
}

fn extend(g: &Graph, subset: u64) -> Graph {
    let n = g.n();
    let mut adj: Vec<u64> = (0..n).map(|v| g.neighbor_mask(crate::graph::VertexId(v))).collect();
    for (v, row) in adj.iter_mut().enumerate() {
        if subset >> v & 1 == 1 {
            *row |= 1 << n;
        }
    }
    adj.push(subset);
    Graph::from_adjacency(adj)
}

fn next_level(prev: &[Graph]) -> Vec<Graph> {
    let n = prev.first().map_or(0, |g| g.n());
    let forms: HashSet<CanonicalForm> = prev
        .par_iter()
        .flat_map_iter(|g| (0..1u64 << n).map(move |s| canonical_form(&extend(g, s))))
        .collect();
    let mut forms: Vec<CanonicalForm> = forms.into_iter().collect();
    forms.sort();
    forms.iter().map(|f| f.to_graph()).collect()
}

/// Representatives of every isomorphism class on `n` vertices, each in
/// canonical labeling, sorted by canonical form.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(EnumerationError::TooLarge(n));
    }
    let mut level = vec![Graph::empty(0).expect("empty graph")];
    for _ in 0..n {
        level = next_level(&level);
    }
    Ok(level)
}

/// Levels `0..=n_max`.
pub fn enumerate_up_to(n_max: usize) -> Result<Vec<Vec<Graph>>, EnumerationError> {
    if n_max > MAX_ENUMERATION_ORDER {
        return Err(EnumerationError::TooLarge(n_max));
    }
    let mut levels = vec![vec![Graph::empty(0).expect("empty graph")]];
    for _ in 0..n_max {
        let next = next_level(levels.last().unwrap());
        levels.push(next);
    }
    Ok(levels)
}
