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


//! Constructive (Δ+1)-edge-coloring by fan rotation and cd-path inversion.

use std::sync::Arc;

use crate::coloring::{Color, PartialEdgeColoring};
use crate::graph::{Edge, Graph, VertexId};

/// Colors every edge of `g` with at most Δ+1 colors.
pub fn vizing_plus_one_coloring(g: &Graph) -> PartialEdgeColoring {
    let k = (g.max_degree() + 1).max(1) as u8;
    let mut c = PartialEdgeColoring::new(Arc::new(g.clone()), k).expect("palette fits");
    for &e in g.edges() {
        let (u, v) = e.endpoints();
        color_edge(&mut c, u, v);
        debug_assert!(c.is_proper());
    }
    debug_assert!(c.validate());
    c
}

fn maximal_fan(c: &PartialEdgeColoring, u: VertexId, v: VertexId) -> Vec<VertexId> {
    let mut fan = vec![v];
    let mut in_fan = 1u64 << v.0;
    loop {
        let last = *fan.last().unwrap();
        let free = c.missing(last);
        let next = c.graph().neighbors(u).find(|&w| {
            in_fan >> w.0 & 1 == 0 && c.color(u, w).is_some_and(|col| free.contains(col))
        });
        match next {
            Some(w) => {
                fan.push(w);
                in_fan |= 1 << w.0;
            }
            None => return fan,
        }
    }
}

fn color_edge(c: &mut PartialEdgeColoring, u: VertexId, v: VertexId) {
    let fan = maximal_fan(c, u, v);
    let cu = c.missing(u).min().expect("u misses a color");
    let d = c.missing(*fan.last().unwrap()).min().expect("fan end misses a color");
    if cu != d {
        c.swap_at(u, None, d, cu).expect("u ends its (c,d)-path");
    }
    // first fan vertex, in the still-valid prefix, that misses d
    let mut end = None;
    for (j, &w) in fan.iter().enumerate() {
        if j > 0 {
            let col = c.color(u, w);
            if !col.is_some_and(|col| c.missing(fan[j - 1]).contains(col)) {
                break;
            }
        }
        if c.missing(w).contains(d) {
            end = Some(j);
            break;
        }
    }
    let end = end.expect("rotation target exists");
    for j in 0..end {
        let col: Color = c.color(u, fan[j + 1]).expect("fan edge colored");
        c.uncolor_edge(Edge::new(u, fan[j + 1])).expect("colored");
        c.assign(Edge::new(u, fan[j]), col).expect("fan color is free");
    }
    c.assign(Edge::new(u, fan[end]), d).expect("d is free at both ends");
}
