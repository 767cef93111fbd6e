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



//! Kempe chains on an edge coloring of the 3-cube, and a swap script replay.

use std::sync::Arc;

use vizing::classify::{find_coloring, SolverConfig};
use vizing::coloring::{apply_script, Color, Step, SwapScript};
use vizing::graph::VertexId;
use vizing::harness::{class1_regular_family, FamilyKind};

fn main() {
    let q3 = class1_regular_family(FamilyKind::Hypercube { d: 3 }).unwrap();
    let g: Arc<_> = q3.graph.clone();
    let c = find_coloring(&g, 3, None, SolverConfig::seeded(7)).unwrap().unwrap();
    println!("{}", c.to_text());

    let (a, b) = (Color(1), Color(2));
    let chain = c.chain_through(VertexId(0), a, b).unwrap();
    let vs: Vec<String> = chain.vertices.iter().map(|v| v.to_string()).collect();
    println!("({a},{b})-chain through 0: {:?} [{}]", chain.kind, vs.join(" "));

    let mut swapped = c.clone();
    swapped.swap_chain(&chain).unwrap();
    println!("after the swap: proper={} full={}", swapped.is_proper(), swapped.is_full());

    // the same change as a script, then a color rename
    let mut script = SwapScript::new();
    script.push(Step::chain(VertexId(0), None, a, b));
    script.push(Step::rename(Color(2), Color(3)));
    let (out, trace) = apply_script(&c, &script).unwrap();
    for e in &trace.entries {
        println!("  {} touched {} edges, proper={}", e.step, e.edges.len(), e.proper);
    }
    println!("script result valid: {}", out.validate());
}
