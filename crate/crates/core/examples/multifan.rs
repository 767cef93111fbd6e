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



//! Multifans at an uncolored edge of a Δ-critical graph, with the
//! elementarity and linkage checks.

use std::sync::Arc;

use vizing::classify::delta_coloring_of_minus_e;
use vizing::graph::builtin_fixture;
use vizing::structures::{alpha_sequences, check_fan_lemmas, grow_multifan};

fn main() {
    for name in ["pstar", "splitk4", "c5"] {
        let g = Arc::new(builtin_fixture(name).unwrap());
        let e = g.edges()[0];
        let (r, s) = e.endpoints();
        for seed in 0..3 {
            let c = delta_coloring_of_minus_e(&g, e, Some(seed)).unwrap();
            let f = grow_multifan(&c, r, s).unwrap();
            let seqs = alpha_sequences(&c, &f).unwrap();
            let rep = check_fan_lemmas(&c, &f);
            println!("{name} seed {seed}: {} ({} sequences)", f.describe(), seqs.sequences.len());
            println!("  elementary: {}  {}", c.is_elementary(&f.vertices()), rep.summary_line());
        }
    }
}
