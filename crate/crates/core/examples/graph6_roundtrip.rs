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



//! Parse graph6, inspect a graph, re-encode it, and compare canonical forms.

use vizing::graph::{builtin_fixture, canonical_form, from_graph6, to_graph6};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() { vec!["Bw".to_string(), "DQw".into(), "IheA@GUAo".into()] } else { args };
    for text in &inputs {
        let g = match from_graph6(text) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("{text}: {e}");
                continue;
            }
        };
        let back = to_graph6(&g);
        println!(
            "{text}: n={} m={} Δ={} degrees={:?} connected={} roundtrip={}",
            g.n(),
            g.edge_count(),
            g.max_degree(),
            g.degree_sequence(),
            g.is_connected(),
            back == *text
        );
    }

    // a relabeled Petersen graph has the same canonical form
    let p = builtin_fixture("petersen").unwrap();
    let perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
    let q = p.permuted(&perm);
    println!("petersen {} relabeled {}", to_graph6(&p), to_graph6(&q));
    println!("same canonical form: {}", canonical_form(&p) == canonical_form(&q));
}
