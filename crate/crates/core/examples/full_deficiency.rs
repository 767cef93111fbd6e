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



//! Full-deficiency pairs in Δ-critical graphs and the multigraph obtained by
//! identifying such a pair.

use vizing::graph::{identify_pair, to_graph6};
use vizing::harness::{delta_critical_corpus, verify_corollary, verify_theorem2};

fn main() {
    let corpus = delta_critical_corpus(7).unwrap();
    println!("{} Δ-critical graphs on up to 7 vertices", corpus.len());
    for entry in corpus.entries.iter().take(6) {
        let g = &entry.graph;
        let pairs = g.full_deficiency_pairs();
        print!("{} Δ={} pairs={}", to_graph6(g), g.max_degree(), pairs.len());
        if let Some(&(a, b)) = pairs.first() {
            let m = identify_pair(g, a, b).unwrap();
            print!("  {a}+{b}: Δ'={} regular={}", m.max_degree(), m.is_regular());
        }
        println!();
    }
    println!("{}", verify_theorem2(&corpus).summary_line());
    println!("{}", verify_corollary(&corpus).summary_line());
}
