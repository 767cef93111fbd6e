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



//! Graphs up to isomorphism by order, and how many are Δ-critical.

use vizing::classify::is_delta_critical;
use vizing::harness::enumerate_graphs;

fn main() {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    for n in 1..=n_max {
        let all = enumerate_graphs(n).unwrap();
        let critical = all
            .iter()
            .filter(|g| g.is_connected() && g.edge_count() > 0 && is_delta_critical(g).unwrap_or(false))
            .count();
        println!("n={n}: {} graphs, {critical} Δ-critical", all.len());
    }
}
