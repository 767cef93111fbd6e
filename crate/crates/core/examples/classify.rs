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



//! Chromatic index, class and criticality of the built-in fixtures.

use vizing::classify::{classify, exact_chromatic_index, is_delta_critical, vizing_plus_one_coloring};
use vizing::graph::{builtin_fixture, fixture_names};

fn main() {
    println!("{:<10} {:>2} {:>2} {:>3} {:>7} {:>8} {:>9}", "graph", "n", "Δ", "χ'", "class", "critical", "overfull");
    for name in fixture_names() {
        let g = builtin_fixture(name).unwrap();
        let chi = exact_chromatic_index(&g).unwrap();
        let class = classify(&g).unwrap();
        let crit = is_delta_critical(&g).unwrap();
        let viz = vizing_plus_one_coloring(&g);
        assert!(viz.validate() && viz.k() as usize <= g.max_degree() + 1);
        println!(
            "{:<10} {:>2} {:>2} {:>3} {:>7} {:>8} {:>9}",
            name,
            g.n(),
            g.max_degree(),
            chi,
            class.to_string(),
            crit,
            g.is_overfull()
        );
    }
}
