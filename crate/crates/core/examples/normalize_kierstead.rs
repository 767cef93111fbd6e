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



//! Puts a 5-vertex Kierstead path into its target color pattern and
//! replays the recorded swaps.

use vizing::harness::planted_class_one;
use vizing::normalize::{normalize_k5, replay_proof_script, Expectation, NormalizationOutcome};
use vizing::structures::end_overlap;

fn main() {
    let (c, path) = planted_class_one();
    println!("host {} Δ={}", vizing::graph::to_graph6(c.graph()), c.graph().max_degree());
    println!("path {}  overlap at the end: {}", path.describe(), end_overlap(&c, &path));

    match normalize_k5(&c, &path) {
        Ok(NormalizationOutcome::Normalized { alpha, beta, gamma, script, path: branches, .. }) => {
            println!("normalized: α={alpha} β={beta} γ={gamma}");
            println!("branches: {}", branches.join(" > "));
            println!("{script}");
            let rep = replay_proof_script(&c, &script, Expectation::ProperPartial);
            println!("{}", rep.summary_line());
        }
        Ok(NormalizationOutcome::ProperColoring { coloring, script, reason }) => {
            println!("host is Class 1: {reason}");
            println!("{} steps, full={} valid={}", script.len(), coloring.is_full(), coloring.validate());
        }
        Err(e) => println!("error: {e}"),
    }
}
