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



//! Runs the lemma sweeps over small Δ-critical graphs and prints a table.

use vizing::harness::{delta_critical_corpus, lemma_sweep, SweepConfig};

fn main() {
    let corpus = delta_critical_corpus(7).unwrap();
    let reports = lemma_sweep(&corpus, &SweepConfig::default());
    for r in &reports {
        println!("{}", r.summary_line());
    }
}
