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



//! Splits every vertex of a regular Class 1 graph in every way and checks
//! that each split graph is Δ-critical.

use vizing::classify::is_delta_critical;
use vizing::graph::to_graph6;
use vizing::harness::{class1_regular_family, verify_theorem1, FamilyKind};
use vizing::harness::theorems::distinct_splits;

fn main() {
    let k4 = class1_regular_family(FamilyKind::CompleteEven { n: 4 }).unwrap();
    let (total, splits) = distinct_splits(&k4.graph);
    println!("K4: {total} splits, {} up to isomorphism", splits.len());
    for (spec, h) in &splits {
        let part: Vec<String> = spec.part_one.iter().map(|v| v.to_string()).collect();
        println!("  v={} part={{{}}} -> {} critical={}", spec.vertex, part.join(","), to_graph6(h), is_delta_critical(h).unwrap());
    }

    for kind in [
        FamilyKind::CompleteEven { n: 6 },
        FamilyKind::CompleteEven { n: 8 },
        FamilyKind::Circulant { n: 8, jumps: &[1, 2, 3] },
        FamilyKind::Hypercube { d: 3 },
    ] {
        let m = class1_regular_family(kind).unwrap();
        let rep = verify_theorem1(&m);
        println!("{:<10} {}", m.name, rep.summary_line());
        for note in &rep.notes {
            println!("  {note}");
        }
    }
}
