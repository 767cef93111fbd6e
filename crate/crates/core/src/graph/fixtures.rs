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


//! Named graphs with fixed vertex numbering.
//!
//! | name       | graph                                                         |
//! |------------|---------------------------------------------------------------|
//! | `triangle` | K3                                                            |
//! | `c5`       | 5-cycle `0-1-2-3-4-0`                                         |
//! | `k4`, `k5`, `k6`, `k7` | complete graphs                                   |
//! | `petersen` | outer cycle `0..4`, spokes `i ~ i+5`, inner `i+5 ~ (i+2)%5+5` |
//! | `pstar`    | `petersen` minus vertex 0, remaining vertices shifted down by one |
//! | `splitk4`  | `k4` with vertex 0 split, part one `{1}`; the new vertex is 4 |

use super::{Graph, SplitSpec};

const NAMES: &[&str] = &[
    "triangle", "c5", "k4", "k5", "k6", "k7", "petersen", "pstar", "splitk4",
];

pub fn fixture_names() -> &'static [&'static str] {
    NAMES
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, edges).expect("petersen edges are valid")
}

/// Looks up a fixture by name (case-insensitive).
pub fn builtin_fixture(name: &str) -> Option<Graph> {
    let g = match name.to_ascii_lowercase().as_str() {
        "triangle" | "k3" => Graph::complete(3),
        "c5" => Graph::cycle(5),
        "k4" => Graph::complete(4),
        "k5" => Graph::complete(5),
        "k6" => Graph::complete(6),
        "k7" => Graph::complete(7),
        "petersen" => Ok(petersen()),
        "pstar" => {
            let p = petersen();
            Graph::from_edges(
                9,
                p.edges()
                    .iter()
                    .filter(|e| !e.contains(0.into()))
                    .map(|e| {
                        let (u, v) = e.endpoints();
                        (u.0 - 1, v.0 - 1)
                    }),
            )
        }
        "splitk4" => Graph::complete(4)
            .and_then(|k4| k4.split_vertex(&SplitSpec::new(0, [1]))),
        _ => return None,
    };
    Some(g.expect("fixture construction cannot fail"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pstar_shape() {
        let g = builtin_fixture("pstar").unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.degree_sequence(), vec![2, 2, 2, 3, 3, 3, 3, 3, 3]);
        assert!(g.is_connected());
    }

    #[test]
    fn petersen_is_cubic_girth_five() {
        let g = petersen();
        assert!(g.is_regular());
        assert_eq!(g.max_degree(), 3);
        // no triangles or 4-cycles: adjacent vertices share no neighbor and
        // non-adjacent ones share exactly one
        for u in g.vertices() {
            for v in g.vertices().filter(|&v| v > u) {
                let common = (g.neighbor_mask(u) & g.neighbor_mask(v)).count_ones();
                assert_eq!(common, if g.has_edge(u, v) { 0 } else { 1 });
            }
        }
    }

    #[test]
    fn k6_and_unknown() {
        let g = builtin_fixture("k6").unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 15));
        assert!(builtin_fixture("nope").is_none());
    }
}
