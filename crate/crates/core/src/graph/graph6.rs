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


//! The graph6 text format: a size header followed by the upper triangle of
//! the adjacency matrix, column by column, packed six bits per printable byte.

use thiserror::Error;

use super::{Graph, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {offset}: character {byte:#04x} outside the graph6 range")]
    BadByte { offset: usize, byte: u8 },
    #[error("byte {offset}: size header truncated")]
    TruncatedHeader { offset: usize },
    #[error("graph6 declares {0} vertices; at most {MAX_VERTICES} are supported")]
    TooLarge(usize),
    #[error("byte {offset}: expected {expected} data bytes, found {found}")]
    WrongLength {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {offset}: nonzero padding bits")]
    Padding { offset: usize },
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(Graph6Error::BadByte { offset, byte: b }),
        None => Err(Graph6Error::TruncatedHeader { offset }),
    }
}

/// Parses a single graph6 line. A trailing newline and an optional
/// `>>graph6<<` prefix are accepted.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (bytes, base) = match text.strip_prefix(">>graph6<<") {
        Some(rest) => (rest.as_bytes(), 10),
        None => (text.as_bytes(), 0),
    };
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, start) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            let mut n = 0usize;
            for i in 2..8 {
                n = n << 6 | sextet(bytes, i).map_err(|e| rebase(e, base))? as usize;
            }
            (n, 8)
        } else {
            let mut n = 0usize;
            for i in 1..4 {
                n = n << 6 | sextet(bytes, i).map_err(|e| rebase(e, base))? as usize;
            }
            (n, 4)
        }
    } else {
        (sextet(bytes, 0).map_err(|e| rebase(e, base))? as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let data = &bytes[start..];
    if data.len() != expected {
        return Err(Graph6Error::WrongLength {
            offset: base + start,
            expected,
            found: data.len(),
        });
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for (i, _) in data.iter().enumerate() {
        let s = sextet(data, i).map_err(|e| rebase(e, base + start))?;
        for bit in 0..6 {
            let set = s >> (5 - bit) & 1 == 1;
            if k >= nbits {
                if set {
                    return Err(Graph6Error::Padding {
                        offset: base + start + i,
                    });
                }
                continue;
            }
            if set {
                let (u, v) = column_pair(k);
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(adj))
}

fn rebase(e: Graph6Error, base: usize) -> Graph6Error {
    match e {
        Graph6Error::BadByte { offset, byte } => Graph6Error::BadByte {
            offset: offset + base,
            byte,
        },
        Graph6Error::TruncatedHeader { offset } => Graph6Error::TruncatedHeader {
            offset: offset + base,
        },
        other => other,
    }
}

// Bit k of the upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
fn column_pair(k: usize) -> (usize, usize) {
    let mut v = 1;
    let mut before = 0;
    while before + v <= k {
        before += v;
        v += 1;
    }
    (k - before, v)
}

/// Encodes `g` as a graph6 line without a trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | (g.neighbor_mask(super::VertexId(u)) >> v & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin_fixture;

    #[test]
    fn single_vertex_is_at_sign() {
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn known_encodings() {
        // reference strings as produced by nauty's geng/showg
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(to_graph6(&Graph::complete(3).unwrap()), "Bw");
        assert_eq!(to_graph6(&Graph::cycle(5).unwrap()), "Dhc");
        assert_eq!(to_graph6(&Graph::path(3).unwrap()), "Bg");
    }

    #[test]
    fn parses_k4() {
        let g = from_graph6("C~\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn parses_d_question_brace() {
        let g = from_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn header_prefix_accepted() {
        assert_eq!(from_graph6(">>graph6<<C~").unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(from_graph6(""), Err(Graph6Error::Empty));
        assert!(matches!(
            from_graph6("D?"),
            Err(Graph6Error::WrongLength { offset: 1, expected: 2, found: 1 })
        ));
        assert!(matches!(from_graph6("C\x20"), Err(Graph6Error::BadByte { offset: 1, .. })));
        // K2 uses one data bit; the remaining five must be zero
        assert!(matches!(from_graph6("A_"), Ok(_)));
        assert!(matches!(from_graph6("A`"), Err(Graph6Error::Padding { offset: 1 })));
        assert!(matches!(from_graph6("~?"), Err(Graph6Error::TruncatedHeader { .. })));
    }

    #[test]
    fn long_header_round_trip() {
        let g = Graph::cycle(63).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
        let g = Graph::complete(64).unwrap();
        assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn fixtures_round_trip() {
        for name in crate::graph::fixture_names() {
            let g = builtin_fixture(name).unwrap();
            assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g, "{name}");
        }
    }
}
