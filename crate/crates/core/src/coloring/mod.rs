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


//! Partial edge colorings.
//!
//! A [`PartialEdgeColoring`] assigns colors in `1..=k` to some edges of a
//! shared [`Graph`]. Besides the per-edge assignment it keeps, for every
//! vertex, a count of incident edges per color, so missing and present sets
//! are O(1) even while a swap script passes through an improper state.

mod kempe;
mod script;

pub use kempe::{ChainKind, KempeChain};
pub use script::{apply_script, Action, ScriptError, Step, SwapScript, Target, Trace};

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bits, Edge, Graph, VertexId};

/// Largest palette size.
pub const MAX_COLORS: u8 = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Color(pub u8);

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Set of colors as a bitmask; bit `c` stands for color `c`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorSet(pub u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// `{1, ..., k}`.
    pub fn full(k: u8) -> ColorSet {
        ColorSet(((1u128 << (k as u32 + 1)) - 2) as u64)
    }

    pub fn singleton(c: Color) -> ColorSet {
        ColorSet(1 << c.0)
    }

    #[inline]
    pub fn contains(self, c: Color) -> bool {
        self.0 >> c.0 & 1 == 1
    }

    pub fn insert(&mut self, c: Color) {
        self.0 |= 1 << c.0;
    }

    pub fn remove(&mut self, c: Color) {
        self.0 &= !(1 << c.0);
    }

    #[inline]
    pub fn union(self, o: ColorSet) -> ColorSet {
        ColorSet(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: ColorSet) -> ColorSet {
        ColorSet(self.0 & o.0)
    }

    #[inline]
    pub fn difference(self, o: ColorSet) -> ColorSet {
        ColorSet(self.0 & !o.0)
    }

    pub fn is_disjoint(self, o: ColorSet) -> bool {
        self.0 & o.0 == 0
    }

    pub fn is_subset(self, o: ColorSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min(self) -> Option<Color> {
        (self.0 != 0).then(|| Color(self.0.trailing_zeros() as u8))
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        bits(self.0).map(|c| Color(c as u8))
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|c| c.0)).finish()
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for ColorSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter().map(|c| c.0))
    }
}

impl<'de> Deserialize<'de> for ColorSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<u8> = Vec::deserialize(d)?;
        Ok(v.into_iter().map(Color).collect())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("palette size {0} outside [1, {MAX_COLORS}]")]
    BadPalette(u8),
    #[error("color {0} outside the palette [1, {1}]")]
    ColorOutOfRange(Color, u8),
    #[error("edge {0} is not in the graph")]
    NoSuchEdge(Edge),
    #[error("edge {0} is already uncolored")]
    AlreadyUncolored(Edge),
    #[error("edge {0} is already colored")]
    AlreadyColored(Edge),
    #[error("color {color} is present at {vertex}, cannot put it on {edge}")]
    Conflict {
        edge: Edge,
        color: Color,
        vertex: VertexId,
    },
    #[error("edge {edge} has color {actual:?}, expected {expected}")]
    WrongColor {
        edge: Edge,
        expected: Color,
        actual: Option<Color>,
    },
    #[error("colors of a chain must differ")]
    SameColors,
    #[error("({0},{1})-chain through {2} is not a path or cycle (coloring improper)")]
    Branching(Color, Color, VertexId),
    #[error("chain is stale: no longer a component of the coloring")]
    StaleChain,
    #[error("{0} and {1} are not on a common ({2},{3})-path")]
    NotLinked(VertexId, VertexId, Color, Color),
    #[error("({1},{2})-chain through {0} is a cycle; a segment is ambiguous")]
    CycleSegment(VertexId, Color, Color),
    #[error("{0} is interior to its ({1},{2})-path; a starting edge is required")]
    NeedsDirection(VertexId, Color, Color),
    #[error("edge {0} does not carry either chain color")]
    NotOnChain(Edge),
    #[error("coloring text: {0}")]
    Parse(String),
}

/// Edge coloring of `G − U` with colors `1..=k`, where `U` is the set of
/// uncolored edges. Cloning is cheap; the graph is shared.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialEdgeColoring {
    graph: Arc<Graph>,
    k: u8,
    colors: Vec<u8>,
    // counts[v * 64 + c] = number of edges at v colored c
    counts: Vec<u8>,
    present: Vec<u64>,
}

impl fmt::Debug for PartialEdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl PartialEdgeColoring {
    /// All edges uncolored.
    pub fn new(graph: Arc<Graph>, k: u8) -> Result<Self, ColoringError> {
        if k == 0 || k > MAX_COLORS {
            return Err(ColoringError::BadPalette(k));
        }
        let m = graph.edge_count();
        let n = graph.n();
        Ok(PartialEdgeColoring {
            graph,
            k,
            colors: vec![0; m],
            counts: vec![0; n * 64],
            present: vec![0; n],
        })
    }

    /// Builds a coloring from per-edge colors indexed like `graph.edges()`.
    /// Fails if the result is improper.
    pub fn from_assignment(
        graph: Arc<Graph>,
        k: u8,
        assignment: &[Option<Color>],
    ) -> Result<Self, ColoringError> {
        let mut c = PartialEdgeColoring::new(graph, k)?;
        assert_eq!(assignment.len(), c.graph.edge_count(), "one entry per edge");
        for (i, a) in assignment.iter().enumerate() {
            if let Some(col) = *a {
                let e = c.graph.edges()[i];
                c.assign(e, col)?;
            }
        }
        Ok(c)
    }

    /// Like [`from_assignment`](Self::from_assignment) but accepts improper
    /// assignments; colors must still lie in the palette.
    pub fn from_assignment_unchecked(
        graph: Arc<Graph>,
        k: u8,
        assignment: &[Option<Color>],
    ) -> Result<Self, ColoringError> {
        let mut c = PartialEdgeColoring::new(graph, k)?;
        for (i, a) in assignment.iter().enumerate() {
            if let Some(col) = *a {
                c.check_range(col)?;
                c.set_raw(i, Some(col));
            }
        }
        Ok(c)
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn shared_graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    #[inline]
    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn palette(&self) -> ColorSet {
        ColorSet::full(self.k)
    }

    /// Per-edge colors indexed like `graph().edges()`.
    pub fn assignment(&self) -> Vec<Option<Color>> {
        self.colors
            .iter()
            .map(|&c| (c != 0).then_some(Color(c)))
            .collect()
    }

    #[inline]
    pub fn color_at(&self, edge_index: usize) -> Option<Color> {
        match self.colors[edge_index] {
            0 => None,
            c => Some(Color(c)),
        }
    }

    /// φ(uv); `None` if `uv` is uncolored or not an edge.
    #[inline]
    pub fn color(&self, u: VertexId, v: VertexId) -> Option<Color> {
        self.graph.edge_index(u, v).and_then(|i| self.color_at(i))
    }

    pub fn edge_color(&self, e: Edge) -> Option<Color> {
        let (u, v) = e.endpoints();
        self.color(u, v)
    }

    pub fn uncolored_edges(&self) -> Vec<Edge> {
        self.graph
            .edges()
            .iter()
            .zip(&self.colors)
            .filter(|(_, &c)| c == 0)
            .map(|(e, _)| *e)
            .collect()
    }

    pub fn uncolored_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c == 0).count()
    }

    pub fn is_full(&self) -> bool {
        self.colors.iter().all(|&c| c != 0)
    }

    /// φ(v): colors on at least one edge at `v`.
    #[inline]
    pub fn present(&self, v: VertexId) -> ColorSet {
        ColorSet(self.present[v.0])
    }

    /// φ̄(v): colors of `1..=k` on no edge at `v`.
    #[inline]
    pub fn missing(&self, v: VertexId) -> ColorSet {
        self.palette().difference(self.present(v))
    }

    /// Union of missing sets.
    pub fn missing_union(&self, vs: &[VertexId]) -> ColorSet {
        vs.iter().fold(ColorSet::EMPTY, |s, &v| s.union(self.missing(v)))
    }

    /// Number of edges at `v` carrying `c`; more than one only in improper states.
    #[inline]
    pub fn count(&self, v: VertexId, c: Color) -> u8 {
        self.counts[v.0 * 64 + c.0 as usize]
    }

    /// The neighbor `w` with φ(vw) = `c` (the smallest, if several).
    pub fn neighbor_by_color(&self, v: VertexId, c: Color) -> Option<VertexId> {
        if !self.present(v).contains(c) {
            return None;
        }
        self.graph
            .neighbors(v)
            .find(|&w| self.color(v, w) == Some(c))
    }

    /// Whether the missing sets of `vs` are pairwise disjoint.
    pub fn is_elementary(&self, vs: &[VertexId]) -> bool {
        let mut seen = ColorSet::EMPTY;
        for &v in vs {
            let m = self.missing(v);
            if !seen.is_disjoint(m) {
                return false;
            }
            seen = seen.union(m);
        }
        true
    }

    fn check_range(&self, c: Color) -> Result<(), ColoringError> {
        if c.0 == 0 || c.0 > self.k {
            Err(ColoringError::ColorOutOfRange(c, self.k))
        } else {
            Ok(())
        }
    }

    fn index(&self, e: Edge) -> Result<usize, ColoringError> {
        let (u, v) = e.endpoints();
        self.graph
            .edge_index(u, v)
            .ok_or(ColoringError::NoSuchEdge(e))
    }

    /// Sets the color of edge `i` without any propriety check.
    pub(crate) fn set_raw(&mut self, i: usize, c: Option<Color>) {
        let (u, v) = self.graph.edges()[i].endpoints();
        let old = self.colors[i];
        if old != 0 {
            for w in [u, v] {
                let slot = &mut self.counts[w.0 * 64 + old as usize];
                *slot -= 1;
                if *slot == 0 {
                    self.present[w.0] &= !(1 << old);
                }
            }
        }
        let new = c.map_or(0, |c| c.0);
        self.colors[i] = new;
        if new != 0 {
            for w in [u, v] {
                self.counts[w.0 * 64 + new as usize] += 1;
                self.present[w.0] |= 1 << new;
            }
        }
    }

    /// Colors an uncolored edge with a color missing at both ends.
    pub fn assign(&mut self, e: Edge, c: Color) -> Result<(), ColoringError> {
        self.check_range(c)?;
        let i = self.index(e)?;
        if self.colors[i] != 0 {
            return Err(ColoringError::AlreadyColored(e));
        }
        let (u, v) = e.endpoints();
        for w in [u, v] {
            if self.present(w).contains(c) {
                return Err(ColoringError::Conflict {
                    edge: e,
                    color: c,
                    vertex: w,
                });
            }
        }
        self.set_raw(i, Some(c));
        Ok(())
    }

    pub fn uncolor_edge(&mut self, e: Edge) -> Result<Color, ColoringError> {
        let i = self.index(e)?;
        let old = self.color_at(i).ok_or(ColoringError::AlreadyUncolored(e))?;
        self.set_raw(i, None);
        Ok(old)
    }

    /// Changes the color of a colored edge to `to`, which must be missing at
    /// both ends once the edge's own color is discounted.
    pub fn recolor_edge(&mut self, e: Edge, to: Color) -> Result<(), ColoringError> {
        self.check_range(to)?;
        let i = self.index(e)?;
        let old = self.color_at(i).ok_or(ColoringError::AlreadyUncolored(e))?;
        if old == to {
            return Ok(());
        }
        let (u, v) = e.endpoints();
        for w in [u, v] {
            if self.present(w).contains(to) {
                return Err(ColoringError::Conflict {
                    edge: e,
                    color: to,
                    vertex: w,
                });
            }
        }
        self.set_raw(i, Some(to));
        Ok(())
    }

    /// Exchanges the names of colors `a` and `b` on every edge.
    pub fn permute_colors(&mut self, a: Color, b: Color) -> Result<(), ColoringError> {
        self.check_range(a)?;
        self.check_range(b)?;
        if a == b {
            return Ok(());
        }
        for i in 0..self.colors.len() {
            let c = self.colors[i];
            if c == a.0 {
                self.set_raw(i, Some(b));
            } else if c == b.0 {
                self.set_raw(i, Some(a));
            }
        }
        Ok(())
    }

    /// No two edges at a vertex share a color.
    pub fn is_proper(&self) -> bool {
        self.counts.iter().all(|&c| c <= 1)
    }

    /// Propriety plus consistency of the cached per-vertex tables.
    pub fn validate(&self) -> bool {
        let n = self.graph.n();
        let mut counts = vec![0u8; n * 64];
        for (e, &c) in self.graph.edges().iter().zip(&self.colors) {
            if c > self.k {
                return false;
            }
            if c != 0 {
                let (u, v) = e.endpoints();
                counts[u.0 * 64 + c as usize] += 1;
                counts[v.0 * 64 + c as usize] += 1;
            }
        }
        if counts != self.counts {
            return false;
        }
        let present_ok = (0..n).all(|v| {
            let p = (1..64).fold(0u64, |m, c| if counts[v * 64 + c] > 0 { m | 1 << c } else { m });
            p == self.present[v]
        });
        present_ok && self.is_proper()
    }

    /// Serializes as a `k=<k> uncolored=<count>` header followed by one
    /// `u v c` line per edge (`u v -` when uncolored).
    pub fn to_text(&self) -> String {
        let mut s = format!("k={} uncolored={}\n", self.k, self.uncolored_count());
        for (e, &c) in self.graph.edges().iter().zip(&self.colors) {
            let (u, v) = e.endpoints();
            if c == 0 {
                s.push_str(&format!("{u} {v} -\n"));
            } else {
                s.push_str(&format!("{u} {v} {c}\n"));
            }
        }
        s
    }

    /// One base-36 digit per edge in `graph().edges()` order, `-` when
    /// uncolored. Only for palettes of at most 35 colors.
    pub fn to_compact(&self) -> String {
        self.colors
            .iter()
            .map(|&c| if c == 0 { '-' } else { char::from_digit(c as u32, 36).unwrap_or('?') })
            .collect()
    }

    /// Parses [`to_compact`](Self::to_compact) output.
    pub fn from_compact(graph: Arc<Graph>, k: u8, text: &str) -> Result<Self, ColoringError> {
        let mut assignment = Vec::with_capacity(graph.edge_count());
        for ch in text.trim().chars() {
            match ch {
                '-' => assignment.push(None),
                _ => match ch.to_digit(36) {
                    Some(d) if d > 0 => assignment.push(Some(Color(d as u8))),
                    _ => return Err(ColoringError::Parse(format!("bad color digit {ch:?}"))),
                },
            }
        }
        if assignment.len() != graph.edge_count() {
            return Err(ColoringError::Parse(format!(
                "{} colors for {} edges",
                assignment.len(),
                graph.edge_count()
            )));
        }
        PartialEdgeColoring::from_assignment(graph, k, &assignment)
    }

    /// Parses the [`to_text`](Self::to_text) format. Every edge of `graph`
    /// must appear exactly once; the result must be proper.
    pub fn from_text(graph: Arc<Graph>, text: &str) -> Result<Self, ColoringError> {
        let bad = |m: String| ColoringError::Parse(m);
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| bad("missing header".into()))?;
        let mut k = None;
        let mut uncolored = None;
        for field in header.split_whitespace() {
            match field.split_once('=') {
                Some(("k", x)) => k = x.parse::<u8>().ok(),
                Some(("uncolored", x)) => uncolored = x.parse::<usize>().ok(),
                _ => return Err(bad(format!("bad header field {field:?}"))),
            }
        }
        let k = k.ok_or_else(|| bad("header lacks k".into()))?;
        let uncolored = uncolored.ok_or_else(|| bad("header lacks uncolored".into()))?;
        let m = graph.edge_count();
        let mut seen = vec![false; m];
        let mut assignment = vec![None; m];
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(bad(format!("expected `u v c`, got {line:?}")));
            }
            let u: usize = parts[0].parse().map_err(|_| bad(format!("bad vertex in {line:?}")))?;
            let v: usize = parts[1].parse().map_err(|_| bad(format!("bad vertex in {line:?}")))?;
            let i = graph
                .edge_index(VertexId(u), VertexId(v))
                .ok_or_else(|| bad(format!("{u}-{v} is not an edge")))?;
            if std::mem::replace(&mut seen[i], true) {
                return Err(bad(format!("edge {u}-{v} listed twice")));
            }
            if parts[2] != "-" {
                let c: u8 = parts[2].parse().map_err(|_| bad(format!("bad color in {line:?}")))?;
                assignment[i] = Some(Color(c));
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(bad(format!("edge {} not listed", graph.edges()[i])));
        }
        let c = PartialEdgeColoring::from_assignment(graph, k, &assignment)?;
        if c.uncolored_count() != uncolored {
            return Err(bad(format!(
                "header says {uncolored} uncolored, found {}",
                c.uncolored_count()
            )));
        }
        Ok(c)
    }

    /// For every color, the number of vertices missing it.
    pub fn deficiency_counts(&self) -> Vec<usize> {
        (1..=self.k)
            .map(|c| {
                self.graph
                    .vertices()
                    .filter(|&v| self.missing(v).contains(Color(c)))
                    .count()
            })
            .collect()
    }
}
