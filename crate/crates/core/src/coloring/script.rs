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


//! Swap scripts: sequences of recoloring steps written as a two-row matrix,
//! targets on top and actions underneath, applied left to right.
//!
//! Text form, one token per column:
//!
//! ```text
//! [ P[0,1](1,2) | 3-4  | 0-1 ]
//! [ 1/2         | 3->4 | 5   ]
//! ```
//!
//! | target        | meaning                                         |
//! |---------------|-------------------------------------------------|
//! | `P[x,y](a,b)` | segment of the (a,b)-chain between `x` and `y`  |
//! | `P{x}(a,b)`   | the (a,b)-chain starting at `x`                 |
//! | `P{x~w}(a,b)` | the (a,b)-chain starting at `x` along edge `xw` |
//! | `u-v`         | a single edge                                   |
//! | `u-v-w...`    | the edges of an explicit path                   |
//! | `*`           | the whole palette                               |
//!
//! | action  | meaning                                      |
//! |---------|----------------------------------------------|
//! | `a/b`   | exchange a and b on the target's edges       |
//! | `a->b`  | recolor an edge from a to b                  |
//! | `c`     | color an uncolored edge with c               |
//! | `-`     | uncolor an edge                              |
//! | `a<->b` | rename colors a and b everywhere (target `*`)|
//!
//! Steps may pass through improper colorings; only the final coloring has to
//! be proper.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Color, ColoringError, PartialEdgeColoring};
use crate::graph::{Edge, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Subchain { x: VertexId, y: VertexId, colors: (Color, Color) },
    Chain { start: VertexId, via: Option<VertexId>, colors: (Color, Color) },
    Edge(Edge),
    Path(Vec<VertexId>),
    Palette,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    Swap(Color, Color),
    Recolor { from: Color, to: Color },
    Assign(Color),
    Uncolor,
    Rename(Color, Color),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub target: Target,
    pub action: Action,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SwapScript {
    pub steps: Vec<Step>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScriptError {
    #[error("step {index} ({step}): {reason}")]
    Step { index: usize, step: String, reason: String },
    #[error("coloring after the last step is improper")]
    FinalImproper,
    #[error("script text: {0}")]
    Parse(String),
}

/// One applied step: its text, the edges it touched, and the coloring it left.
#[derive(Clone, Debug)]
pub struct TraceEntry {
    pub step: String,
    pub edges: Vec<Edge>,
    pub proper: bool,
    pub coloring: PartialEdgeColoring,
}

#[derive(Clone, Debug, Default)]
pub struct Trace {
    pub entries: Vec<TraceEntry>,
}

impl Trace {
    pub fn all_proper(&self) -> bool {
        self.entries.iter().all(|e| e.proper)
    }
}

fn same_pair(a: (Color, Color), b: (Color, Color)) -> bool {
    a == b || a == (b.1, b.0)
}

impl Step {
    pub fn new(target: Target, action: Action) -> Step {
        Step { target, action }
    }

    /// Swap along P_[x,y](a,b).
    pub fn subchain(x: VertexId, y: VertexId, a: Color, b: Color) -> Step {
        Step::new(Target::Subchain { x, y, colors: (a, b) }, Action::Swap(a, b))
    }

    /// Swap along P_x(a,b), optionally forcing the first edge.
    pub fn chain(x: VertexId, via: Option<VertexId>, a: Color, b: Color) -> Step {
        Step::new(Target::Chain { start: x, via, colors: (a, b) }, Action::Swap(a, b))
    }

    pub fn recolor(e: Edge, from: Color, to: Color) -> Step {
        Step::new(Target::Edge(e), Action::Recolor { from, to })
    }

    pub fn assign(e: Edge, c: Color) -> Step {
        Step::new(Target::Edge(e), Action::Assign(c))
    }

    pub fn uncolor(e: Edge) -> Step {
        Step::new(Target::Edge(e), Action::Uncolor)
    }

    pub fn path(vs: Vec<VertexId>, a: Color, b: Color) -> Step {
        Step::new(Target::Path(vs), Action::Swap(a, b))
    }

    pub fn rename(a: Color, b: Color) -> Step {
        Step::new(Target::Palette, Action::Rename(a, b))
    }

    /// Applies the step, returning the edges whose color changed or was
    /// touched. Propriety is not checked here.
    pub fn apply(&self, c: &mut PartialEdgeColoring) -> Result<Vec<Edge>, String> {
        let err = |e: ColoringError| e.to_string();
        match (&self.target, self.action) {
            (Target::Subchain { x, y, colors }, Action::Swap(a, b)) if same_pair(*colors, (a, b)) => {
                c.swap_subchain(*x, *y, a, b).map_err(err)
            }
            (Target::Chain { start, via, colors }, Action::Swap(a, b)) if same_pair(*colors, (a, b)) => {
                c.swap_at(*start, *via, a, b).map_err(err)
            }
            (Target::Path(vs), Action::Swap(a, b)) => {
                let edges: Vec<Edge> = vs.windows(2).map(|w| Edge::new(w[0], w[1])).collect();
                c.swap_edges(&edges, a, b).map_err(err)?;
                Ok(edges)
            }
            (Target::Edge(e), Action::Recolor { from, to }) => {
                let cur = c.edge_color(*e);
                if cur != Some(from) {
                    return Err(ColoringError::WrongColor { edge: *e, expected: from, actual: cur }.to_string());
                }
                if to.0 == 0 || to.0 > c.k() {
                    return Err(ColoringError::ColorOutOfRange(to, c.k()).to_string());
                }
                let (u, v) = e.endpoints();
                let i = c.graph().edge_index(u, v).ok_or_else(|| err(ColoringError::NoSuchEdge(*e)))?;
                c.set_raw(i, Some(to));
                Ok(vec![*e])
            }
            (Target::Edge(e), Action::Assign(col)) => {
                let (u, v) = e.endpoints();
                let i = c.graph().edge_index(u, v).ok_or_else(|| err(ColoringError::NoSuchEdge(*e)))?;
                if c.color_at(i).is_some() {
                    return Err(err(ColoringError::AlreadyColored(*e)));
                }
                if col.0 == 0 || col.0 > c.k() {
                    return Err(ColoringError::ColorOutOfRange(col, c.k()).to_string());
                }
                c.set_raw(i, Some(col));
                Ok(vec![*e])
            }
            (Target::Edge(e), Action::Uncolor) => {
                c.uncolor_edge(*e).map_err(err)?;
                Ok(vec![*e])
            }
            (Target::Edge(e), Action::Swap(a, b)) => {
                c.swap_edges(&[*e], a, b).map_err(err)?;
                Ok(vec![*e])
            }
            (Target::Palette, Action::Rename(a, b)) => {
                c.permute_colors(a, b).map_err(err)?;
                Ok(Vec::new())
            }
            _ => Err("action does not apply to this target".to_string()),
        }
    }
}

impl SwapScript {
    pub fn new() -> SwapScript {
        SwapScript::default()
    }

    pub fn push(&mut self, step: Step) {
        self.steps.push(step);
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of Kempe changes (chain, subchain and path swaps).
    pub fn swap_count(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s.action, Action::Swap(..)))
            .count()
    }
}

/// Applies `script` to a copy of `c`. Intermediate colorings may be
/// improper; the final one must validate.
pub fn apply_script(
    c: &PartialEdgeColoring,
    script: &SwapScript,
) -> Result<(PartialEdgeColoring, Trace), ScriptError> {
    let mut cur = c.clone();
    let mut trace = Trace::default();
    for (index, step) in script.steps.iter().enumerate() {
        let edges = step.apply(&mut cur).map_err(|reason| ScriptError::Step {
            index,
            step: format!("{} {}", target_text(&step.target), action_text(&step.action)),
            reason,
        })?;
        trace.entries.push(TraceEntry {
            step: format!("{} {}", target_text(&step.target), action_text(&step.action)),
            edges,
            proper: cur.is_proper(),
            coloring: cur.clone(),
        });
    }
    if !cur.validate() {
        return Err(ScriptError::FinalImproper);
    }
    Ok((cur, trace))
}

fn target_text(t: &Target) -> String {
    match t {
        Target::Subchain { x, y, colors } => format!("P[{x},{y}]({},{})", colors.0, colors.1),
        Target::Chain { start, via: None, colors } => format!("P{{{start}}}({},{})", colors.0, colors.1),
        Target::Chain { start, via: Some(w), colors } => {
            format!("P{{{start}~{w}}}({},{})", colors.0, colors.1)
        }
        Target::Edge(e) => e.to_string(),
        Target::Path(vs) => vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("-"),
        Target::Palette => "*".to_string(),
    }
}

fn action_text(a: &Action) -> String {
    match a {
        Action::Swap(x, y) => format!("{x}/{y}"),
        Action::Recolor { from, to } => format!("{from}->{to}"),
        Action::Assign(c) => c.to_string(),
        Action::Uncolor => "-".to_string(),
        Action::Rename(x, y) => format!("{x}<->{y}"),
    }
}

impl fmt::Display for SwapScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top: Vec<String> = self.steps.iter().map(|s| target_text(&s.target)).collect();
        let bottom: Vec<String> = self.steps.iter().map(|s| action_text(&s.action)).collect();
        let widths: Vec<usize> = top.iter().zip(&bottom).map(|(a, b)| a.len().max(b.len())).collect();
        let row = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            format!("[ {} ]", padded.join(" | "))
        };
        writeln!(f, "{}", row(&top))?;
        write!(f, "{}", row(&bottom))
    }
}

fn parse_vertex(s: &str) -> Result<VertexId, ScriptError> {
    s.trim()
        .parse::<usize>()
        .map(VertexId)
        .map_err(|_| ScriptError::Parse(format!("bad vertex {s:?}")))
}

fn parse_color(s: &str) -> Result<Color, ScriptError> {
    s.trim()
        .parse::<u8>()
        .map(Color)
        .map_err(|_| ScriptError::Parse(format!("bad color {s:?}")))
}

fn parse_pair(s: &str) -> Result<(Color, Color), ScriptError> {
    let inner = s
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| ScriptError::Parse(format!("expected (a,b), got {s:?}")))?;
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| ScriptError::Parse(format!("expected (a,b), got {s:?}")))?;
    Ok((parse_color(a)?, parse_color(b)?))
}

fn parse_action(s: &str) -> Result<Action, ScriptError> {
    if s == "-" {
        Ok(Action::Uncolor)
    } else if let Some((a, b)) = s.split_once("<->") {
        Ok(Action::Rename(parse_color(a)?, parse_color(b)?))
    } else if let Some((a, b)) = s.split_once("->") {
        Ok(Action::Recolor { from: parse_color(a)?, to: parse_color(b)? })
    } else if let Some((a, b)) = s.split_once('/') {
        Ok(Action::Swap(parse_color(a)?, parse_color(b)?))
    } else {
        Ok(Action::Assign(parse_color(s)?))
    }
}

fn parse_target(s: &str, action: &Action) -> Result<Target, ScriptError> {
    if s == "*" {
        return Ok(Target::Palette);
    }
    if let Some(rest) = s.strip_prefix("P[") {
        let (inside, colors) = rest
            .split_once(']')
            .ok_or_else(|| ScriptError::Parse(format!("unclosed segment in {s:?}")))?;
        let (x, y) = inside
            .split_once(',')
            .ok_or_else(|| ScriptError::Parse(format!("expected P[x,y] in {s:?}")))?;
        return Ok(Target::Subchain { x: parse_vertex(x)?, y: parse_vertex(y)?, colors: parse_pair(colors)? });
    }
    if let Some(rest) = s.strip_prefix("P{") {
        let (inside, colors) = rest
            .split_once('}')
            .ok_or_else(|| ScriptError::Parse(format!("unclosed chain in {s:?}")))?;
        let (start, via) = match inside.split_once('~') {
            Some((x, w)) => (parse_vertex(x)?, Some(parse_vertex(w)?)),
            None => (parse_vertex(inside)?, None),
        };
        return Ok(Target::Chain { start, via, colors: parse_pair(colors)? });
    }
    let vs: Vec<VertexId> = s.split('-').map(parse_vertex).collect::<Result<_, _>>()?;
    match (vs.len(), action) {
        (2, _) => Ok(Target::Edge(Edge::new(vs[0], vs[1]))),
        (n, Action::Swap(..)) if n > 2 => Ok(Target::Path(vs)),
        _ => Err(ScriptError::Parse(format!("bad target {s:?}"))),
    }
}

fn row_cells(line: &str) -> Result<Vec<String>, ScriptError> {
    let inner = line
        .trim()
        .strip_prefix('[')
        .and_then(|l| l.strip_suffix(']'))
        .ok_or_else(|| ScriptError::Parse(format!("row must be bracketed: {line:?}")))?
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    Ok(inner.split('|').map(|c| c.trim().to_string()).collect())
}

impl FromStr for SwapScript {
    type Err = ScriptError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows: Vec<&str> = s.lines().filter(|l| !l.trim().is_empty()).collect();
        if rows.len() != 2 {
            return Err(ScriptError::Parse(format!("expected two rows, found {}", rows.len())));
        }
        let top = row_cells(rows[0])?;
        let bottom = row_cells(rows[1])?;
        if top.len() != bottom.len() {
            return Err(ScriptError::Parse("rows have different lengths".into()));
        }
        let mut script = SwapScript::new();
        for (t, a) in top.iter().zip(&bottom) {
            let action = parse_action(a)?;
            script.push(Step::new(parse_target(t, &action)?, action));
        }
        Ok(script)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::tests::{triangle_minus_ab, v};

    #[test]
    fn empty_script_is_identity() {
        let c = triangle_minus_ab();
        let (out, trace) = apply_script(&c, &SwapScript::new()).unwrap();
        assert_eq!(out, c);
        assert!(trace.entries.is_empty());
    }

    #[test]
    fn text_round_trip() {
        let mut s = SwapScript::new();
        s.push(Step::subchain(v(0), v(1), Color(1), Color(2)));
        s.push(Step::recolor(Edge::new(3, 4), Color(3), Color(4)));
        s.push(Step::assign(Edge::new(0, 1), Color(5)));
        s.push(Step::chain(v(2), Some(v(7)), Color(1), Color(3)));
        s.push(Step::chain(v(2), None, Color(1), Color(3)));
        s.push(Step::path(vec![v(4), v(5), v(6)], Color(2), Color(3)));
        s.push(Step::uncolor(Edge::new(1, 2)));
        s.push(Step::rename(Color(1), Color(2)));
        let text = s.to_string();
        assert_eq!(text.lines().count(), 2);
        assert_eq!(text.parse::<SwapScript>().unwrap(), s);
        assert_eq!("[ ]\n[ ]".parse::<SwapScript>().unwrap(), SwapScript::new());
    }

    #[test]
    fn rendering_aligns_columns() {
        let mut s = SwapScript::new();
        s.push(Step::subchain(v(0), v(1), Color(1), Color(2)));
        s.push(Step::assign(Edge::new(0, 1), Color(3)));
        assert_eq!(s.to_string(), "[ P[0,1](1,2) | 0-1 ]\n[ 1/2         | 3   ]");
    }

    #[test]
    fn triangle_script_completes_with_third_color() {
        let g = triangle_minus_ab().shared_graph().clone();
        let mut c = PartialEdgeColoring::new(g, 3).unwrap();
        c.assign(Edge::new(0, 2), Color(1)).unwrap();
        c.assign(Edge::new(1, 2), Color(2)).unwrap();
        let s: SwapScript = "[ 0-2 | 0-1 ]\n[ 1->3 | 1 ]".parse().unwrap();
        let (out, trace) = apply_script(&c, &s).unwrap();
        assert!(out.is_full() && out.validate());
        assert!(trace.all_proper());
    }

    #[test]
    fn failing_step_is_named() {
        let c = triangle_minus_ab();
        let s: SwapScript = "[ 0-2 | 1-2 ]\n[ 2->1 | 1->2 ]".parse().unwrap();
        match apply_script(&c, &s) {
            Err(ScriptError::Step { index, .. }) => assert_eq!(index, 0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn final_state_must_be_proper() {
        let c = triangle_minus_ab();
        let s: SwapScript = "[ 0-1 ]\n[ 1 ]".parse().unwrap();
        assert_eq!(apply_script(&c, &s).unwrap_err(), ScriptError::FinalImproper);
    }
}
