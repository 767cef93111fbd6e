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


//! Command-line front end.
//!
//! Graphs are given as graph6 strings, names of built-in fixtures, or paths
//! to files with one graph6 per line; with no graph argument, graph6 lines
//! are read from standard input, one verdict per line as they arrive. With
//! `--json` each verdict is one JSON object per line. Exit codes: 0 success,
//! 1 a check failed, 2 usage or input error.

use std::ffi::OsString;
use std::fs;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::{
    delta_coloring_of_minus_e, exact_chromatic_index, find_coloring, is_critical_edge, vizing_plus_one_coloring,
    SolverConfig,
};
use crate::coloring::PartialEdgeColoring;
use crate::graph::{builtin_fixture, from_graph6, to_graph6, Edge, Graph, SplitSpec};
use crate::harness::{enumerate_graphs, run_suite, SuiteConfig, SuiteKind};
use crate::report::VerificationReport;
use crate::structures::{
    alpha_sequences, check_fan_lemmas, check_fork_absence, check_k5_claims, check_kierstead4, check_kite,
    check_shortkite, find_kierstead_paths_from, find_structure_witnesses, grow_multifan, WitnessKind,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "vizing", version, about = "Edge-coloring toolkit for critical graphs")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GraphArgs {
    /// graph6 strings, fixture names or files; standard input when empty.
    pub graphs: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StructureKind {
    Multifan,
    Kierstead,
    Shortkite,
    Kite,
    Fork,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Default,
    Theorem1,
    Theorem2,
    Lemmas,
}

impl From<SuiteArg> for SuiteKind {
    fn from(s: SuiteArg) -> SuiteKind {
        match s {
            SuiteArg::Default => SuiteKind::Default,
            SuiteArg::Theorem1 => SuiteKind::Theorem1,
            SuiteArg::Theorem2 => SuiteKind::Theorem2,
            SuiteArg::Lemmas => SuiteKind::Lemmas,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Chromatic index and class.
    Classify(GraphArgs),
    /// An edge coloring, exact (χ' colors) or by Vizing's procedure (≤ Δ+1).
    Color {
        #[arg(long, conflicts_with = "vizing")]
        exact: bool,
        #[arg(long)]
        vizing: bool,
        /// Write the coloring text here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        graphs: GraphArgs,
    },
    /// Critical edges.
    Critical {
        /// A single edge `u,v`.
        #[arg(long, value_parser = parse_edge, conflicts_with = "all")]
        edge: Option<Edge>,
        /// Every edge (the default).
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        graphs: GraphArgs,
    },
    /// Whether |E| > Δ·⌊n/2⌋.
    Overfull(GraphArgs),
    /// Adjacent pairs with d(u) + d(v) = Δ + 2.
    Pairs(GraphArgs),
    /// Splits a vertex; `--part` lists the neighbors that stay with it.
    Split {
        #[arg(long)]
        vertex: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        part: Vec<usize>,
        #[command(flatten)]
        graphs: GraphArgs,
    },
    /// Structures rooted at an uncolored edge, under a Δ-coloring of G − e.
    Structures {
        #[arg(long, value_enum)]
        kind: StructureKind,
        #[arg(long, value_parser = parse_edge)]
        edge: Edge,
        /// Solver seed for the coloring of G − e.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of edges on Kierstead paths.
        #[arg(long, default_value_t = 3)]
        length: usize,
        #[command(flatten)]
        graphs: GraphArgs,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "default")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 8)]
        seeds: u64,
        /// Random hosts for normalization mining.
        #[arg(long, default_value_t = 400)]
        mining_hosts: usize,
        /// Report directory.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Adds checks built to fail.
        #[arg(long)]
        negative_controls: bool,
    },
    /// All graphs on `n` vertices up to isomorphism, as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

fn parse_edge(s: &str) -> Result<Edge, String> {
    let (u, v) = s.split_once(',').ok_or_else(|| format!("expected u,v but got {s:?}"))?;
    let u: usize = u.trim().parse().map_err(|_| format!("bad vertex {u:?}"))?;
    let v: usize = v.trim().parse().map_err(|_| format!("bad vertex {v:?}"))?;
    if u == v {
        return Err("an edge needs two distinct vertices".into());
    }
    Ok(Edge::new(u, v))
}

struct Failure {
    code: i32,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, msg: msg.into() }
}

type CliResult<T> = Result<T, Failure>;

fn parse_graph(text: &str) -> CliResult<Graph> {
    if let Some(g) = builtin_fixture(text) {
        return Ok(g);
    }
    from_graph6(text).map_err(|e| usage(format!("{text:?}: {e}")))
}

/// Calls `f` on each graph from the arguments, or from `input` line by line
/// when there are none.
fn for_each_graph(
    args: &GraphArgs,
    input: &mut dyn BufRead,
    f: &mut dyn FnMut(&[Arc<Graph>]) -> CliResult<()>,
) -> CliResult<()> {
    let mut seen = 0usize;
    let mut one = |line: &str| -> CliResult<()> {
        let line = line.trim();
        if line.is_empty() || line.starts_with('>') {
            return Ok(());
        }
        seen += 1;
        f(&[Arc::new(parse_graph(line)?)])
    };
    if args.graphs.is_empty() {
        for line in input.lines() {
            one(&line.map_err(|e| usage(e.to_string()))?)?;
        }
    } else {
        for a in &args.graphs {
            let p = Path::new(a);
            if p.is_file() {
                let text = fs::read_to_string(p).map_err(|e| usage(format!("{a}: {e}")))?;
                for line in text.lines() {
                    one(line)?;
                }
            } else {
                one(a)?;
            }
        }
    }
    if seen == 0 {
        return Err(usage("no graph given"));
    }
    Ok(())
}

fn solver_err(e: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_CHECK_FAILED, msg: format!("solver: {e}") }
}

fn check_vertex(g: &Graph, v: usize) -> CliResult<()> {
    if v >= g.n() {
        return Err(usage(format!("vertex {v} out of range (n = {})", g.n())));
    }
    Ok(())
}

fn check_edge(g: &Graph, e: Edge) -> CliResult<()> {
    let (u, v) = e.endpoints();
    check_vertex(g, u.0)?;
    check_vertex(g, v.0)?;
    if !g.has_edge(u, v) {
        return Err(usage(format!("{u}-{v} is not an edge")));
    }
    Ok(())
}

fn coloring_json(c: &PartialEdgeColoring) -> Value {
    let edges: Vec<Value> = c
        .graph()
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let (u, v) = e.endpoints();
            json!([u.0, v.0, c.color_at(i).map(|x| x.0)])
        })
        .collect();
    json!({ "k": c.k(), "edges": edges })
}

fn report_json(r: &VerificationReport) -> Value {
    serde_json::to_value(r).expect("report serializes")
}

/// Streams verdicts as they are produced: text lines, or one JSON document
/// per line with `--json`.
struct Out<'a> {
    w: &'a mut dyn Write,
    json: bool,
    code: i32,
}

impl Out<'_> {
    fn emit(&mut self, line: String, record: Value) {
        let _ = if self.json {
            writeln!(self.w, "{record}")
        } else {
            writeln!(self.w, "{line}")
        };
        let _ = self.w.flush();
    }

    fn fail_if(&mut self, failed: bool) {
        if failed {
            self.code = EXIT_CHECK_FAILED;
        }
    }
}

fn cmd_classify(graphs: &[Arc<Graph>], out: &mut Out) -> CliResult<()> {
    for g in graphs {
        let chi = exact_chromatic_index(g).map_err(solver_err)?;
        let delta = g.max_degree();
        let class = if chi > delta { 2 } else { 1 };
        out.emit(
            format!("Class {class} (χ'={chi}, Δ={delta})"),
            json!({ "graph6": to_graph6(g), "class": class, "chromatic_index": chi, "delta": delta }),
        );
    }
    Ok(())
}

fn cmd_color(graphs: &[Arc<Graph>], vizing: bool, mut file: Option<&mut fs::File>, out: &mut Out) -> CliResult<()> {
    for g in graphs {
        let c = if vizing {
            vizing_plus_one_coloring(g)
        } else {
            let chi = exact_chromatic_index(g).map_err(solver_err)?;
            find_coloring(g, chi.max(1) as u8, None, SolverConfig::default())
                .map_err(solver_err)?
                .ok_or_else(|| solver_err("no coloring with χ' colors"))?
        };
        let used = (1..=c.k()).filter(|&x| c.assignment().contains(&Some(crate::coloring::Color(x)))).count();
        let method = if vizing { "vizing" } else { "exact" };
        let line = match file.as_deref_mut() {
            Some(f) => {
                writeln!(f, "{}", c.to_text()).map_err(|e| usage(e.to_string()))?;
                format!("{} colors used ({method})", used)
            }
            None => c.to_text().trim_end().to_string(),
        };
        out.emit(
            line,
            json!({ "graph6": to_graph6(g), "method": method, "colors_used": used, "coloring": coloring_json(&c) }),
        );
    }
    Ok(())
}

fn cmd_critical(graphs: &[Arc<Graph>], edge: Option<Edge>, out: &mut Out) -> CliResult<()> {
    for g in graphs {
        let g6 = to_graph6(g);
        match edge {
            Some(e) => {
                check_edge(g, e)?;
                let crit = is_critical_edge(g, e).map_err(solver_err)?;
                out.emit(
                    format!("edge {e}: {}", if crit { "critical" } else { "not critical" }),
                    json!({ "graph6": g6, "edge": [e.endpoints().0 .0, e.endpoints().1 .0], "critical": crit }),
                );
            }
            None => {
                let mut crit = Vec::new();
                for &e in g.edges() {
                    if is_critical_edge(g, e).map_err(solver_err)? {
                        crit.push(e);
                    }
                }
                let all = !crit.is_empty() && crit.len() == g.edge_count() && g.is_connected();
                let names: Vec<String> = crit.iter().map(|e| e.to_string()).collect();
                let pairs: Vec<Value> = crit.iter().map(|e| json!([e.endpoints().0 .0, e.endpoints().1 .0])).collect();
                out.emit(
                    format!(
                        "critical edges: {}/{} [{}]; Δ-critical: {}",
                        crit.len(),
                        g.edge_count(),
                        names.join(" "),
                        all
                    ),
                    json!({ "graph6": g6, "critical_edges": pairs, "delta_critical": all }),
                );
            }
        }
    }
    Ok(())
}

fn cmd_overfull(graphs: &[Arc<Graph>], out: &mut Out) {
    for g in graphs {
        let m = g.edge_count();
        let bound = g.max_degree() * (g.n() / 2);
        let over = g.is_overfull();
        let rel = if over { ">" } else { "<=" };
        out.emit(
            format!("overfull: {over} (|E|={m} {rel} {bound})"),
            json!({ "graph6": to_graph6(g), "overfull": over, "edges": m, "bound": bound }),
        );
    }
}

fn cmd_pairs(graphs: &[Arc<Graph>], out: &mut Out) {
    for g in graphs {
        let pairs = g.full_deficiency_pairs();
        let names: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        let values: Vec<Value> = pairs.iter().map(|(a, b)| json!([a.0, b.0])).collect();
        let line = if pairs.is_empty() { "full-deficiency pairs: none".to_string() } else {
            format!("full-deficiency pairs: {}", names.join(" "))
        };
        out.emit(line, json!({ "graph6": to_graph6(g), "pairs": values }));
    }
}

fn cmd_split(graphs: &[Arc<Graph>], vertex: usize, part: &[usize], out: &mut Out) -> CliResult<()> {
    for g in graphs {
        check_vertex(g, vertex)?;
        let spec = SplitSpec::new(vertex, part.iter().copied());
        let h = g.split_vertex(&spec).map_err(|e| usage(e.to_string()))?;
        let h6 = to_graph6(&h);
        out.emit(h6.clone(), json!({ "graph6": to_graph6(g), "split": h6, "n": h.n(), "delta": h.max_degree() }));
    }
    Ok(())
}

fn cmd_structures(
    graphs: &[Arc<Graph>],
    kind: StructureKind,
    edge: Edge,
    seed: u64,
    length: usize,
    out: &mut Out,
) -> CliResult<()> {
    for g in graphs {
        check_edge(g, edge)?;
        let c = delta_coloring_of_minus_e(g, edge, Some(seed)).map_err(solver_err)?;
        let (x, y) = edge.endpoints();
        let mut found: Vec<String> = Vec::new();
        let mut rep = VerificationReport::new(format!("{kind:?}").to_lowercase());
        match kind {
            StructureKind::Multifan => {
                let f = grow_multifan(&c, x, y).map_err(|e| usage(e.to_string()))?;
                let mut line = f.describe();
                if let Ok(seq) = alpha_sequences(&c, &f) {
                    for (alpha, leaves) in &seq.sequences {
                        let ls: Vec<String> = leaves.iter().map(|v| v.to_string()).collect();
                        line.push_str(&format!(" seq[{alpha}]=[{}]", ls.join(",")));
                    }
                }
                found.push(line);
                rep.merge(&check_fan_lemmas(&c, &f));
            }
            StructureKind::Kierstead => {
                if !(1..=8).contains(&length) {
                    return Err(usage("--length must be between 1 and 8"));
                }
                for (a, b) in [(x, y), (y, x)] {
                    for k in find_kierstead_paths_from(&c, a, b, length) {
                        found.push(k.describe());
                        match k.len() {
                            4 => rep.merge(&check_kierstead4(&c, &k)),
                            5 => rep.merge(&check_k5_claims(&c, &k)),
                            _ => rep.skip(),
                        }
                    }
                }
            }
            StructureKind::Shortkite | StructureKind::Kite | StructureKind::Fork => {
                let wk = match kind {
                    StructureKind::Shortkite => WitnessKind::ShortKite,
                    StructureKind::Kite => WitnessKind::Kite,
                    _ => WitnessKind::Fork,
                };
                for w in find_structure_witnesses(&c, wk) {
                    found.push(w.describe());
                    match wk {
                        WitnessKind::ShortKite => rep.merge(&check_shortkite(&c, &w)),
                        WitnessKind::Kite => rep.merge(&check_kite(&c, &w)),
                        WitnessKind::Fork => {}
                    }
                }
                if wk == WitnessKind::Fork {
                    rep.merge(&check_fork_absence(&c));
                }
            }
        }
        out.fail_if(!rep.passed());
        let mut lines = vec![format!("{} found under seed {seed}", found.len())];
        lines.extend(found.iter().cloned());
        lines.push(rep.summary_line());
        out.emit(
            lines.join("\n"),
            json!({
                "graph6": to_graph6(g),
                "coloring": coloring_json(&c),
                "found": found,
                "report": report_json(&rep),
            }),
        );
    }
    Ok(())
}

fn cmd_verify(config: SuiteConfig, dir: Option<&Path>, out: &mut Out) -> CliResult<()> {
    let res = run_suite(&config);
    if let Some(d) = dir {
        res.write_to(d).map_err(|e| usage(format!("{}: {e}", d.display())))?;
    }
    out.fail_if(!res.passed());
    out.emit(
        res.summary_table().trim_end().to_string(),
        serde_json::to_value(res.summary()).expect("summary serializes"),
    );
    Ok(())
}

fn cmd_enumerate(n: usize, out: &mut Out) -> CliResult<()> {
    let graphs = enumerate_graphs(n).map_err(|e| usage(e.to_string()))?;
    let list: Vec<String> = graphs.iter().map(to_graph6).collect();
    let record = json!({ "n": n, "count": list.len(), "graphs": list });
    out.emit(list.join("\n"), record);
    Ok(())
}

fn dispatch(cli: &Cli, input: &mut dyn BufRead, out: &mut Out) -> CliResult<()> {
    match &cli.command {
        Command::Classify(args) => for_each_graph(args, input, &mut |g| cmd_classify(g, out)),
        Command::Color { exact: _, vizing, out: path, graphs } => {
            let mut file = match path {
                Some(p) => Some(fs::File::create(p).map_err(|e| usage(format!("{}: {e}", p.display())))?),
                None => None,
            };
            for_each_graph(graphs, input, &mut |g| cmd_color(g, *vizing, file.as_mut(), out))
        }
        Command::Critical { edge, all: _, graphs } => for_each_graph(graphs, input, &mut |g| cmd_critical(g, *edge, out)),
        Command::Overfull(args) => for_each_graph(args, input, &mut |g| {
            cmd_overfull(g, out);
            Ok(())
        }),
        Command::Pairs(args) => for_each_graph(args, input, &mut |g| {
            cmd_pairs(g, out);
            Ok(())
        }),
        Command::Split { vertex, part, graphs } => for_each_graph(graphs, input, &mut |g| cmd_split(g, *vertex, part, out)),
        Command::Structures { kind, edge, seed, length, graphs } => {
            for_each_graph(graphs, input, &mut |g| cmd_structures(g, *kind, *edge, *seed, *length, out))
        }
        Command::Verify { suite, n_max, seeds, mining_hosts, out: dir, negative_controls } => {
            if *n_max > crate::harness::MAX_ENUMERATION_ORDER {
                return Err(usage(format!("--n-max is at most {}", crate::harness::MAX_ENUMERATION_ORDER)));
            }
            let config = SuiteConfig {
                suite: (*suite).into(),
                n_max: *n_max,
                seeds: *seeds,
                mining_hosts: *mining_hosts,
                negative_controls: *negative_controls,
                ..SuiteConfig::default()
            };
            cmd_verify(config, dir.as_deref(), out)
        }
        Command::Enumerate { n } => cmd_enumerate(*n, out),
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// to `stdout`/`stderr`. Returns the exit code.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut out = Out { w: stdout, json: cli.json, code: EXIT_OK };
    match dispatch(&cli, input, &mut out) {
        Ok(()) => out.code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.msg);
            f.code
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdin = std::io::stdin();
    let mut input = stdin.lock();
    run(std::env::args_os(), &mut input, &mut std::io::stdout(), &mut std::io::stderr())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = std::io::Cursor::new(stdin.as_bytes().to_vec());
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let mut full = vec!["vizing"];
        full.extend_from_slice(args);
        let code = run(full, &mut input, &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn classify_pstar() {
        let (code, out, _) = call(&["classify", "pstar"], "");
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "Class 2 (χ'=4, Δ=3)");
    }

    #[test]
    fn overfull_triangle_from_stdin() {
        let g6 = to_graph6(&builtin_fixture("triangle").unwrap());
        let (code, out, _) = call(&["overfull"], &format!("{g6}\n"));
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "overfull: true (|E|=3 > 2)");
    }

    #[test]
    fn json_and_text_agree() {
        let (_, text, _) = call(&["classify", "k4", "c5"], "");
        let (_, js, _) = call(&["--json", "classify", "k4", "c5"], "");
        let classes: Vec<u64> = js
            .lines()
            .map(|l| serde_json::from_str::<Value>(l).unwrap()["class"].as_u64().unwrap())
            .collect();
        let from_text: Vec<u64> =
            text.lines().map(|l| l.split_whitespace().nth(1).unwrap().parse().unwrap()).collect();
        assert_eq!(classes, from_text);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["split", "k4"], "").0, EXIT_USAGE);
        assert_eq!(call(&["classify", "not-a-graph!"], "").0, EXIT_USAGE);
        assert_eq!(call(&["critical", "--edge", "0,9", "k4"], "").0, EXIT_USAGE);
        assert_eq!(call(&["nonsense"], "").0, EXIT_USAGE);
    }

    #[test]
    fn critical_and_pairs() {
        let (code, out, _) = call(&["critical", "--all", "splitk4"], "");
        assert_eq!(code, 0);
        assert!(out.contains("Δ-critical: true"), "{out}");
        let (_, out, _) = call(&["pairs", "splitk4"], "");
        assert!(out.starts_with("full-deficiency pairs: "), "{out}");
        assert!(!out.contains("none"));
    }

    #[test]
    fn split_k4_gives_five_vertices() {
        let (code, out, _) = call(&["--json", "split", "--vertex", "0", "--part", "1", "k4"], "");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["n"], 5);
        assert_eq!(v["delta"], 3);
    }

    #[test]
    fn structures_on_c5() {
        let (code, out, _) = call(&["structures", "--kind", "multifan", "--edge", "0,1", "c5"], "");
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("multifan r=0"));
        let (code, _, _) = call(&["structures", "--kind", "kierstead", "--edge", "0,1", "c5"], "");
        assert_eq!(code, 0);
    }

    #[test]
    fn verify_with_negative_controls_exits_1() {
        let (code, out, _) = call(
            &["verify", "--suite", "theorem2", "--n-max", "4", "--negative-controls"],
            "",
        );
        assert_eq!(code, EXIT_CHECK_FAILED, "{out}");
        let (code, _, _) = call(&["verify", "--suite", "theorem2", "--n-max", "5"], "");
        assert_eq!(code, 0);
    }

    #[test]
    fn enumerate_four() {
        let (code, out, _) = call(&["enumerate", "--n", "4"], "");
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 11);
    }

    #[test]
    fn color_writes_a_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("k4.txt");
        let (code, out, _) = call(&["color", "--exact", "--out", path.to_str().unwrap(), "k4"], "");
        assert_eq!(code, 0);
        assert!(out.contains("3 colors used"));
        let g = Arc::new(builtin_fixture("k4").unwrap());
        let c = PartialEdgeColoring::from_text(g, &fs::read_to_string(path).unwrap()).unwrap();
        assert!(c.is_full());
    }
}
