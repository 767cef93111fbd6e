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


//! The verification suite: corpus construction, every sweep, and the report
//! directory.
//!
//! Layout of an output directory:
//!
//! ```text
//! <dir>/summary.json        config, corpus sizes, one status line per check
//! <dir>/<check>.json        one VerificationReport per check
//! ```
//!
//! Nothing time-dependent is written, so two runs with the same config
//! produce identical files.

use std::fmt;
use std::fs;
use std::io;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use super::corpus::{enumerated_corpus, Corpus, CorpusEntry, CorpusSummary};
use super::families::{class1_regular_family, default_families};
use super::sweeps::{check_normalize_instance, lemma_sweep, mining_hosts, normalize_sweep, planted_class_one, SweepConfig};
use super::theorems::{verify_corollary, verify_theorem1, verify_theorem2};
use crate::coloring::{Color, PartialEdgeColoring};
use crate::graph::{Edge, Graph, VertexId};
use crate::report::{Counterexample, Status, VerificationReport};
use crate::structures::{check_k5_degrees, check_kierstead4, KiersteadPath};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteKind {
    Default,
    Theorem1,
    Theorem2,
    Lemmas,
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SuiteKind::Default => "default",
            SuiteKind::Theorem1 => "theorem1",
            SuiteKind::Theorem2 => "theorem2",
            SuiteKind::Lemmas => "lemmas",
        })
    }
}

impl FromStr for SuiteKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "default" => Ok(SuiteKind::Default),
            "theorem1" => Ok(SuiteKind::Theorem1),
            "theorem2" => Ok(SuiteKind::Theorem2),
            "lemmas" => Ok(SuiteKind::Lemmas),
            _ => Err(format!("unknown suite {s:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub suite: SuiteKind,
    /// Largest order in the enumerated corpus.
    pub n_max: usize,
    /// Solver seeds per critical edge in the sweeps.
    pub seeds: u64,
    /// Random hosts for mining normalization instances.
    pub mining_hosts: usize,
    pub mining_seed: u64,
    /// Adds checks built to fail, to show failures surface.
    pub negative_controls: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: SuiteKind::Default,
            n_max: 8,
            seeds: 8,
            mining_hosts: 400,
            mining_seed: 1,
            negative_controls: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SummaryLine {
    pub check: String,
    pub status: Status,
    pub instances: u64,
    pub hypothesis_met: u64,
    pub vacuous: u64,
    pub failures: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteSummary {
    pub config: SuiteConfig,
    pub corpora: Vec<(String, CorpusSummary)>,
    pub checks: Vec<SummaryLine>,
    /// Checks whose hypothesis was never met.
    pub warnings: Vec<String>,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub config: SuiteConfig,
    pub corpora: Vec<(String, CorpusSummary)>,
    pub reports: Vec<VerificationReport>,
}

impl SuiteResult {
    /// No failure in any report.
    pub fn passed(&self) -> bool {
        self.reports.iter().all(VerificationReport::passed)
    }

    pub fn report(&self, check: &str) -> Option<&VerificationReport> {
        self.reports.iter().find(|r| r.check == check)
    }

    pub fn summary(&self) -> SuiteSummary {
        SuiteSummary {
            config: self.config,
            corpora: self.corpora.clone(),
            checks: self
                .reports
                .iter()
                .map(|r| SummaryLine {
                    check: r.check.clone(),
                    status: r.status,
                    instances: r.instances,
                    hypothesis_met: r.hypothesis_met,
                    vacuous: r.vacuous,
                    failures: r.failures,
                })
                .collect(),
            warnings: self
                .reports
                .iter()
                .filter(|r| r.status == Status::Vacuous)
                .map(|r| format!("{}: no hypothesis met", r.check))
                .collect(),
            passed: self.passed(),
        }
    }

    /// Human-readable table, one line per check.
    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        for (name, c) in &self.corpora {
            out.push_str(&format!("corpus {name}: {} graphs\n", c.size));
        }
        for r in &self.reports {
            out.push_str(&r.summary_line());
            out.push('\n');
        }
        for w in self.summary().warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out.push_str(if self.passed() { "suite: pass\n" } else { "suite: FAIL\n" });
        out
    }

    /// Writes `summary.json` and one `<check>.json` per report.
    pub fn write_to(&self, dir: &Path) -> io::Result<()> {
        fs::create_dir_all(dir)?;
        for r in &self.reports {
            fs::write(dir.join(format!("{}.json", r.check)), r.to_json() + "\n")?;
        }
        let summary = serde_json::to_string_pretty(&self.summary()).expect("summary serializes");
        fs::write(dir.join("summary.json"), summary + "\n")
    }
}

fn enumeration_report(corpus: &Corpus) -> VerificationReport {
    let mut rep = VerificationReport::new("enumeration");
    for (n, count) in corpus.summary().by_order {
        rep.bump(&format!("order_{n}"), count as u64);
    }
    rep.pass();
    rep
}

fn theorem1_report() -> VerificationReport {
    let mut parts = Vec::new();
    for kind in default_families() {
        match class1_regular_family(kind) {
            Ok(member) => {
                let rep = verify_theorem1(&member);
                let mut tagged = rep.clone();
                tagged.note(format!("{}: {}", member.name, rep.status));
                parts.push(tagged);
            }
            Err(e) => {
                let mut rep = VerificationReport::new("theorem1");
                rep.fail(Counterexample::new("", format!("family {kind:?}: {e}")));
                parts.push(rep);
            }
        }
    }
    VerificationReport::combine("theorem1", &parts)
}

fn normalize_report(config: &SuiteConfig) -> VerificationReport {
    let hosts = mining_hosts(config.mining_seed, config.mining_hosts);
    let mut rep = normalize_sweep(&hosts, config.seeds.min(3));
    let (c, k) = planted_class_one();
    let planted = check_normalize_instance(&c, &k);
    let colored = planted.counters.get("proper_coloring") == Some(&1);
    rep.merge(&planted);
    rep.check(colored, || Counterexample::new("G~wTv{", "planted Class 1 fixture was not colored outright"));
    if rep.counters.get("class2_hosts").copied().unwrap_or(0) == 0 {
        rep.note("no Class 2 host met the hypothesis; all instances are on Class 1 hosts");
    }
    rep
}

fn negative_controls() -> Vec<VerificationReport> {
    let mut out = Vec::new();

    let chorded = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).expect("valid graph");
    let mut corpus = Corpus::default();
    corpus.push(CorpusEntry::new(chorded, "planted"));
    let mut rep = verify_theorem2(&corpus);
    rep.check = "negative_theorem2".into();
    out.push(rep);

    let v = VertexId;
    let mut c = PartialEdgeColoring::new(Arc::new(Graph::path(4).expect("path")), 3).expect("palette");
    c.assign(Edge::new(1, 2), Color(1)).expect("proper");
    c.assign(Edge::new(2, 3), Color(2)).expect("proper");
    let mut rep = check_kierstead4(&c, &KiersteadPath { vertices: vec![v(0), v(1), v(2), v(3)] });
    rep.check = "negative_kierstead4".into();
    out.push(rep);

    let host = Graph::path(5).expect("path").disjoint_union(&Graph::star(5).expect("star")).expect("fits");
    let mut c = PartialEdgeColoring::new(Arc::new(host), 5).expect("palette");
    for (e, col) in [((1, 2), 1), ((2, 3), 2), ((3, 4), 3)] {
        c.assign(Edge::new(e.0, e.1), Color(col)).expect("proper");
    }
    for i in 1..=5 {
        c.assign(Edge::new(5, 5 + i), Color(i as u8)).expect("proper");
    }
    let mut rep = check_k5_degrees(&c, &KiersteadPath { vertices: (0..5).map(v).collect() });
    rep.check = "negative_k5_degrees".into();
    out.push(rep);
    out
}

/// Runs the configured suite. Errors inside a check are recorded as
/// failures of that check; the suite always completes.
pub fn run_suite(config: &SuiteConfig) -> SuiteResult {
    let mut reports = Vec::new();
    let mut corpora = Vec::new();
    let sweep = SweepConfig { seeds: config.seeds, ..SweepConfig::default() };
    let needs_corpus = config.suite != SuiteKind::Theorem1;

    let critical = if needs_corpus {
        match enumerated_corpus(config.n_max) {
            Ok(all) => {
                if config.suite == SuiteKind::Default {
                    reports.push(enumeration_report(&all));
                }
                corpora.push(("enumerated".to_string(), all.summary()));
                match all.filter(crate::classify::is_delta_critical) {
                    Ok(c) => c,
                    Err(e) => {
                        let mut rep = VerificationReport::new("corpus");
                        rep.fail(Counterexample::new("", e.to_string()));
                        reports.push(rep);
                        Corpus::default()
                    }
                }
            }
            Err(e) => {
                let mut rep = VerificationReport::new("corpus");
                rep.fail(Counterexample::new("", e.to_string()));
                reports.push(rep);
                Corpus::default()
            }
        }
    } else {
        Corpus::default()
    };
    if needs_corpus {
        corpora.push(("delta_critical".to_string(), critical.summary()));
    }

    if matches!(config.suite, SuiteKind::Default | SuiteKind::Theorem1) {
        reports.push(theorem1_report());
    }
    if matches!(config.suite, SuiteKind::Default | SuiteKind::Theorem2) {
        reports.push(verify_theorem2(&critical));
        reports.push(verify_corollary(&critical));
    }
    if matches!(config.suite, SuiteKind::Default | SuiteKind::Lemmas) {
        for mut rep in lemma_sweep(&critical, &sweep) {
            if rep.hypothesis_met == 0 {
                rep.note(format!("not instantiable at n <= {}", config.n_max));
            }
            reports.push(rep);
        }
        reports.push(normalize_report(config));
    }
    if config.negative_controls {
        reports.extend(negative_controls());
    }
    SuiteResult { config: *config, corpora, reports }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(suite: SuiteKind) -> SuiteConfig {
        SuiteConfig { suite, n_max: 5, seeds: 2, mining_hosts: 10, ..SuiteConfig::default() }
    }

    #[test]
    fn small_default_suite_passes() {
        let res = run_suite(&small(SuiteKind::Default));
        assert!(res.passed(), "{}", res.summary_table());
        assert_eq!(res.report("theorem2").unwrap().status, Status::Pass);
        assert!(res.report("fork_absence").unwrap().notes.iter().any(|n| n.contains("n <= 5")));
    }

    #[test]
    fn negative_controls_are_the_only_failures() {
        let config = SuiteConfig { negative_controls: true, ..small(SuiteKind::Theorem2) };
        let res = run_suite(&config);
        let failing: Vec<&str> = res.reports.iter().filter(|r| !r.passed()).map(|r| r.check.as_str()).collect();
        assert_eq!(failing, vec!["negative_theorem2", "negative_kierstead4", "negative_k5_degrees"]);
        for r in res.reports.iter().filter(|r| !r.passed()) {
            assert!(!r.counterexamples.is_empty());
        }
    }

    #[test]
    fn empty_corpus_is_flagged() {
        let config = SuiteConfig { n_max: 2, mining_hosts: 0, ..small(SuiteKind::Lemmas) };
        let res = run_suite(&config);
        assert!(res.passed());
        let summary = res.summary();
        assert!(summary.warnings.iter().any(|w| w.starts_with("val:")));
        assert!(summary.warnings.len() >= 10);
    }

    #[test]
    fn written_reports_are_identical_across_runs() {
        let config = small(SuiteKind::Default);
        let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
        for d in &dirs {
            run_suite(&config).write_to(d.path()).unwrap();
        }
        let mut names: Vec<_> = fs::read_dir(dirs[0].path()).unwrap().map(|e| e.unwrap().file_name()).collect();
        names.sort();
        assert!(names.len() > 5);
        for n in names {
            let a = fs::read(dirs[0].path().join(&n)).unwrap();
            let b = fs::read(dirs[1].path().join(&n)).unwrap();
            assert_eq!(a, b, "{n:?}");
        }
    }
}
