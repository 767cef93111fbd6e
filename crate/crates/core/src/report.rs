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


//! Verification reports: counts of checked instances, how many met the
//! hypothesis of the property being checked, and certificates for failures.
//!
//! Reports merge associatively and commutatively, so sweeps can be split
//! across threads in any order and still produce identical output.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

/// Kept per report; the smallest ones (in sort order) survive a merge.
pub const MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub clause: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coloring: Option<String>,
}

impl Counterexample {
    pub fn new(graph6: impl Into<String>, clause: impl Into<String>) -> Self {
        Counterexample {
            graph6: graph6.into(),
            clause: clause.into(),
            witness: None,
            coloring: None,
        }
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    pub fn with_coloring(mut self, c: impl Into<String>) -> Self {
        self.coloring = Some(c.into());
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// No failures, but no instance met the hypothesis either.
    Vacuous,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Vacuous => "vacuous",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub status: Status,
    pub instances: u64,
    pub hypothesis_met: u64,
    pub vacuous: u64,
    pub failures: u64,
    pub counterexamples: Vec<Counterexample>,
    pub counters: BTreeMap<String, u64>,
    pub notes: BTreeSet<String>,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            status: Status::Vacuous,
            instances: 0,
            hypothesis_met: 0,
            vacuous: 0,
            failures: 0,
            counterexamples: Vec::new(),
            counters: BTreeMap::new(),
            notes: BTreeSet::new(),
        }
    }

    fn refresh(&mut self) {
        self.status = if self.failures > 0 {
            Status::Fail
        } else if self.hypothesis_met == 0 {
            Status::Vacuous
        } else {
            Status::Pass
        };
    }

    /// An instance met the hypothesis and the conclusion held.
    pub fn pass(&mut self) {
        self.instances += 1;
        self.hypothesis_met += 1;
        self.refresh();
    }

    /// An instance did not meet the hypothesis.
    pub fn skip(&mut self) {
        self.instances += 1;
        self.vacuous += 1;
        self.refresh();
    }

    /// An instance met the hypothesis and the conclusion failed.
    pub fn fail(&mut self, cx: Counterexample) {
        self.instances += 1;
        self.hypothesis_met += 1;
        self.failures += 1;
        self.counterexamples.push(cx);
        self.counterexamples.sort();
        self.counterexamples.dedup();
        self.counterexamples.truncate(MAX_COUNTEREXAMPLES);
        self.refresh();
    }

    /// Records a pass or a failure depending on `ok`.
    pub fn check(&mut self, ok: bool, cx: impl FnOnce() -> Counterexample) {
        if ok {
            self.pass()
        } else {
            self.fail(cx())
        }
    }

    pub fn bump(&mut self, counter: &str, by: u64) {
        *self.counters.entry(counter.to_string()).or_default() += by;
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.insert(note.into());
    }

    /// Adds `other`'s counts, certificates, counters and notes. The check name
    /// of `self` is kept.
    pub fn merge(&mut self, other: &VerificationReport) {
        self.instances += other.instances;
        self.hypothesis_met += other.hypothesis_met;
        self.vacuous += other.vacuous;
        self.failures += other.failures;
        self.counterexamples.extend(other.counterexamples.iter().cloned());
        self.counterexamples.sort();
        self.counterexamples.dedup();
        self.counterexamples.truncate(MAX_COUNTEREXAMPLES);
        for (k, v) in &other.counters {
            *self.counters.entry(k.clone()).or_default() += v;
        }
        self.notes.extend(other.notes.iter().cloned());
        self.refresh();
    }

    /// Merges a batch of reports into one named `check`.
    pub fn combine<'a>(check: &str, parts: impl IntoIterator<Item = &'a VerificationReport>) -> Self {
        let mut out = VerificationReport::new(check);
        for p in parts {
            out.merge(p);
        }
        out
    }

    /// No failures (vacuous reports count as passed).
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// One-line human summary.
    pub fn summary_line(&self) -> String {
        format!(
            "{:<28} {:<7} instances={} met={} vacuous={} failures={}",
            self.check, self.status, self.instances, self.hypothesis_met, self.vacuous, self.failures
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(name: &str, fails: &[&str], passes: u64) -> VerificationReport {
        let mut r = VerificationReport::new(name);
        for _ in 0..passes {
            r.pass();
        }
        for f in fails {
            r.fail(Counterexample::new(*f, "clause"));
        }
        r.skip();
        r
    }

    #[test]
    fn status_transitions() {
        let mut r = VerificationReport::new("x");
        assert_eq!(r.status, Status::Vacuous);
        r.skip();
        assert_eq!(r.status, Status::Vacuous);
        r.pass();
        assert_eq!(r.status, Status::Pass);
        r.fail(Counterexample::new("A_", "c"));
        assert_eq!(r.status, Status::Fail);
        assert!(!r.counterexamples.is_empty());
    }

    #[test]
    fn merge_is_order_independent() {
        let a = sample("a", &["G1", "G7", "G3"], 2);
        let b = sample("b", &["G2", "G5", "G4"], 1);
        let c = sample("c", &["G0"], 4);
        let abc = VerificationReport::combine("t", [&a, &b, &c]);
        let cab = VerificationReport::combine("t", [&c, &a, &b]);
        let mut ab = VerificationReport::combine("t", [&a, &b]);
        ab.merge(&c);
        assert_eq!(abc, cab);
        assert_eq!(abc, ab);
        assert_eq!(abc.counterexamples.len(), MAX_COUNTEREXAMPLES);
        assert_eq!(abc.counterexamples[0].graph6, "G0");
        assert_eq!(abc.failures, 7);
    }

    #[test]
    fn json_round_trip() {
        let r = sample("j", &["D?{"], 3);
        let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
