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


//! Graph corpora with a provenance tag per member.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{enumerate_up_to, EnumerationError};
use crate::classify::{is_delta_critical, SolverError};
use crate::graph::{builtin_fixture, to_graph6, Graph};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub graph: Arc<Graph>,
    /// `enumerated:<n>`, `family:<name>`, `fixture:<name>` or `file`.
    pub source: String,
}

impl CorpusEntry {
    pub fn new(graph: Graph, source: impl Into<String>) -> CorpusEntry {
        CorpusEntry { graph: Arc::new(graph), source: source.into() }
    }

    pub fn graph6(&self) -> String {
        to_graph6(&self.graph)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CorpusSummary {
    pub size: usize,
    pub by_order: Vec<(usize, usize)>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn push(&mut self, entry: CorpusEntry) {
        self.entries.push(entry);
    }

    /// Members passing `keep`, evaluated in parallel; order is preserved.
    pub fn filter<E: Send>(
        &self,
        keep: impl Fn(&Graph) -> Result<bool, E> + Sync,
    ) -> Result<Corpus, E> {
        let flags: Vec<bool> = self
            .entries
            .par_iter()
            .map(|e| keep(&e.graph))
            .collect::<Result<_, E>>()?;
        Ok(Corpus {
            entries: self.entries.iter().zip(flags).filter(|(_, k)| *k).map(|(e, _)| e.clone()).collect(),
        })
    }

    pub fn summary(&self) -> CorpusSummary {
        let mut by_order: Vec<(usize, usize)> = Vec::new();
        for e in &self.entries {
            match by_order.iter_mut().find(|(n, _)| *n == e.graph.n()) {
                Some(slot) => slot.1 += 1,
                None => by_order.push((e.graph.n(), 1)),
            }
        }
        by_order.sort();
        CorpusSummary { size: self.len(), by_order }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CorpusError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// Every graph on at most `n_max` vertices, one per isomorphism class.
pub fn enumerated_corpus(n_max: usize) -> Result<Corpus, CorpusError> {
    let levels = enumerate_up_to(n_max)?;
    let mut corpus = Corpus::default();
    for (n, level) in levels.into_iter().enumerate() {
        for g in level {
            corpus.push(CorpusEntry::new(g, format!("enumerated:{n}")));
        }
    }
    Ok(corpus)
}

/// The Δ-critical members of the enumeration up to `n_max`.
pub fn delta_critical_corpus(n_max: usize) -> Result<Corpus, CorpusError> {
    Ok(enumerated_corpus(n_max)?.filter(is_delta_critical)?)
}

/// Built-in named graphs.
pub fn fixture_corpus(names: &[&str]) -> Corpus {
    Corpus {
        entries: names
            .iter()
            .filter_map(|&name| builtin_fixture(name).map(|g| CorpusEntry::new(g, format!("fixture:{name}"))))
            .collect(),
    }
}
