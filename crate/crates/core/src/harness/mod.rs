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


//! Corpora and the sweeps that check every structural statement over them.

pub mod corpus;
pub mod enumerate;
pub mod families;
pub mod suite;
pub mod sweeps;
pub mod theorems;

pub use corpus::{delta_critical_corpus, enumerated_corpus, fixture_corpus, Corpus, CorpusEntry, CorpusError};
pub use enumerate::{enumerate_graphs, enumerate_up_to, EnumerationError, MAX_ENUMERATION_ORDER};
pub use families::{class1_regular_family, default_families, round_robin_coloring, FamilyError, FamilyKind, FamilyMember};
pub use suite::{run_suite, SuiteConfig, SuiteKind, SuiteResult, SuiteSummary};
pub use sweeps::{
    colorings_for_edge, lemma_sweep, mining_hosts, normalize_sweep, planted_class_one, SweepConfig, LEMMA_CHECKS,
};
pub use theorems::{verify_corollary, verify_theorem1, verify_theorem2};
