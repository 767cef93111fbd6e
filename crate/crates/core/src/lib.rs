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


//! Edge-coloring toolkit for small simple graphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: immutable simple graphs, graph6 I/O, vertex splitting, pair
//!   identification and canonical forms.
//! - [`coloring`]: partial edge colorings, Kempe chains and the two-row swap
//!   script interpreter.
//! - [`classify`]: Vizing (Δ+1)-colorings, an exact chromatic index solver,
//!   Class 1/2 and criticality tests.
//! - [`structures`]: multifans, Kierstead paths, short-kites, kites and forks,
//!   plus checkers for the degree and linkage facts they obey in critical
//!   graphs.
//! - [`normalize`]: the recoloring procedure that puts a 5-vertex Kierstead
//!   path into its standard color pattern.
//! - [`harness`]: graph enumeration, regular Class 1 families, and sweeps that
//!   check all of the above over corpora, producing [`report::VerificationReport`]s.
//!
//! ```
//! use vizing::graph::builtin_fixture;
//! use vizing::classify::{classify, Class};
//!
//! let pstar = builtin_fixture("pstar").unwrap();
//! assert_eq!(classify(&pstar).unwrap(), Class::Two);
//! assert!(!pstar.is_overfull());
//! ```

pub mod classify;
pub mod cli;
pub mod coloring;
pub mod graph;
pub mod harness;
pub mod normalize;
pub mod report;
pub mod structures;
