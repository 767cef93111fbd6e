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


//! Normalizing a 5-vertex Kierstead path `(a, b, u, s, t)` with
//! `|φ̄(t) ∩ (φ̄(a) ∪ φ̄(b))| ≥ 3`.
//!
//! The target pattern, with `ab` still uncolored:
//!
//! - `φ(bu) ∈ φ̄(a) ∩ φ̄(t)`
//! - `φ(us) ∈ φ̄(b) ∩ φ̄(t)`
//! - `φ(st) ∈ φ̄(a)`
//!
//! The procedure is a fixed case analysis on where `φ(us)` and `φ(st)` are
//! missing, made of Kempe changes at `a`, `b` and `t` and color renamings.
//! Each step relies on linkage facts that hold when `ab` is critical in a
//! Class 2 graph. Those facts are checked as the procedure runs; when one
//! fails, `G` should have a Δ-edge-coloring, and the procedure returns one
//! found by a direct completion or the exact solver. If none exists the run
//! is reported as a [`NormalizeError::Fallthrough`].

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::classify::{find_coloring, SolverConfig};
use crate::coloring::{apply_script, Color, ColorSet, PartialEdgeColoring, Step, SwapScript, Trace};
use crate::graph::{Edge, VertexId};
use crate::report::{Counterexample, VerificationReport};
use crate::structures::{end_overlap, is_kierstead_path, KiersteadPath};

/// Largest number of Kempe changes any branch performs.
pub const MAX_SWAPS: usize = 24;

#[derive(Clone, Debug)]
pub enum NormalizationOutcome {
    /// The coloring in the target pattern, with `alpha = φ(bu)`,
    /// `beta = φ(us)` and `gamma = φ(st)`.
    Normalized {
        coloring: PartialEdgeColoring,
        alpha: Color,
        beta: Color,
        gamma: Color,
        script: SwapScript,
        trace: Trace,
        /// Labels of the branches taken, in order.
        path: Vec<&'static str>,
    },
    /// The case analysis could not proceed, which only happens when the host
    /// graph is Δ-edge-colorable; this is such a coloring.
    ProperColoring {
        coloring: PartialEdgeColoring,
        script: SwapScript,
        reason: String,
    },
}

impl NormalizationOutcome {
    pub fn is_normalized(&self) -> bool {
        matches!(self, NormalizationOutcome::Normalized { .. })
    }

    pub fn coloring(&self) -> &PartialEdgeColoring {
        match self {
            NormalizationOutcome::Normalized { coloring, .. } | NormalizationOutcome::ProperColoring { coloring, .. } => {
                coloring
            }
        }
    }

    pub fn script(&self) -> &SwapScript {
        match self {
            NormalizationOutcome::Normalized { script, .. } | NormalizationOutcome::ProperColoring { script, .. } => {
                script
            }
        }
    }
}

#[derive(Debug, Clone, Error)]
pub enum NormalizeError {
    #[error("expected exactly one uncolored edge, namely {0}")]
    UncoloredEdge(Edge),
    #[error("palette has {k} colors but Δ = {delta}")]
    Palette { k: u8, delta: usize },
    #[error("not a 5-vertex Kierstead path rooted at the uncolored edge")]
    NotKierstead,
    #[error("|φ̄(t) ∩ (φ̄(a) ∪ φ̄(b))| = {0} < 3")]
    HypothesisUnmet(usize),
    #[error("case analysis fell through at `{stage}` after {steps} steps:\n{script}")]
    Fallthrough { stage: String, steps: usize, script: SwapScript },
    #[error("{swaps} Kempe changes exceed the bound {MAX_SWAPS}")]
    SwapBound { swaps: usize },
}

enum Flow {
    /// A linkage fact failed.
    Escape(String),
    /// A claim derived from the linkage facts failed.
    Fallthrough(String),
}

type Res<T> = Result<T, Flow>;

fn fall<T>(msg: impl Into<String>) -> Res<T> {
    Err(Flow::Fallthrough(msg.into()))
}

struct Run {
    cur: PartialEdgeColoring,
    script: SwapScript,
    path: Vec<&'static str>,
    a: VertexId,
    b: VertexId,
    u: VertexId,
    s: VertexId,
    t: VertexId,
}

impl Run {
    fn miss(&self, x: VertexId) -> ColorSet {
        self.cur.missing(x)
    }

    fn col(&self, x: VertexId, y: VertexId) -> Res<Color> {
        match self.cur.color(x, y) {
            Some(c) => Ok(c),
            None => fall(format!("edge {x}-{y} is uncolored")),
        }
    }

    fn gamma_set(&self) -> ColorSet {
        self.miss(self.t).intersection(self.miss(self.a).union(self.miss(self.b)))
    }

    fn push(&mut self, step: Step) -> Res<()> {
        if let Err(e) = step.apply(&mut self.cur) {
            return fall(format!("step failed: {e}"));
        }
        self.script.push(step);
        if !self.cur.is_proper() {
            return fall("Kempe change left an improper coloring");
        }
        Ok(())
    }

    /// (p,q)-swap at `x`; a no-op when `x` misses both colors.
    fn swap(&mut self, x: VertexId, p: Color, q: Color) -> Res<()> {
        let m = self.miss(x);
        if p == q || (m.contains(p) && m.contains(q)) {
            return Ok(());
        }
        if !m.contains(p) && !m.contains(q) {
            return fall(format!("({p},{q})-swap at {x}, which misses neither color"));
        }
        self.push(Step::chain(x, None, p, q))
    }

    fn rename(&mut self, p: Color, q: Color) -> Res<()> {
        if p == q {
            return Ok(());
        }
        self.push(Step::rename(p, q))
    }

    fn linked(&self, x: VertexId, y: VertexId, p: Color, q: Color) -> bool {
        self.cur.are_linked(x, y, p, q)
    }

    fn need_linked(&self, x: VertexId, y: VertexId, p: Color, q: Color) -> Res<()> {
        if self.linked(x, y, p, q) {
            Ok(())
        } else {
            Err(Flow::Escape(format!("{x} and {y} are not ({p},{q})-linked")))
        }
    }

    fn on_chain_at(&self, x: VertexId, p: Color, q: Color, v: VertexId) -> Res<bool> {
        match self.cur.chain_through(x, p, q) {
            Ok(ch) => Ok(ch.contains(v)),
            Err(e) => fall(format!("chain P_{x}({p},{q}): {e}")),
        }
    }

    fn claim(&self, ok: bool, what: &str) -> Res<()> {
        if ok {
            Ok(())
        } else {
            fall(format!("expected {what}"))
        }
    }

    fn done(&self) -> bool {
        target_pattern(&self.cur, self.a, self.b, self.u, self.s, self.t).is_some()
    }

    /// Picks α ∈ Γ ∩ φ̄(a) and β ∈ Γ ∩ φ̄(b), moving a color of Γ across
    /// the pair with one swap if Γ lies on one side.
    fn split_gamma(&mut self) -> Res<(Color, Color)> {
        let (a, b) = (self.a, self.b);
        let gam = self.gamma_set();
        let ga = gam.intersection(self.miss(a));
        let gb = gam.intersection(self.miss(b));
        if !ga.is_empty() && !gb.is_empty() {
            self.path.push("gamma_split");
            return Ok((ga.min().unwrap(), gb.min().unwrap()));
        }
        if gb.is_empty() {
            self.path.push("gamma_at_a");
            let mut it = ga.iter();
            let (alpha, beta) = (it.next().unwrap(), it.next().unwrap());
            let lambda = self.miss(b).min().unwrap();
            self.need_linked(a, b, beta, lambda)?;
            self.swap(b, beta, lambda)?;
            Ok((alpha, beta))
        } else {
            self.path.push("gamma_at_b");
            let mut it = gb.iter();
            let (beta, alpha) = (it.next().unwrap(), it.next().unwrap());
            let lambda = self.miss(a).min().unwrap();
            self.need_linked(a, b, alpha, lambda)?;
            self.swap(a, alpha, lambda)?;
            Ok((alpha, beta))
        }
    }

    /// Makes φ(bu) = α with α ∈ φ̄(a) ∩ φ̄(t); returns the new α.
    fn fix_bu(&mut self, alpha: Color) -> Res<Color> {
        let (a, b, u, t) = (self.a, self.b, self.u, self.t);
        let delta = self.col(b, u)?;
        self.claim(self.miss(a).contains(delta), "φ(bu) missing at a")?;
        if delta == alpha {
            return Ok(alpha);
        }
        if self.miss(t).contains(delta) {
            self.path.push("bu_already_at_t");
            return Ok(delta);
        }
        // any α' ∈ Γ ∩ φ̄(a) whose chain from t avoids b will do
        let ga = self.gamma_set().intersection(self.miss(a));
        let mut candidates: Vec<Color> = vec![alpha];
        candidates.extend(ga.iter().filter(|&c| c != alpha));
        for al in candidates {
            if !self.on_chain_at(t, al, delta, b)? {
                if al != alpha {
                    self.path.push("bu_alternate_alpha");
                }
                self.path.push("bu_swap_rename");
                self.swap(t, al, delta)?;
                self.rename(al, delta)?;
                return Ok(al);
            }
        }
        fall("every (α,φ(bu))-chain from t passes through b")
    }

    /// With φ(us) ∈ φ̄(b): makes φ(us) ∈ φ̄(b) ∩ φ̄(t) by a swap at t and a
    /// renaming, then requires φ(st) ∈ φ̄(a).
    fn finish_us_at_b(&mut self, alpha: Color, beta: Color) -> Res<()> {
        let (a, b, u, s, t) = (self.a, self.b, self.u, self.s, self.t);
        let eta = self.col(u, s)?;
        self.claim(self.miss(b).contains(eta), "φ(us) missing at b")?;
        if !self.miss(t).contains(eta) {
            let gb = self.gamma_set().intersection(self.miss(b));
            let mut candidates = vec![beta];
            candidates.extend(gb.iter().filter(|&c| c != beta));
            let mut moved = false;
            for be in candidates {
                if !self.on_chain_at(t, be, eta, u)? {
                    if be != beta {
                        self.path.push("us_alternate_beta");
                    }
                    self.path.push("us_swap_rename");
                    self.swap(t, be, eta)?;
                    self.rename(be, eta)?;
                    moved = true;
                    break;
                }
            }
            if !moved {
                return fall("every (β,φ(us))-chain from t passes through u");
            }
        }
        let gamma = self.col(s, t)?;
        let _ = alpha;
        if self.miss(a).contains(gamma) {
            return Ok(());
        }
        // uncoloring bu and coloring ab would give a 4-vertex Kierstead path
        // whose end shares two colors with its uncolored edge
        Err(Flow::Escape(format!("φ(st)={gamma} is not missing at a in the us ∈ φ̄(b) branch")))
    }

    fn run(&mut self) -> Res<()> {
        let (a, b, u, s, t) = (self.a, self.b, self.u, self.s, self.t);
        if self.done() {
            self.path.push("already_normal");
            return Ok(());
        }
        if !self.cur.is_elementary(&[a, b]) {
            return Err(Flow::Escape("a and b share a missing color".into()));
        }
        let (alpha, beta) = self.split_gamma()?;
        let alpha = self.fix_bu(alpha)?;
        self.claim(
            self.col(b, u)? == alpha && self.miss(a).contains(alpha) && self.miss(t).contains(alpha),
            "φ(bu) = α ∈ φ̄(a) ∩ φ̄(t)",
        )?;
        self.claim(self.miss(b).contains(beta) && self.miss(t).contains(beta), "β ∈ φ̄(b) ∩ φ̄(t)")?;

        let eta = self.col(u, s)?;
        if self.miss(b).contains(eta) {
            self.path.push("us_at_b");
            return self.finish_us_at_b(alpha, beta);
        }
        self.claim(self.miss(a).contains(eta), "φ(us) missing at a or b")?;
        let delta = eta;
        let gamma = self.col(s, t)?;
        self.claim(![alpha, beta, delta].contains(&gamma), "φ(st) ∉ {α,β,δ}")?;

        if self.miss(b).contains(gamma) {
            self.need_linked(a, b, delta, beta)?;
            if self.on_chain_at(a, beta, delta, u)? {
                self.path.push("gamma_at_b_u_on_ab_chain");
                self.swap(t, beta, delta)?;
                self.need_linked(a, b, delta, gamma)?;
                self.claim(self.on_chain_at(t, delta, gamma, u)?, "u ∈ P_t(δ,γ)")?;
                self.swap(a, delta, gamma)?;
            } else {
                self.path.push("gamma_at_b_u_off_ab_chain");
                self.swap(a, beta, delta)?;
                self.need_linked(a, b, beta, gamma)?;
                self.swap(a, beta, gamma)?;
                // φ(us) = δ is now missing at b; finish as in that branch
                let beta_now = self.gamma_set().intersection(self.miss(b)).min();
                let Some(beta_now) = beta_now else { return fall("no color of Γ left at b") };
                self.finish_us_at_b(alpha, beta_now)?;
            }
            return Ok(());
        }

        if self.miss(u).contains(gamma) {
            self.need_linked(b, u, beta, gamma)?;
            if !self.miss(t).contains(delta) {
                self.path.push("gamma_at_u_delta_off_t");
                self.need_linked(a, u, delta, gamma)?;
                self.swap(t, beta, gamma)?;
                self.swap(t, gamma, delta)?;
            } else {
                self.path.push("gamma_at_u_delta_at_t");
                self.swap(t, beta, gamma)?;
            }
            self.claim(self.on_chain_at(t, delta, beta, u)?, "u ∈ P_t(β,δ)")?;
            self.need_linked(a, b, delta, beta)?;
            self.swap(a, beta, delta)?;
            return Ok(());
        }

        self.claim(self.miss(a).contains(gamma), "φ(st) missing at a, b or u")?;
        self.gamma_at_a(alpha, beta, delta, gamma, 0)
    }

    fn gamma_at_a(&mut self, alpha: Color, beta: Color, delta: Color, gamma: Color, depth: usize) -> Res<()> {
        let (a, b, u, t) = (self.a, self.b, self.u, self.t);
        if depth > 2 {
            return fall("the γ ∈ φ̄(a) branch did not reach δ ∈ Γ");
        }
        if self.miss(t).contains(delta) {
            self.path.push("gamma_at_a_delta_at_t");
            self.swap(t, beta, gamma)?;
            self.need_linked(a, b, delta, beta)?;
            self.swap(a, beta, delta)?;
            return Ok(());
        }
        let gam = self.gamma_set();
        let Some(tau) = gam.iter().find(|&c| c != alpha && c != beta) else {
            return fall("Γ has no third color");
        };
        if self.miss(u).contains(tau) {
            self.path.push("gamma_at_a_tau_at_u");
            self.need_linked(a, u, delta, tau)?;
            self.swap(t, tau, delta)?;
            return self.gamma_at_a(alpha, beta, delta, gamma, depth + 1);
        }
        if self.miss(b).contains(tau) {
            self.need_linked(a, b, tau, delta)?;
            if !self.on_chain_at(a, tau, delta, u)? {
                self.path.push("gamma_at_a_tau_at_b_off_chain");
                self.swap(a, tau, delta)?;
                return self.finish_us_at_b(alpha, beta);
            }
            self.path.push("gamma_at_a_tau_at_b");
            self.swap(t, tau, delta)?;
            return self.gamma_at_a(alpha, beta, delta, gamma, depth + 1);
        }
        self.claim(self.miss(a).contains(tau), "τ missing at a, b or u")?;
        self.need_linked(a, b, delta, beta)?;
        if !self.on_chain_at(a, beta, delta, u)? {
            self.path.push("gamma_at_a_tau_at_a_off_chain");
            self.swap(a, beta, delta)?;
            self.need_linked(a, b, alpha, delta)?;
            self.claim(self.on_chain_at(a, alpha, delta, u)?, "u ∈ P_a(α,δ)")?;
            self.swap(t, alpha, delta)?;
            self.claim(self.on_chain_at(t, gamma, delta, u)?, "u ∈ P_t(γ,δ)")?;
            self.need_linked(a, b, gamma, delta)?;
            self.swap(a, gamma, delta)?;
            self.swap(t, beta, gamma)?;
            self.swap(t, gamma, alpha)?;
            self.need_linked(a, b, tau, gamma)?;
            self.swap(t, tau, gamma)?;
            self.swap(a, beta, gamma)?;
            self.claim(self.on_chain_at(t, beta, delta, u)?, "u ∈ P_t(β,δ)")?;
            self.swap(a, beta, delta)?;
        } else {
            self.path.push("gamma_at_a_tau_at_a_on_chain");
            self.swap(t, beta, delta)?;
            self.swap(t, tau, beta)?;
            self.need_linked(a, b, beta, gamma)?;
            self.swap(a, beta, gamma)?;
            self.need_linked(a, b, gamma, delta)?;
            self.swap(a, gamma, delta)?;
        }
        Ok(())
    }
}

/// The colors `(φ(bu), φ(us), φ(st))` if the path is in the target pattern.
pub fn target_pattern(
    c: &PartialEdgeColoring,
    a: VertexId,
    b: VertexId,
    u: VertexId,
    s: VertexId,
    t: VertexId,
) -> Option<(Color, Color, Color)> {
    let (bu, us, st) = (c.color(b, u)?, c.color(u, s)?, c.color(s, t)?);
    let ok = c.missing(a).contains(bu)
        && c.missing(t).contains(bu)
        && c.missing(b).contains(us)
        && c.missing(t).contains(us)
        && c.missing(a).contains(st)
        && c.color(a, b).is_none();
    ok.then_some((bu, us, st))
}

/// Direct completions first; the exact solver otherwise.
fn complete(c: &PartialEdgeColoring, a: VertexId, b: VertexId) -> Option<(PartialEdgeColoring, SwapScript)> {
    let ab = Edge::new(a, b);
    let common = c.missing(a).intersection(c.missing(b));
    if let Some(col) = common.min() {
        let mut script = SwapScript::new();
        script.push(Step::assign(ab, col));
        let (out, _) = apply_script(c, &script).ok()?;
        return Some((out, script));
    }
    for p in c.missing(a).iter() {
        for q in c.missing(b).iter() {
            if !c.are_linked(a, b, p, q) {
                let mut script = SwapScript::new();
                script.push(Step::chain(a, None, p, q));
                script.push(Step::assign(ab, q));
                if let Ok((out, _)) = apply_script(c, &script) {
                    return Some((out, script));
                }
            }
        }
    }
    let g = c.shared_graph().clone();
    let full = find_coloring(&g, c.k(), None, SolverConfig::default()).ok()??;
    Some((full, SwapScript::new()))
}

/// Puts the coloring along `k = (a, b, u, s, t)` into the target pattern.
pub fn normalize_k5(c: &PartialEdgeColoring, k: &KiersteadPath) -> Result<NormalizationOutcome, NormalizeError> {
    if k.len() != 5 {
        return Err(NormalizeError::NotKierstead);
    }
    let [a, b, u, s, t] = [k.vertices[0], k.vertices[1], k.vertices[2], k.vertices[3], k.vertices[4]];
    let ab = Edge::new(a, b);
    if c.uncolored_edges() != vec![ab] {
        return Err(NormalizeError::UncoloredEdge(ab));
    }
    let delta = c.graph().max_degree();
    if c.k() as usize != delta {
        return Err(NormalizeError::Palette { k: c.k(), delta });
    }
    if !c.validate() || !is_kierstead_path(c, k) {
        return Err(NormalizeError::NotKierstead);
    }
    let overlap = end_overlap(c, k);
    if overlap < 3 {
        return Err(NormalizeError::HypothesisUnmet(overlap));
    }
    let mut run = Run { cur: c.clone(), script: SwapScript::new(), path: Vec::new(), a, b, u, s, t };
    let flow = run.run();
    let swaps = run.script.swap_count();
    if swaps > MAX_SWAPS {
        return Err(NormalizeError::SwapBound { swaps });
    }
    let fallthrough = |stage: String, run: &Run| NormalizeError::Fallthrough {
        stage,
        steps: run.script.len(),
        script: run.script.clone(),
    };
    let certify = |reason: String, run: &Run| match complete(&run.cur, a, b) {
        Some((coloring, tail)) => {
            let mut script = run.script.clone();
            for step in tail.steps {
                script.push(step);
            }
            Ok(NormalizationOutcome::ProperColoring { coloring, script, reason })
        }
        None => Err(fallthrough(format!("{}: {reason}, yet G has no Δ-edge-coloring", run.path.join(">")), run)),
    };
    match flow {
        Ok(()) => {
            let Some((alpha, beta, gamma)) = target_pattern(&run.cur, a, b, u, s, t) else {
                return certify(format!("{} ended outside the target pattern", run.path.join(">")), &run);
            };
            let (replayed, trace) = apply_script(c, &run.script)
                .map_err(|e| fallthrough(format!("replay failed: {e}"), &run))?;
            if replayed != run.cur || !trace.all_proper() {
                return Err(fallthrough("replay disagrees with the run".into(), &run));
            }
            Ok(NormalizationOutcome::Normalized {
                coloring: run.cur,
                alpha,
                beta,
                gamma,
                script: run.script,
                trace,
                path: run.path,
            })
        }
        Err(Flow::Fallthrough(stage)) | Err(Flow::Escape(stage)) => certify(stage, &run),
    }
}

/// What a replayed script is expected to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Expectation {
    /// Proper with every edge colored.
    ProperFull,
    /// Proper, possibly with uncolored edges.
    ProperPartial,
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expectation::ProperFull => "proper-full",
            Expectation::ProperPartial => "proper-partial",
        })
    }
}

/// Applies a two-row script and checks the result against `expect`.
pub fn replay_proof_script(c: &PartialEdgeColoring, script: &SwapScript, expect: Expectation) -> VerificationReport {
    let mut rep = VerificationReport::new("replay");
    let g6 = crate::graph::to_graph6(c.graph());
    match apply_script(c, script) {
        Ok((out, _)) => {
            let ok = match expect {
                Expectation::ProperFull => out.is_full(),
                Expectation::ProperPartial => true,
            };
            rep.check(ok, || {
                Counterexample::new(g6.clone(), format!("result has {} uncolored edges", out.uncolored_count()))
                    .with_witness(script.to_string())
                    .with_coloring(out.to_text())
            });
        }
        Err(e) => rep.fail(
            Counterexample::new(g6, e.to_string())
                .with_witness(script.to_string())
                .with_coloring(c.to_text()),
        ),
    }
    rep
}
