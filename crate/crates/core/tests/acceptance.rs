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



//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::collections::HashSet;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vizing::classify::{classify, exact_chromatic_index, is_critical_edge, vizing_plus_one_coloring, Class};
use vizing::graph::{builtin_fixture, canonical_form, from_graph6, Graph};
use vizing::harness::theorems::deficiency_bound_met;
use vizing::harness::{
    class1_regular_family, delta_critical_corpus, enumerate_graphs, lemma_sweep, mining_hosts, normalize_sweep,
    planted_class_one, verify_corollary, verify_theorem1, verify_theorem2, FamilyKind, SweepConfig,
};
use vizing::normalize::{normalize_k5, NormalizationOutcome};
use vizing::report::{Status, VerificationReport};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

/// Calls `f` on every permutation of `0..n`.
fn for_each_perm(n: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(p, k + 1, f);
            p.swap(k, i);
        }
    }
    let mut p: Vec<usize> = (0..n).collect();
    rec(&mut p, 0, f);
}

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![0; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            idx[i][j] = k;
            idx[j][i] = k;
            k += 1;
        }
    }
    idx
}

/// Orbit count of labeled graphs under relabeling, by averaging fixed points.
fn burnside_count(n: usize) -> u128 {
    let idx = pair_index(n);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let (mut sum, mut perms) = (0u128, 0u128);
    for_each_perm(n, &mut |p| {
        let mut seen = vec![false; pairs.len()];
        let mut cycles = 0;
        for s in 0..pairs.len() {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut t = s;
            while !seen[t] {
                seen[t] = true;
                let (i, j) = pairs[t];
                t = idx[p[i]][p[j]];
            }
        }
        sum += 1u128 << cycles;
        perms += 1;
    });
    sum / perms
}

/// Smallest edge bitmask over all relabelings.
fn min_relabel(edges: &[(usize, usize)], perms: &[Vec<usize>], idx: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|p| edges.iter().fold(0u64, |m, &(u, v)| m | 1 << idx[p[u]][p[v]]))
        .min()
        .unwrap_or(0)
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_perm(n, &mut |p| out.push(p.to_vec()));
    out
}

/// Labeled brute force: every edge subset, reduced by `min_relabel`.
fn brute_force_count(n: usize) -> usize {
    let idx = pair_index(n);
    let perms = all_perms(n);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut classes = HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|&b| mask >> b & 1 == 1).map(|b| pairs[b]).collect();
        let m = min_relabel(&edges, &perms, &idx);
        if m == mask {
            classes.insert(m);
        }
    }
    classes.len()
}

fn pairwise_non_isomorphic(n: usize, graphs: &[Graph]) -> bool {
    let idx = pair_index(n);
    let perms = all_perms(n);
    let mut seen = HashSet::new();
    graphs.iter().all(|g| {
        let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.endpoints().0 .0, e.endpoints().1 .0)).collect();
        seen.insert(min_relabel(&edges, &perms, &idx))
    })
}

fn criterion1() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for n in 3..=8 {
        let graphs = enumerate_graphs(n).expect("enumeration");
        let expect = if n <= 6 { brute_force_count(n) as u128 } else { burnside_count(n) };
        let distinct = n > 7 || pairwise_non_isomorphic(n, &graphs);
        ok &= graphs.len() as u128 == expect && distinct;
        parts.push(format!("n={n}:{}/{expect}", graphs.len()));
    }
    outcome(ok, parts.join(" "))
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).expect("valid edges")
}

fn criterion2() -> Outcome {
    let mut ok = true;
    let mut bad = Vec::new();
    for (name, want) in [("k4", 3), ("k6", 5), ("pstar", 4), ("c5", 3)] {
        let got = exact_chromatic_index(&builtin_fixture(name).unwrap()).unwrap_or(0);
        if got != want {
            ok = false;
            bad.push(format!("{name}={got}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut konig = 0;
    for _ in 0..200 {
        let (l, r) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let p = rng.gen_range(0.2..0.9);
        let edges: Vec<(usize, usize)> =
            (0..l).flat_map(|i| (0..r).map(move |j| (i, l + j))).filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::from_edges(l + r, edges).unwrap();
        if exact_chromatic_index(&g) == Ok(g.max_degree()) {
            konig += 1;
        }
    }
    ok &= konig == 200;
    let mut viz = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=24);
        let p = rng.gen_range(0.05..0.95);
        let g = random_graph(&mut rng, n, p);
        let c = vizing_plus_one_coloring(&g);
        if c.is_full() && c.validate() && c.k() as usize <= g.max_degree() + 1 {
            viz += 1;
        }
    }
    ok &= viz == 500;
    outcome(ok, format!("fixtures {} konig {konig}/200 vizing {viz}/500", if bad.is_empty() { "ok".into() } else { bad.join(",") }))
}

fn criterion3() -> Outcome {
    let g = builtin_fixture("pstar").unwrap();
    let connected = g.is_connected();
    let class2 = classify(&g) == Ok(Class::Two);
    let critical = g.edges().iter().filter(|&&e| is_critical_edge(&g, e) == Ok(true)).count();
    let overfull = g.is_overfull();
    let delta = g.max_degree();
    let below = !deficiency_bound_met(delta, g.n()) && 4 * delta < 3 * (g.n() - 1);
    let ok = connected && class2 && g.edge_count() == 12 && critical == 12 && !overfull && delta == 3 && below;
    outcome(
        ok,
        format!(
            "connected={connected} class2={class2} critical={critical}/{} overfull={overfull} Δ={delta} bound={}",
            g.edge_count(),
            3.0 * (g.n() - 1) as f64 / 4.0
        ),
    )
}

fn criterion4() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in [4, 6] {
        let m = class1_regular_family(FamilyKind::CompleteEven { n }).unwrap();
        let r = verify_theorem1(&m);
        ok &= r.status == Status::Pass && r.failures == 0 && r.hypothesis_met > 0;
        parts.push(format!("K{n}: {} distinct splits, {} failures", r.hypothesis_met, r.failures));
    }
    outcome(ok, parts.join("; "))
}

fn criterion5() -> Outcome {
    let corpus = delta_critical_corpus(8).expect("corpus");
    let t2 = verify_theorem2(&corpus);
    let cor = verify_corollary(&corpus);
    let met: Vec<Graph> = t2
        .notes
        .iter()
        .filter_map(|n| n.strip_prefix("met: "))
        .filter_map(|s| from_graph6(s.split_whitespace().next()?).ok())
        .collect();
    let hit = |name: &str| {
        let want = canonical_form(&builtin_fixture(name).unwrap());
        met.iter().any(|g| canonical_form(g) == want)
    };
    let (tri, sk4) = (hit("triangle"), hit("splitk4"));
    let ok = t2.failures == 0 && cor.failures == 0 && t2.hypothesis_met >= 2 && tri && sk4;
    outcome(
        ok,
        format!(
            "{} critical graphs, met {} (triangle={tri} splitk4={sk4}), failures {}; corollary met {} failures {}",
            corpus.len(),
            t2.hypothesis_met,
            t2.failures,
            cor.hypothesis_met,
            cor.failures
        ),
    )
}

fn criterion6() -> Outcome {
    let corpus = delta_critical_corpus(8).expect("corpus");
    let reports = lemma_sweep(&corpus, &SweepConfig { seeds: 8, ..SweepConfig::default() });
    let failures: u64 = reports.iter().map(|r| r.failures).sum();
    let fired: Vec<&str> = reports.iter().filter(|r| r.hypothesis_met > 0).map(|r| r.check.as_str()).collect();
    let flagged: Vec<&VerificationReport> = reports.iter().filter(|r| r.hypothesis_met == 0).collect();
    let all_flagged = flagged.iter().all(|r| r.notes.iter().any(|n| n.contains("never met")));
    let names: Vec<&str> = flagged.iter().map(|r| r.check.as_str()).collect();
    outcome(
        failures == 0 && all_flagged,
        format!("failures {failures}; fired: {}; not instantiable at n <= 8: {}", fired.join(","), names.join(",")),
    )
}

fn criterion7() -> Outcome {
    let hosts = mining_hosts(1, 600);
    let rep = normalize_sweep(&hosts, 3);
    let get = |k: &str| rep.counters.get(k).copied().unwrap_or(0);
    let (c1, c2) = (get("class1_hosts"), get("class2_hosts"));
    let (normalized, proper) = (get("normalized"), get("proper_coloring"));
    let (c, k) = planted_class_one();
    let planted = matches!(normalize_k5(&c, &k), Ok(NormalizationOutcome::ProperColoring { ref coloring, .. })
        if coloring.is_full() && coloring.validate());
    let ok = rep.failures == 0 && planted && rep.instances > 0 && normalized > 0;
    outcome(
        ok,
        format!(
            "{} instances (Class 2 hosts {c2}, Class 1 hosts {c1}): {normalized} normalized, {proper} colored outright, \
             {} errors; planted fixture colored outright={planted}",
            rep.instances, rep.failures
        ),
    )
}

fn run_verify(dir: &Path) -> bool {
    Command::new(env!("CARGO_BIN_EXE_vizing"))
        .args(["verify", "--suite", "default", "--seeds", "8", "--out"])
        .arg(dir)
        .output()
        .map(|o| o.status.success() || o.status.code() == Some(1))
        .unwrap_or(false)
}

fn dir_contents(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<(String, Vec<u8>)> = std::fs::read_dir(dir)
        .map(|rd| {
            rd.filter_map(Result::ok)
                .map(|e| (e.file_name().to_string_lossy().into_owned(), std::fs::read(e.path()).unwrap_or_default()))
                .collect()
        })
        .unwrap_or_default();
    files.sort();
    files
}

fn criterion8() -> Outcome {
    let tmp = tempfile::tempdir().expect("tempdir");
    let (a, b) = (tmp.path().join("a"), tmp.path().join("b"));
    if !run_verify(&a) || !run_verify(&b) {
        return outcome(false, "verify did not run");
    }
    let (fa, fb) = (dir_contents(&a), dir_contents(&b));
    let same = !fa.is_empty() && fa == fb;
    let bytes: usize = fa.iter().map(|(_, d)| d.len()).sum();
    outcome(same, format!("{} report files, {bytes} bytes, identical={same}", fa.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 8] = [
        ("1 enumeration oracle", criterion1, Duration::from_secs(120)),
        ("2 classifier sanity", criterion2, Duration::from_secs(300)),
        ("3 pstar certificate", criterion3, Duration::from_secs(30)),
        ("4 vertex splitting", criterion4, Duration::from_secs(600)),
        ("5 full-deficiency pairs", criterion5, Duration::from_secs(1200)),
        ("6 lemma sweeps", criterion6, Duration::from_secs(1800)),
        ("7 kierstead normalization", criterion7, Duration::from_secs(1800)),
        ("8 determinism", criterion8, Duration::from_secs(1800)),
    ];
    let mut failed = 0;
    for (name, f, limit) in criteria {
        let start = Instant::now();
        let o = f();
        let took = start.elapsed();
        let ok = o.ok && took <= limit;
        failed += usize::from(!ok);
        println!("[{}] {name} ({:.2}s): {}", if ok { "PASS" } else { "FAIL" }, took.as_secs_f64(), o.detail);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
