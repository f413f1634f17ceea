use std::time::Instant;

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::claims::{
    check_aharoni_howard, check_berge, check_intersecting, check_min_degree_pm, check_rainbow_family,
    check_rainbow_pair, check_shift, check_solvers, check_stability, check_tightness, claim, family_record,
    graph_record, Regime, Verdict,
};
use super::pool;
use super::report::{Status, VerificationReport};
use crate::constructions::{
    complete_uniform, extremal_hknm, legal_tuples, lemma24_tight_family, rainbow_tight_family, random_hypergraph_from,
    seeded_rng, stability_threshold,
};
use crate::error::{Error, Result};
use crate::hypergraph::{KPartiteHypergraph, VertexRef};
use crate::shifting::shift_closure;
use crate::solvers::{
    max_matching, max_matching_with, min_vertex_cover, min_vertex_cover_with, rainbow_matching, BipartiteGraph, Budget,
};

/// Settings shared by all suites.
#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    /// Node budget per solver call; instances that exceed it are skipped.
    pub budget: Budget,
}

/// How a suite chooses its instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sampling {
    Exhaustive,
    Trials(u64),
}

impl Sampling {
    fn describe(self) -> Value {
        match self {
            Sampling::Exhaustive => json!("exhaustive"),
            Sampling::Trials(t) => json!(t),
        }
    }
}

pub(crate) enum Trial {
    Skipped,
    Tested,
    Violation(Value),
}

#[derive(Default)]
pub(crate) struct Tally {
    pub tested: u64,
    pub skipped: u64,
    pub violations: Vec<Value>,
}

impl Tally {
    fn absorb(mut self, report: &mut VerificationReport) {
        report.instances_tested += self.tested;
        report.instances_skipped += self.skipped;
        report.counterexamples.append(&mut self.violations);
    }
}

/// FNV-1a; keeps the random streams of different suites apart.
fn stream_key(label: &str) -> u64 {
    label.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

/// Runs `trials` independent trials in parallel. Trial `t` draws from the
/// stream `(seed ^ key(label), t)`, and results merge in trial order, so the
/// outcome does not depend on the thread count.
pub(crate) fn run_trials<F>(label: &str, trials: u64, seed: u64, f: F) -> Result<Tally>
where
    F: Fn(&mut ChaCha8Rng) -> Result<Trial> + Sync,
{
    let base = seed ^ stream_key(label);
    let outcomes: Vec<Result<Trial>> = (0..trials)
        .into_par_iter()
        .map(|t| f(&mut seeded_rng(base, t)))
        .collect();
    let mut tally = Tally::default();
    for o in outcomes {
        match o {
            Ok(Trial::Tested) => tally.tested += 1,
            Ok(Trial::Skipped) | Err(Error::Budget { .. }) => tally.skipped += 1,
            Ok(Trial::Violation(v)) => {
                tally.tested += 1;
                tally.violations.push(v);
            }
            Err(e) => return Err(e),
        }
    }
    Ok(tally)
}

fn trial(verdict: Verdict, record: impl FnOnce() -> Value) -> Trial {
    match verdict {
        Verdict::OutOfHypothesis => Trial::Skipped,
        Verdict::Holds => Trial::Tested,
        Verdict::Violates => Trial::Violation(record()),
    }
}

fn finish(mut report: VerificationReport, start: Instant) -> VerificationReport {
    report.wall_time = start.elapsed().as_secs_f64();
    report
}

fn asserted(id: &str) -> bool {
    matches!(claim(id).map(|c| c.regime), Some(Regime::Asserted))
}

/// The cyclic perfect-matching decomposition of the complete graph.
pub fn verify_berge(k: usize, n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let total = (n as f64).powi(k as i32);
    if k < 2 || n < 1 || total > 1e6 {
        return Err(Error::BadParams(format!(
            "need k >= 2, n >= 1, n^k <= 10^6 (k={k}, n={n})"
        )));
    }
    let mut r = VerificationReport::new("thm-1.1", 0).param("k", k).param("n", n);
    let verdict = check_berge(k, n)?;
    r.instances_tested = 1;
    if verdict == Verdict::Violates {
        r.counterexamples.push(json!({"claim_id": "thm-1.1", "k": k, "n": n}));
    }
    r.finding("matchings", n.pow(k as u32 - 1));
    r.finding("edges", n.pow(k as u32));
    r.settle(true);
    Ok(finish(r, start))
}

/// Exact check of the extremal construction for k = 3 and every
/// `m+1 <= n <= max_n`: e = threshold − 1, ν = m, τ = m + 1.
pub fn verify_construction_tightness(max_n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut r = VerificationReport::new("hknm-tight", 0)
        .param("k", 3)
        .param("max_n", max_n);
    let mut rows = Vec::new();
    for n in 2..=max_n {
        for m in 1..n {
            let h = extremal_hknm(3, n, m)?;
            let e = h.edge_count();
            r.instances_tested += 1;
            if check_tightness(&h, m)? != Verdict::Holds || e + 1 != stability_threshold(n, m) {
                r.counterexamples.push(graph_record("hknm-tight", &h, json!({"m": m})));
            }
            let nu = max_matching(&h)?.len();
            let tau = min_vertex_cover(&h)?.len();
            rows.push(json!({"n": n, "m": m, "e": e, "threshold": stability_threshold(n, m), "nu": nu, "tau": tau}));
        }
    }
    r.finding("table", rows);
    r.settle(true);
    Ok(finish(r, start))
}

/// Largest intersecting family on `n^3`, by exact clique search over the
/// "shares a vertex" graph of all tuples. Supports n ≤ 3.
pub fn max_intersecting_family(n: usize) -> Result<usize> {
    if n > 3 {
        return Err(Error::TooLarge("clique search supports n <= 3".into()));
    }
    let tuples = legal_tuples(&[n, n, n]);
    let adj: Vec<u32> = tuples
        .iter()
        .map(|a| {
            tuples
                .iter()
                .enumerate()
                .filter(|(_, b)| *b != a && !a.is_disjoint(b))
                .fold(0u32, |m, (j, _)| m | 1 << j)
        })
        .collect();
    fn rec(cand: u32, size: usize, best: &mut usize, adj: &[u32]) {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        if cand == 0 {
            *best = size;
            return;
        }
        let v = cand.trailing_zeros() as usize;
        rec(cand & adj[v], size + 1, best, adj);
        rec(cand & !(1 << v), size, best, adj);
    }
    let mut best = 0;
    let all = if tuples.len() == 32 {
        u32::MAX
    } else {
        (1u32 << tuples.len()) - 1
    };
    rec(all, 0, &mut best, &adj);
    Ok(best)
}

/// e(H) > (m−1)n² ⇒ ν(H) ≥ m on 3-partite graphs with n-vertex classes.
/// Sampled mode draws graphs with exactly (m−1)n² + 1 edges; exhaustive mode
/// (n = 2 only) walks all 256 graphs.
pub fn verify_aharoni_howard(
    n: usize,
    m: usize,
    sampling: Sampling,
    seed: u64,
    opts: Options,
) -> Result<VerificationReport> {
    let start = Instant::now();
    if m < 1 || n < m {
        return Err(Error::BadParams(format!("need n >= m >= 1 (n={n}, m={m})")));
    }
    let id = "thm-1.2";
    let mut r = VerificationReport::new(id, seed)
        .param("k", 3)
        .param("n", n)
        .param("m", m)
        .param("sampling", sampling.describe());
    let e = (m - 1) * n * n + 1;
    let budget = opts.budget;
    let record = |h: &KPartiteHypergraph| graph_record(id, h, json!({"m": m}));
    match sampling {
        Sampling::Trials(t) => {
            run_trials(&format!("{id}/{n}/{m}"), t, seed, |rng| {
                let h = pool::dense_candidate(3, n, m, e, rng);
                Ok(trial(check_aharoni_howard(&h, m, budget)?, || record(&h)))
            })?
            .absorb(&mut r);
        }
        Sampling::Exhaustive => {
            if n > 2 {
                return Err(Error::TooLarge("exhaustive mode supports n = 2".into()));
            }
            let tuples = legal_tuples(&[n, n, n]);
            let mut tally = Tally::default();
            for mask in 0u32..(1 << tuples.len()) {
                let edges = tuples
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, t)| t.clone());
                let h = KPartiteHypergraph::new(3, vec![n; 3], edges)?;
                match trial(check_aharoni_howard(&h, m, budget)?, || record(&h)) {
                    Trial::Skipped => tally.skipped += 1,
                    Trial::Tested => tally.tested += 1,
                    Trial::Violation(v) => {
                        tally.tested += 1;
                        tally.violations.push(v);
                    }
                }
            }
            tally.absorb(&mut r);
        }
    }
    if n <= 3 {
        let best = max_intersecting_family(n)?;
        r.finding("max_intersecting_edges", best);
        if m == 2 && best > n * n {
            r.counterexamples
                .push(json!({"claim_id": id, "max_intersecting_edges": best, "n": n}));
        }
    }
    r.settle(true);
    Ok(finish(r, start))
}

/// Sampled rainbow-matching theorem for `m` graphs on `n + n` vertices, with
/// the tight family as a negative control.
pub fn verify_rainbow_theorem(n: usize, m: usize, trials: u64, seed: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    if m < 1 || n < m || n > 64 {
        return Err(Error::BadParams(format!("need 64 >= n >= m >= 1 (n={n}, m={m})")));
    }
    let id = "thm-2.2";
    let mut r = VerificationReport::new(id, seed)
        .param("n", n)
        .param("m", m)
        .param("trials", trials);
    run_trials(&format!("{id}/{n}/{m}"), trials, seed, |rng| {
        let family = pool::rainbow_family(n, m, rng);
        Ok(trial(check_rainbow_family(&family)?, || family_record(id, &family)))
    })?
    .absorb(&mut r);
    let tight = rainbow_tight_family(n, m)?;
    let blocked = rainbow_matching(&tight)?.is_none();
    r.finding("tight_family_edges_each", (m - 1) * n);
    r.finding("tight_family_blocked", blocked);
    r.settle(true);
    if !blocked {
        r.status = Status::Fail;
    }
    Ok(finish(r, start))
}

/// Two-graph rainbow lemma. Exhaustive mode walks every ordered pair of
/// graphs on `n × n` (n ≤ 3); sampled mode draws pairs meeting the
/// hypotheses. The star-blocked pair at sum exactly 2n is the negative
/// control.
pub fn verify_lemma25(n: usize, sampling: Sampling, seed: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    if n < 2 {
        return Err(Error::BadParams("need n >= 2".into()));
    }
    let id = "lem-2.5";
    let mut r = VerificationReport::new(id, seed)
        .param("n", n)
        .param("sampling", sampling.describe());
    match sampling {
        Sampling::Exhaustive => {
            if n > 3 {
                return Err(Error::TooLarge("exhaustive mode supports n <= 3".into()));
            }
            let graphs: Vec<BipartiteGraph> = (0u64..1 << (n * n))
                .map(|mask| BipartiteGraph::from_mask(n, n, mask))
                .collect();
            let tallies: Vec<Result<Tally>> = graphs
                .par_iter()
                .map(|g1| {
                    let mut t = Tally::default();
                    for g2 in &graphs {
                        match check_rainbow_pair(g1, g2)? {
                            Verdict::OutOfHypothesis => t.skipped += 1,
                            Verdict::Holds => t.tested += 1,
                            Verdict::Violates => {
                                t.tested += 1;
                                t.violations.push(family_record(id, &[g1.clone(), g2.clone()]));
                            }
                        }
                    }
                    Ok(t)
                })
                .collect();
            for t in tallies {
                t?.absorb(&mut r);
            }
        }
        Sampling::Trials(trials) => {
            run_trials(&format!("{id}/{n}"), trials, seed, |rng| {
                use rand::Rng;
                let a = rng.gen_range(1..=n * n);
                let lo = (2 * n + 1).saturating_sub(a).max(1);
                let g1 = pool::random_bipartite(n, a, a, rng);
                let g2 = pool::random_bipartite(n, lo.min(n * n), n * n, rng);
                Ok(trial(check_rainbow_pair(&g1, &g2)?, || {
                    family_record(id, &[g1.clone(), g2.clone()])
                }))
            })?
            .absorb(&mut r);
        }
    }
    let g1 = BipartiteGraph::new(n, n, [(0, 0)])?;
    let g2 = BipartiteGraph::new(
        n,
        n,
        (0..n)
            .flat_map(|i| [(0, i), (i, 0)])
            .collect::<std::collections::BTreeSet<_>>(),
    )?;
    let blocked = rainbow_matching(&[&g1, &g2])?.is_none();
    r.finding("star_blocked_pair_sum", g1.edge_count() + g2.edge_count());
    r.finding("star_blocked_pair_blocked", blocked);
    r.settle(true);
    if !blocked {
        r.status = Status::Fail;
    }
    Ok(finish(r, start))
}

/// Stability of intersecting families on classes of sizes `n1, n2, n3`.
/// Asserted when the smallest class has at least 5 vertices; below that the
/// run is exploratory. The tight family is certified as the boundary.
pub fn verify_intersecting_stability(
    n1: usize,
    n2: usize,
    n3: usize,
    trials: u64,
    seed: u64,
    opts: Options,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let sizes = [n1, n2, n3];
    if sizes.iter().any(|&s| s < 2) {
        return Err(Error::BadParams("class sizes must be at least 2".into()));
    }
    let id = "lem-2.4";
    let in_regime = sizes.iter().all(|&s| s >= 5);
    let min_size = if in_regime { 5 } else { 2 };
    let mut r = VerificationReport::new(id, seed)
        .param("sizes", sizes)
        .param("trials", trials);
    let floor = n1 + n2 + n3 - 1;
    let budget = opts.budget;
    run_trials(&format!("{id}/{n1}/{n2}/{n3}"), trials, seed, |rng| {
        let h = pool::intersecting_candidate(&sizes, floor, rng);
        Ok(trial(check_intersecting(&h, min_size, budget)?, || {
            graph_record(id, &h, json!({"min_size": min_size}))
        }))
    })?
    .absorb(&mut r);
    let tight = lemma24_tight_family(n1, n2, n3)?;
    let tight_nu = max_matching(&tight)?.len();
    let tight_tau = min_vertex_cover(&tight)?.len();
    r.finding(
        "tight_family",
        json!({"e": tight.edge_count(), "nu": tight_nu, "tau": tight_tau, "sum_minus_two": floor - 1}),
    );
    r.settle(in_regime);
    if in_regime && (tight.edge_count() != floor - 1 || tight_nu != 1 || tight_tau != 2) {
        r.status = Status::Fail;
    }
    Ok(finish(r, start))
}

/// Shifting never increases ν and always preserves e.
pub fn verify_shift_monotone(n: usize, e: usize, trials: u64, seed: u64, opts: Options) -> Result<VerificationReport> {
    let start = Instant::now();
    if n < 2 || e > n * n * n {
        return Err(Error::BadParams(format!("need n >= 2 and e <= n^3 (n={n}, e={e})")));
    }
    let id = "lem-2.3";
    let mut r = VerificationReport::new(id, seed)
        .param("n", n)
        .param("e", e)
        .param("trials", trials);
    let budget = opts.budget;
    run_trials(&format!("{id}/{n}/{e}"), trials, seed, |rng| {
        use rand::Rng;
        let h = random_hypergraph_from(3, &[n, n, n], e, rng)?;
        let class = rng.gen_range(0..3);
        let x = rng.gen_range(0..n - 1);
        let y = rng.gen_range(x + 1..n);
        let verdict = check_shift(&h, VertexRef::new(class, x), VertexRef::new(class, y), budget)?;
        Ok(trial(verdict, || graph_record(id, &h, json!({"shift": [class, x, y]}))))
    })?
    .absorb(&mut r);
    let c = complete_uniform(3, n);
    let s = crate::shifting::shift(&c, VertexRef::new(0, 0), VertexRef::new(0, n - 1))?;
    r.finding("complete_graph_fixed", s == c);
    r.settle(true);
    Ok(finish(r, start))
}

/// Stability for partitely shifted 3-partite graphs with n ≥ m+2, m ≥ 2.
/// Candidates are shift-closed before the hypothesis filter.
pub fn verify_shifted_stability(
    n: usize,
    m: usize,
    trials: u64,
    seed: u64,
    opts: Options,
) -> Result<VerificationReport> {
    let start = Instant::now();
    if m < 2 || n < m + 2 {
        return Err(Error::BadParams(format!("need m >= 2 and n >= m+2 (n={n}, m={m})")));
    }
    let id = "lem-3.1";
    let mut r = VerificationReport::new(id, seed)
        .param("n", n)
        .param("m", m)
        .param("trials", trials);
    let floor = stability_threshold(n, m);
    let budget = opts.budget;
    run_trials(&format!("{id}/{n}/{m}"), trials, seed, |rng| {
        let h = shift_closure(&pool::stability_candidate(n, m, floor, rng));
        Ok(trial(check_stability(&h, m, true, budget)?, || {
            graph_record(id, &h, json!({"m": m}))
        }))
    })?
    .absorb(&mut r);
    r.finding("threshold", floor);
    r.settle(true);
    Ok(finish(r, start))
}

/// Shared body of the stability statements whose hypotheses need large n.
/// Half of the candidates are shift-closed. Includes the exact tightness
/// check of `H_3(n, m)` when `n > m`.
fn exploratory_stability(
    id: &str,
    n: usize,
    m: usize,
    trials: u64,
    seed: u64,
    opts: Options,
) -> Result<VerificationReport> {
    let start = Instant::now();
    if m < 1 || n <= m {
        return Err(Error::BadParams(format!("need n > m >= 1 (n={n}, m={m})")));
    }
    let mut r = VerificationReport::new(id, seed)
        .param("n", n)
        .param("m", m)
        .param("trials", trials);
    let floor = stability_threshold(n, m);
    let budget = opts.budget;
    run_trials(&format!("{id}/{n}/{m}"), trials, seed, |rng| {
        use rand::Rng;
        let mut h = pool::stability_candidate(n, m, floor, rng);
        if rng.gen_bool(0.5) {
            h = shift_closure(&h);
        }
        Ok(trial(check_stability(&h, m, false, budget)?, || {
            graph_record(id, &h, json!({"m": m}))
        }))
    })?
    .absorb(&mut r);
    let h = extremal_hknm(3, n, m)?;
    let e = h.edge_count();
    let nu = max_matching_with(&h, budget)?.len();
    let tau = min_vertex_cover_with(&h, budget)?.len();
    let tight = e + 1 == floor && nu == m && tau == m + 1;
    r.finding("threshold", floor);
    r.finding("tightness", json!({"e": e, "nu": nu, "tau": tau, "ok": tight}));
    r.settle(asserted(id));
    if !tight {
        r.status = Status::Fail;
    }
    Ok(finish(r, start))
}

/// Main stability statement at desk scale (exploratory).
pub fn verify_main_stability(n: usize, m: usize, trials: u64, seed: u64, opts: Options) -> Result<VerificationReport> {
    exploratory_stability("thm-1.3", n, m, trials, seed, opts)
}

/// Small-matching stability, hypothesis n ≥ 12m (exploratory).
pub fn verify_small_matching_stability(
    n: usize,
    m: usize,
    trials: u64,
    seed: u64,
    opts: Options,
) -> Result<VerificationReport> {
    if m < 2 {
        return Err(Error::BadParams("need m >= 2".into()));
    }
    exploratory_stability("lem-2.6", n, m, trials, seed, opts)
}

/// Near-perfect stability, m = n − 1, hypothesis n ≥ 162 (exploratory).
pub fn verify_near_perfect_stability(n: usize, trials: u64, seed: u64, opts: Options) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::BadParams("need n >= 2".into()));
    }
    exploratory_stability("lem-3.3", n, n - 1, trials, seed, opts)
}

/// Minimum vertex degree at least 2n²/3 forces a perfect matching.
pub fn verify_daykin_haggkvist(n: usize, trials: u64, seed: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    if n < 1 {
        return Err(Error::BadParams("need n >= 1".into()));
    }
    let id = "thm-3.2";
    let delta = (2 * n * n).div_ceil(3);
    let mut r = VerificationReport::new(id, seed)
        .param("k", 3)
        .param("n", n)
        .param("trials", trials);
    run_trials(&format!("{id}/{n}"), trials, seed, |rng| {
        let h = pool::min_degree_candidate(3, n, delta, rng);
        Ok(trial(check_min_degree_pm(&h)?, || graph_record(id, &h, json!({}))))
    })?
    .absorb(&mut r);
    r.finding("delta_threshold", delta);
    r.finding(
        "complete_graph_has_pm",
        check_min_degree_pm(&complete_uniform(3, n))? == Verdict::Holds,
    );
    r.settle(true);
    Ok(finish(r, start))
}

/// Branch-and-bound solvers against the exhaustive oracles on 3-partite
/// graphs with n-vertex classes. Exhaustive mode (n = 2) walks all 256
/// graphs; sampled mode uses `e` edges, or a random count up to 24.
pub fn solver_cross_check(n: usize, e: Option<usize>, sampling: Sampling, seed: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    let id = "solver-xcheck";
    let mut r = VerificationReport::new(id, seed)
        .param("n", n)
        .param("e", e)
        .param("sampling", sampling.describe());
    let total = n * n * n;
    match sampling {
        Sampling::Exhaustive => {
            if total > 12 {
                return Err(Error::TooLarge("exhaustive mode supports n = 2".into()));
            }
            let tuples = legal_tuples(&[n, n, n]);
            let graphs: Vec<KPartiteHypergraph> = (0u32..1 << total)
                .map(|mask| {
                    let edges = tuples
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, t)| t.clone());
                    KPartiteHypergraph::new(3, vec![n; 3], edges)
                })
                .collect::<Result<_>>()?;
            let verdicts: Vec<Result<Verdict>> = graphs.par_iter().map(check_solvers).collect();
            for (h, v) in graphs.iter().zip(verdicts) {
                match v? {
                    Verdict::Violates => {
                        r.instances_tested += 1;
                        r.counterexamples.push(graph_record(id, h, json!({})));
                    }
                    _ => r.instances_tested += 1,
                }
            }
        }
        Sampling::Trials(trials) => {
            let cap = total.min(crate::solvers::BRUTE_NU_MAX_EDGES);
            if e.is_some_and(|e| e > cap) {
                return Err(Error::TooLarge(format!("at most {cap} edges for the oracles")));
            }
            run_trials(&format!("{id}/{n}"), trials, seed, |rng| {
                use rand::Rng;
                let count = e.unwrap_or_else(|| rng.gen_range(0..=cap));
                let h = random_hypergraph_from(3, &[n, n, n], count, rng)?;
                Ok(trial(check_solvers(&h)?, || graph_record(id, &h, json!({}))))
            })?
            .absorb(&mut r);
        }
    }
    r.settle(true);
    Ok(finish(r, start))
}
