use std::collections::{BTreeSet, HashSet};
use std::time::Instant;

use rand::Rng;
use serde_json::json;

use super::claims::graph_record;
use super::pool::relabel;
use super::report::VerificationReport;
use super::suites::Options;
use crate::constructions::{extremal_edge_count, extremal_hknm, legal_tuples, seeded_rng};
use crate::error::{Error, Result};
use crate::hypergraph::{Edge, KPartiteHypergraph};
use crate::solvers::{max_matching_with, min_vertex_cover_with};

/// Archived candidates are capped at this many distinct graphs.
pub const ARCHIVE_LIMIT: usize = 32;

const START_TEMP: f64 = 2.0;
const END_TEMP: f64 = 0.05;
/// Score deduction for states whose cover number is already m.
const COVERED_PENALTY: f64 = 3.0;

struct State {
    edges: BTreeSet<Edge>,
    tau: usize,
}

impl State {
    fn score(&self, m: usize) -> f64 {
        self.edges.len() as f64 - if self.tau > m { 0.0 } else { COVERED_PENALTY }
    }
}

/// Annealed local search for k-partite graphs with ν = m, τ > m and more
/// edges than `H_k(n, m)`. Starts from a relabelled `H_k(n, m)`; each of the
/// `budget` steps proposes adding, removing or swapping an edge and rejects
/// any proposal whose matching number is not m. Always EXPLORATORY.
pub fn conjecture_search(
    k: usize,
    n: usize,
    m: usize,
    budget: u64,
    seed: u64,
    opts: Options,
) -> Result<VerificationReport> {
    let start = Instant::now();
    if k < 3 || m < 1 || n <= m || (n as f64).powi(k as i32) > 4096.0 {
        return Err(Error::BadParams(format!(
            "need k >= 3, n > m >= 1, n^k <= 4096 (k={k}, n={n}, m={m})"
        )));
    }
    let id = "conj-1.4";
    let mut r = VerificationReport::new(id, seed)
        .param("k", k)
        .param("n", n)
        .param("m", m)
        .param("budget", budget);
    let sizes = vec![n; k];
    let target = extremal_edge_count(k, n, m) + 1;
    let base = extremal_hknm(k, n, m)?;
    let base_nu = max_matching_with(&base, opts.budget)?.len();
    let base_tau = min_vertex_cover_with(&base, opts.budget)?.len();
    r.finding("start", json!({"e": base.edge_count(), "nu": base_nu, "tau": base_tau}));
    r.finding("target_edges", target);

    let mut rng = seeded_rng(seed, 0x636f_6e6a);
    let all = legal_tuples(&sizes);
    let start_graph = relabel(&base, &mut rng);
    let mut cur = State {
        edges: start_graph.edge_set().clone(),
        tau: base_tau,
    };
    let mut archived: HashSet<Vec<Edge>> = HashSet::new();
    let mut best_e: Option<usize> = None;
    let mut accepted = 0u64;

    for step in 0..budget {
        let frac = step as f64 / budget.max(1) as f64;
        let temp = START_TEMP * (END_TEMP / START_TEMP).powf(frac);
        let mut next = cur.edges.clone();
        let absent = |set: &BTreeSet<Edge>, rng: &mut rand_chacha::ChaCha8Rng| {
            let free: Vec<&Edge> = all.iter().filter(|e| !set.contains(*e)).collect();
            (!free.is_empty()).then(|| free[rng.gen_range(0..free.len())].clone())
        };
        let present = |set: &BTreeSet<Edge>, rng: &mut rand_chacha::ChaCha8Rng| {
            (!set.is_empty()).then(|| set.iter().nth(rng.gen_range(0..set.len())).cloned().unwrap())
        };
        match rng.gen_range(0..5) {
            0 | 1 => {
                if let Some(e) = absent(&next, &mut rng) {
                    next.insert(e);
                }
            }
            2 => {
                if let Some(e) = present(&next, &mut rng) {
                    next.remove(&e);
                }
            }
            _ => {
                if let (Some(out), Some(inn)) = (present(&next, &mut rng), absent(&next, &mut rng)) {
                    next.remove(&out);
                    next.insert(inn);
                }
            }
        }
        let h = KPartiteHypergraph::from_parts(sizes.clone(), next);
        let nu = match max_matching_with(&h, opts.budget) {
            Ok(mm) => mm.len(),
            Err(Error::Budget { .. }) => {
                r.instances_skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        if nu != m {
            r.instances_skipped += 1;
            continue;
        }
        let tau = match min_vertex_cover_with(&h, opts.budget) {
            Ok(c) => c.len(),
            Err(Error::Budget { .. }) => {
                r.instances_skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        if h.edge_count() >= target {
            r.instances_tested += 1;
            if tau > m {
                best_e = best_e.max(Some(h.edge_count()));
                let key: Vec<Edge> = h.edges().cloned().collect();
                if archived.len() < ARCHIVE_LIMIT && archived.insert(key) {
                    r.counterexamples
                        .push(graph_record(id, &h, json!({"m": m, "tau": tau})));
                }
            }
        } else {
            r.instances_skipped += 1;
        }
        let cand = State {
            edges: h.edge_set().clone(),
            tau,
        };
        let delta = cand.score(m) - cur.score(m);
        if delta >= 0.0 || rng.gen::<f64>() < (delta / temp).exp() {
            cur = cand;
            accepted += 1;
        }
    }
    r.finding("accepted_moves", accepted);
    r.finding("best_violating_edges", best_e);
    r.settle(false);
    r.wall_time = start.elapsed().as_secs_f64();
    Ok(r)
}
