//! Concrete hypergraph families and seeded random generators.

use std::collections::BTreeSet;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, KPartiteHypergraph, Matching};
use crate::solvers::BipartiteGraph;

/// All legal tuples over `sizes`, in lexicographic order.
pub fn legal_tuples(sizes: &[usize]) -> Vec<Edge> {
    let total: usize = sizes.iter().product();
    (0..total).map(|id| decode(id, sizes)).collect()
}

/// Mixed-radix decoding with class 0 most significant, so ids follow the
/// lexicographic tuple order.
pub(crate) fn decode(mut id: usize, sizes: &[usize]) -> Edge {
    let mut p = vec![0; sizes.len()];
    for c in (0..sizes.len()).rev() {
        p[c] = id % sizes[c];
        id /= sizes[c];
    }
    Edge::new(p)
}

/// Complete k-partite k-graph on the given class sizes.
pub fn complete(sizes: &[usize]) -> Result<KPartiteHypergraph> {
    if sizes.len() < 2 {
        return Err(Error::BadParams("need at least two classes".into()));
    }
    Ok(KPartiteHypergraph::from_parts(
        sizes.to_vec(),
        legal_tuples(sizes).into_iter().collect(),
    ))
}

/// Complete k-partite k-graph with `n` vertices per class.
pub fn complete_uniform(k: usize, n: usize) -> KPartiteHypergraph {
    complete(&vec![n; k]).expect("k >= 2")
}

/// Closed-form edge count of `H_k(n, m)`:
/// `(m-1)n^{k-1} + (n^{k-1} - (n-1)^{k-1}) + n - m`.
pub fn extremal_edge_count(k: usize, n: usize, m: usize) -> usize {
    let p = |b: usize| b.pow(k as u32 - 1);
    (m - 1) * p(n) + (p(n) - p(n - 1)) + n - m
}

/// The stability threshold `(m-1)n^2 + 3n - m` for 3-partite 3-graphs; one
/// more than `e(H_3(n, m))`.
pub fn stability_threshold(n: usize, m: usize) -> usize {
    (m - 1) * n * n + 3 * n - m
}

/// The extremal hypergraph `H_k(n, m)`.
///
/// Class 0 holds `W_1 = {0, …, m-2}` and `v_1 = m-1`; for `i ≥ 2`, `v_i` is
/// position 0 of class `i-1`. Edges are the legal k-sets meeting `W_1`, or
/// containing `{v_2, …, v_k}`, or containing `v_1` and meeting
/// `{v_2, …, v_k}`. It has ν = m and τ = m+1.
pub fn extremal_hknm(k: usize, n: usize, m: usize) -> Result<KPartiteHypergraph> {
    if k < 3 {
        return Err(Error::BadParams(format!("k must be at least 3, got {k}")));
    }
    if m < 1 || n < m + 1 {
        return Err(Error::BadParams(format!("need n >= m+1 >= 2, got n={n}, m={m}")));
    }
    let v1 = m - 1;
    let edges = legal_tuples(&vec![n; k])
        .into_iter()
        .filter(|e| {
            let in_w1 = e[0] < m - 1;
            let tail_hits = e[1..].iter().filter(|&&p| p == 0).count();
            in_w1 || tail_hits == k - 1 || (e[0] == v1 && tail_hits > 0)
        })
        .collect();
    Ok(KPartiteHypergraph::from_parts(vec![n; k], edges))
}

/// Decomposition of the complete k-partite k-graph on `n`-vertex classes into
/// `n^{k-1}` edge-disjoint perfect matchings. The matching for offsets
/// `(s_2, …, s_k)` holds the edges `(i, i+s_2, …, i+s_k) mod n`.
pub fn berge_decomposition(k: usize, n: usize) -> Result<Vec<Matching>> {
    if k < 2 || n < 1 {
        return Err(Error::BadParams(format!("need k >= 2 and n >= 1, got k={k}, n={n}")));
    }
    let offsets = legal_tuples(&vec![n; k - 1]);
    Ok(offsets
        .iter()
        .map(|s| {
            Matching::new(
                (0..n)
                    .map(|i| {
                        let mut p = Vec::with_capacity(k);
                        p.push(i);
                        p.extend(s.iter().map(|&d| (i + d) % n));
                        Edge::new(p)
                    })
                    .collect(),
            )
        })
        .collect())
}

/// Boundary family for intersecting 3-partite 3-graphs: every legal triple
/// containing at least two of `(u_1, v_2, v_3)` = `(0, 0, 0)`. It has
/// `n_1 + n_2 + n_3 - 2` edges, ν = 1 and τ = 2.
pub fn lemma24_tight_family(n1: usize, n2: usize, n3: usize) -> Result<KPartiteHypergraph> {
    if n1.min(n2).min(n3) < 2 {
        return Err(Error::BadParams("class sizes must be at least 2".into()));
    }
    let sizes = vec![n1, n2, n3];
    let edges = legal_tuples(&sizes)
        .into_iter()
        .filter(|e| e.iter().filter(|&&p| p == 0).count() >= 2)
        .collect();
    Ok(KPartiteHypergraph::from_parts(sizes, edges))
}

/// `m` copies of the graph on `n × n` whose edges are all pairs at left
/// vertices `0..m-1`: each has `(m-1)n` edges and the family has no rainbow
/// matching.
pub fn rainbow_tight_family(n: usize, m: usize) -> Result<Vec<BipartiteGraph>> {
    if m < 1 || n < m {
        return Err(Error::BadParams(format!("need n >= m >= 1, got n={n}, m={m}")));
    }
    let g = BipartiteGraph::new(n, n, (0..m - 1).flat_map(|u| (0..n).map(move |v| (u, v))))?;
    Ok(vec![g; m])
}

/// Deterministic generator for a `(seed, stream)` pair.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniformly random `e`-subset of the legal tuples over `sizes`.
pub fn random_hypergraph(k: usize, sizes: &[usize], e: usize, seed: u64) -> Result<KPartiteHypergraph> {
    random_hypergraph_from(k, sizes, e, &mut seeded_rng(seed, 0))
}

pub fn random_hypergraph_from<R: Rng>(k: usize, sizes: &[usize], e: usize, rng: &mut R) -> Result<KPartiteHypergraph> {
    if sizes.len() != k {
        return Err(Error::BadArity {
            expected: k,
            found: sizes.len(),
        });
    }
    if k < 2 {
        return Err(Error::BadParams("k must be at least 2".into()));
    }
    let total: usize = sizes.iter().product();
    if e > total {
        return Err(Error::Infeasible(format!(
            "{e} edges requested, only {total} legal tuples"
        )));
    }
    let edges: BTreeSet<Edge> = index::sample(rng, total, e)
        .into_iter()
        .map(|id| decode(id, sizes))
        .collect();
    Ok(KPartiteHypergraph::from_parts(sizes.to_vec(), edges))
}

/// Random hypergraph with every vertex degree at least `delta`: repeatedly
/// pick a deficient vertex uniformly and add a uniformly chosen absent edge
/// through it. Usually overshoots `delta` on some vertices.
pub fn random_min_degree(k: usize, n: usize, delta: usize, seed: u64) -> Result<KPartiteHypergraph> {
    random_min_degree_from(k, n, delta, &mut seeded_rng(seed, 0))
}

pub fn random_min_degree_from<R: Rng>(k: usize, n: usize, delta: usize, rng: &mut R) -> Result<KPartiteHypergraph> {
    if k < 2 {
        return Err(Error::BadParams("k must be at least 2".into()));
    }
    let max_degree = n.pow(k as u32 - 1);
    if delta > max_degree {
        return Err(Error::Infeasible(format!(
            "degree {delta} exceeds the maximum {max_degree}"
        )));
    }
    let sizes = vec![n; k];
    let mut edges: BTreeSet<Edge> = BTreeSet::new();
    let mut deg = vec![vec![0usize; n]; k];
    let others = legal_tuples(&vec![n; k - 1]);
    loop {
        let deficient: Vec<(usize, usize)> = (0..k)
            .flat_map(|c| (0..n).map(move |p| (c, p)))
            .filter(|&(c, p)| deg[c][p] < delta)
            .collect();
        if deficient.is_empty() {
            break;
        }
        let (c, p) = deficient[rng.gen_range(0..deficient.len())];
        let missing: Vec<Edge> = others
            .iter()
            .map(|rest| {
                let mut v = rest.positions().to_vec();
                v.insert(c, p);
                Edge::new(v)
            })
            .filter(|e| !edges.contains(e))
            .collect();
        let e = missing[rng.gen_range(0..missing.len())].clone();
        for (cls, &pos) in e.iter().enumerate() {
            deg[cls][pos] += 1;
        }
        edges.insert(e);
    }
    Ok(KPartiteHypergraph::from_parts(sizes, edges))
}
