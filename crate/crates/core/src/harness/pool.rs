//! Instance generators for the suites. Random sampling rarely lands near the
//! extremal configurations, so most pools start from a structured object
//! (covers, stars, the extremal constructions, tight families) and perturb it.

use std::collections::BTreeSet;

use rand::seq::{index, SliceRandom};
use rand::Rng;

use crate::constructions::{
    extremal_hknm, legal_tuples, lemma24_tight_family, random_hypergraph_from, random_min_degree_from,
};
use crate::hypergraph::{Edge, KPartiteHypergraph};
use crate::solvers::{max_matching, BipartiteGraph};

fn from_set(sizes: &[usize], edges: BTreeSet<Edge>) -> KPartiteHypergraph {
    KPartiteHypergraph::from_parts(sizes.to_vec(), edges)
}

/// Random per-class relabelling.
pub(crate) fn relabel<R: Rng>(h: &KPartiteHypergraph, rng: &mut R) -> KPartiteHypergraph {
    let perms: Vec<Vec<usize>> = h
        .sizes()
        .iter()
        .map(|&n| {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(rng);
            p
        })
        .collect();
    let edges = h
        .edges()
        .map(|e| Edge::new(e.iter().enumerate().map(|(c, &p)| perms[c][p]).collect::<Vec<_>>()))
        .collect();
    from_set(h.sizes(), edges)
}

/// Adds `count` uniformly chosen absent tuples (fewer if the graph fills up).
pub(crate) fn add_random_edges<R: Rng>(edges: &mut BTreeSet<Edge>, sizes: &[usize], count: usize, rng: &mut R) {
    let absent: Vec<Edge> = legal_tuples(sizes).into_iter().filter(|e| !edges.contains(e)).collect();
    let count = count.min(absent.len());
    for i in index::sample(rng, absent.len(), count) {
        edges.insert(absent[i].clone());
    }
}

pub(crate) fn remove_random_edges<R: Rng>(edges: &mut BTreeSet<Edge>, count: usize, rng: &mut R) {
    let present: Vec<Edge> = edges.iter().cloned().collect();
    let count = count.min(present.len());
    for i in index::sample(rng, present.len(), count) {
        edges.remove(&present[i]);
    }
}

/// Random `count`-subset of `edges`.
fn random_subset<R: Rng>(edges: &[Edge], count: usize, rng: &mut R) -> BTreeSet<Edge> {
    index::sample(rng, edges.len(), count.min(edges.len()))
        .into_iter()
        .map(|i| edges[i].clone())
        .collect()
}

/// Candidates for the stability statements on `n^3` with matching number `m`
/// and edge floor `floor`. Draws from four shapes:
///
/// 0. a random subfamily (at least `floor` edges) of all edges meeting a
///    random `m`-set, plus up to two edges avoiding it;
/// 1. a relabelled `H_3(n, m)` with a few edges added and fewer removed;
/// 2. a greedily grown maximal family with matching number at most `m`;
/// 3. all edges meeting a random `(m-1)`-set together with a relabelled
///    intersecting tight family on the rest, topped up with random edges.
pub(crate) fn stability_candidate<R: Rng>(n: usize, m: usize, floor: usize, rng: &mut R) -> KPartiteHypergraph {
    let sizes = [n, n, n];
    let all = legal_tuples(&sizes);
    match rng.gen_range(0..4) {
        0 => {
            let cover = random_vertex_set(&sizes, m, rng);
            let (hit, miss): (Vec<Edge>, Vec<Edge>) =
                all.into_iter().partition(|e| cover.iter().any(|&(c, p)| e[c] == p));
            let lo = floor.min(hit.len());
            let count = rng.gen_range(lo..=hit.len());
            let mut edges = random_subset(&hit, count, rng);
            let extra = rng.gen_range(0..=2);
            edges.extend(random_subset(&miss, extra, rng));
            from_set(&sizes, edges)
        }
        1 => {
            let base = relabel(&extremal_hknm(3, n, m).expect("n > m"), rng);
            let mut edges = base.edge_set().clone();
            let add = rng.gen_range(1..=3);
            let remove = rng.gen_range(0..add);
            add_random_edges(&mut edges, &sizes, add, rng);
            remove_random_edges(&mut edges, remove, rng);
            from_set(&sizes, edges)
        }
        2 => grow_bounded_matching(&sizes, m, rng),
        _ => {
            let cover = random_vertex_set(&sizes, m - 1, rng);
            let hits = |e: &Edge| cover.iter().any(|&(c, p)| e[c] == p);
            let mut edges: BTreeSet<Edge> = all.iter().filter(|e| hits(e)).cloned().collect();
            // Intersecting tight family on the remaining vertices.
            let rest: Vec<Vec<usize>> = (0..3)
                .map(|c| (0..n).filter(|&p| !cover.contains(&(c, p))).collect())
                .collect();
            if rest.iter().all(|r| r.len() >= 2) {
                let tight = relabel(
                    &lemma24_tight_family(rest[0].len(), rest[1].len(), rest[2].len()).expect("sizes >= 2"),
                    rng,
                );
                edges.extend(
                    tight
                        .edges()
                        .map(|e| Edge::new((0..3).map(|c| rest[c][e[c]]).collect::<Vec<_>>())),
                );
            }
            let deficit = floor.saturating_sub(edges.len());
            let extra = deficit + rng.gen_range(0..=1);
            add_random_edges(&mut edges, &sizes, extra, rng);
            from_set(&sizes, edges)
        }
    }
}

/// `count` distinct random vertices as `(class, position)`.
fn random_vertex_set<R: Rng>(sizes: &[usize], count: usize, rng: &mut R) -> Vec<(usize, usize)> {
    let all: Vec<(usize, usize)> = sizes
        .iter()
        .enumerate()
        .flat_map(|(c, &n)| (0..n).map(move |p| (c, p)))
        .collect();
    index::sample(rng, all.len(), count.min(all.len()))
        .into_iter()
        .map(|i| all[i])
        .collect()
}

/// Adds tuples in random order, keeping each one whose addition leaves the
/// matching number at most `m`. Optionally seeded with a random star.
pub(crate) fn grow_bounded_matching<R: Rng>(sizes: &[usize], m: usize, rng: &mut R) -> KPartiteHypergraph {
    let mut order = legal_tuples(sizes);
    order.shuffle(rng);
    let mut h = KPartiteHypergraph::empty(sizes.to_vec()).expect("valid sizes");
    for e in order {
        let g = h.with_edge(e).expect("fresh tuple");
        if max_matching(&g).expect("solver size").len() <= m {
            h = g;
        }
    }
    h
}

/// Intersecting 3-partite families on the given class sizes:
///
/// 0. greedy maximal intersecting family from a random order;
/// 1. a random partial star grown greedily to a maximal intersecting family;
/// 2. a random subfamily of a star with at least `floor` edges;
/// 3. a relabelled tight family with one random tuple added.
pub(crate) fn intersecting_candidate<R: Rng>(sizes: &[usize], floor: usize, rng: &mut R) -> KPartiteHypergraph {
    let all = legal_tuples(sizes);
    let grow = |start: BTreeSet<Edge>, rng: &mut R| {
        let mut order = all.clone();
        order.shuffle(rng);
        let mut edges: Vec<Edge> = start.into_iter().collect();
        for e in order {
            if !edges.contains(&e) && edges.iter().all(|f| !f.is_disjoint(&e)) {
                edges.push(e);
            }
        }
        from_set(sizes, edges.into_iter().collect())
    };
    match rng.gen_range(0..4) {
        0 => grow(BTreeSet::new(), rng),
        1 => {
            let class = rng.gen_range(0..3);
            let pos = rng.gen_range(0..sizes[class]);
            let star: Vec<Edge> = all.iter().filter(|e| e[class] == pos).cloned().collect();
            let r = rng.gen_range(1..=star.len());
            let seed = random_subset(&star, r, rng);
            grow(seed, rng)
        }
        2 => {
            let class = rng.gen_range(0..3);
            let pos = rng.gen_range(0..sizes[class]);
            let star: Vec<Edge> = all.iter().filter(|e| e[class] == pos).cloned().collect();
            let lo = floor.min(star.len());
            let r = rng.gen_range(lo..=star.len());
            from_set(sizes, random_subset(&star, r, rng))
        }
        _ => {
            let t = relabel(
                &lemma24_tight_family(sizes[0], sizes[1], sizes[2]).expect("sizes >= 2"),
                rng,
            );
            let mut edges = t.edge_set().clone();
            add_random_edges(&mut edges, sizes, 1, rng);
            from_set(sizes, edges)
        }
    }
}

/// Random hypergraph with exactly `e` edges for the Aharoni–Howard bound:
/// half uniform, half "all edges at `m-1` fixed class-0 vertices" with random
/// completions, both relabelled.
pub(crate) fn dense_candidate<R: Rng>(k: usize, n: usize, m: usize, e: usize, rng: &mut R) -> KPartiteHypergraph {
    let sizes = vec![n; k];
    if rng.gen_bool(0.5) || m < 2 {
        return random_hypergraph_from(k, &sizes, e, rng).expect("e within range");
    }
    let mut edges: BTreeSet<Edge> = legal_tuples(&sizes).into_iter().filter(|t| t[0] < m - 1).collect();
    let missing = e.saturating_sub(edges.len());
    add_random_edges(&mut edges, &sizes, missing, rng);
    relabel(&from_set(&sizes, edges), rng)
}

/// Minimum-degree instances: a random graph with δ_1 ≥ `delta`, optionally
/// thinned to an edge-minimal one at that floor.
pub(crate) fn min_degree_candidate<R: Rng>(k: usize, n: usize, delta: usize, rng: &mut R) -> KPartiteHypergraph {
    let top = n.pow(k as u32 - 1);
    let target = rng.gen_range(delta..=(delta + 2).min(top));
    let h = random_min_degree_from(k, n, target, rng).expect("delta feasible");
    if rng.gen_bool(0.5) {
        return h;
    }
    let mut deg = h.vertex_degrees();
    let mut edges: Vec<Edge> = h.edges().cloned().collect();
    edges.shuffle(rng);
    let mut keep = BTreeSet::new();
    for e in edges {
        if e.iter().enumerate().all(|(c, &p)| deg[c][p] > delta) {
            for (c, &p) in e.iter().enumerate() {
                deg[c][p] -= 1;
            }
        } else {
            keep.insert(e);
        }
    }
    from_set(&vec![n; k], keep)
}

/// Random bipartite graph on `n × n` with edge count in `lo..=hi`.
pub(crate) fn random_bipartite<R: Rng>(n: usize, lo: usize, hi: usize, rng: &mut R) -> BipartiteGraph {
    let count = rng.gen_range(lo..=hi);
    let pairs = index::sample(rng, n * n, count).into_iter().map(|i| (i / n, i % n));
    BipartiteGraph::new(n, n, pairs).expect("distinct in-range pairs")
}

/// Rainbow-theorem family: `m` graphs each with more than `(m-1)n` edges,
/// either uniform or the blocked star graph plus one random edge.
pub(crate) fn rainbow_family<R: Rng>(n: usize, m: usize, rng: &mut R) -> Vec<BipartiteGraph> {
    let floor = (m - 1) * n + 1;
    (0..m)
        .map(|_| {
            if rng.gen_bool(0.5) {
                random_bipartite(n, floor, n * n, rng)
            } else {
                let blocked: Vec<(usize, usize)> = (0..m - 1).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
                let free: Vec<(usize, usize)> = (m - 1..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
                let extra = free[rng.gen_range(0..free.len())];
                let rows: Vec<usize> = {
                    let mut r: Vec<usize> = (0..n).collect();
                    r.shuffle(rng);
                    r
                };
                let cols: Vec<usize> = {
                    let mut c: Vec<usize> = (0..n).collect();
                    c.shuffle(rng);
                    c
                };
                BipartiteGraph::new(
                    n,
                    n,
                    blocked
                        .into_iter()
                        .chain(std::iter::once(extra))
                        .map(|(u, v)| (rows[u], cols[v])),
                )
                .expect("distinct pairs")
            }
        })
        .collect()
}
