//! Exhaustive reference answers for cross-checking the branch-and-bound
//! solvers. No pruning, no shared code with the search routines.

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, KPartiteHypergraph, VertexRef};

pub const BRUTE_NU_MAX_EDGES: usize = 24;
pub const BRUTE_TAU_MAX_VERTICES: usize = 18;

/// ν(H) by enumerating every matching.
pub fn brute_nu(h: &KPartiteHypergraph) -> Result<usize> {
    if h.edge_count() > BRUTE_NU_MAX_EDGES {
        return Err(Error::TooLarge(format!(
            "brute_nu handles at most {BRUTE_NU_MAX_EDGES} edges"
        )));
    }
    // `candidates` holds the edges disjoint from everything taken so far.
    fn rec(candidates: &[&Edge], taken: usize, best: &mut usize) {
        *best = (*best).max(taken);
        let Some((first, rest)) = candidates.split_first() else {
            return;
        };
        rec(rest, taken, best);
        let keep: Vec<&Edge> = rest.iter().copied().filter(|e| e.is_disjoint(first)).collect();
        rec(&keep, taken + 1, best);
    }
    let edges: Vec<&Edge> = h.edges().collect();
    let mut best = 0;
    rec(&edges, 0, &mut best);
    Ok(best)
}

/// τ(H) by checking every vertex subset.
pub fn brute_tau(h: &KPartiteHypergraph) -> Result<usize> {
    let nv = h.vertex_count();
    if nv > BRUTE_TAU_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "brute_tau handles at most {BRUTE_TAU_MAX_VERTICES} vertices"
        )));
    }
    let vertices: Vec<VertexRef> = h.vertices().collect();
    let edge_sets: Vec<u32> = h
        .edges()
        .map(|e| {
            vertices
                .iter()
                .enumerate()
                .filter(|(_, v)| e.contains(**v))
                .fold(0u32, |m, (i, _)| m | 1 << i)
        })
        .collect();
    let mut best = nv;
    for subset in 0u32..(1u32 << nv) {
        let size = subset.count_ones() as usize;
        if size < best && edge_sets.iter().all(|&e| e & subset != 0) {
            best = size;
        }
    }
    Ok(best)
}
