//! Exact solvers for ν and τ, bipartite matching with König covers, rainbow
//! matchings of bipartite families, and brute-force oracles.

mod bipartite;
mod cover;
mod matching;
mod oracle;
mod packed;

pub use bipartite::{
    bipartite_max_matching, bipartite_min_cover, rainbow_matching, BipartiteCover, BipartiteGraph, BipartiteMatching,
    RainbowAssignment,
};
pub use cover::{min_vertex_cover, min_vertex_cover_with};
pub use matching::{max_matching, max_matching_with, perfect_matching};
pub use oracle::{brute_nu, brute_tau, BRUTE_NU_MAX_EDGES, BRUTE_TAU_MAX_VERTICES};

/// Search limits shared by the exponential solvers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of search nodes; `None` for unlimited.
    pub node_limit: Option<u64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { node_limit: None };

    pub fn nodes(limit: u64) -> Self {
        Self {
            node_limit: Some(limit),
        }
    }
}
