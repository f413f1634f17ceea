//! Exact tools for k-partite k-graphs: matching and cover solvers, shifting,
//! extremal constructions, link-graph analysis and claim verification suites.

pub mod constructions;
pub mod error;
pub mod harness;
pub mod hypergraph;
pub mod links;
pub mod shifting;
pub mod solvers;

pub use error::{Error, Result};
pub use hypergraph::{Edge, HypergraphJson, KPartiteHypergraph, LegalSet, Matching, VertexCover, VertexRef};
