//! Exact maximum-weight induced subgraphs of bounded treewidth through
//! containers for potential maximal cliques.
//!
//! The solvers are exact on every input when given all PMCs, and on
//! graphs with no hole of length at least six and no extended C5 when
//! given the polynomial container family.

pub mod dp;
pub mod error;
pub mod graph;
pub mod harness;
pub mod minsep;
pub mod pmc_containers;
pub mod recognition;
pub mod sep_containers;

pub use dp::{solve_fvs, solve_mwis, solve_tw_subgraph, solve_with_containers, Strategy};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, Weight, Weights, MAX_VERTICES};

/// Weights with the default scalar.
pub type WeightMap = Weights<u64>;

/// Instance with the default scalar.
pub type WeightedGraph = harness::Instance<u64>;
