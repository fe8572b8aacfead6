//! Brute-force oracles, random instances, the graph file format and the
//! verification sweeps behind the CLI.

pub mod io;
pub mod oracles;
pub mod random;
pub mod verify;

use crate::graph::{Graph, Weights};

pub use io::{parse_instance, write_instance};
pub use oracles::{brute_pmcs_by_definition, brute_tw_subgraph, BRUTE_PMC_LIMIT, BRUTE_SUBSET_LIMIT};
pub use random::{random_bounded_treewidth_subset, random_class_c_graph, random_graph, random_hereditary_graph, random_long_hole_free_graph, random_p5_free_graph};
pub use verify::{verify, Suite, VerifyOptions, VerifyReport};

/// A weighted graph with a label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance<W> {
    pub graph: Graph,
    pub weights: Weights<W>,
    pub name: String,
}

impl Instance<u64> {
    /// Unit weights.
    pub fn unweighted(graph: Graph, name: impl Into<String>) -> Self {
        let weights = Weights::unit(graph.n());
        Instance {
            graph,
            weights,
            name: name.into(),
        }
    }
}
