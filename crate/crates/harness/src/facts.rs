//! Per-graph invariants shared by several checks, computed on first use.

use std::sync::OnceLock;

use eigmatch_core::matching::{induced_matching_size, matching_size};
use eigmatch_core::spectral::Eigenstructure;
use eigmatch_core::{emit_graph6, AlgebraicNumber, Graph};

pub struct GraphFacts {
    pub graph: Graph,
    pub graph6: String,
    pub connected: bool,
    /// `None` for disconnected graphs.
    pub diameter: Option<usize>,
    pub cyclomatic: usize,
    beta: OnceLock<usize>,
    beta_prime: OnceLock<usize>,
    eig: OnceLock<Eigenstructure>,
    nonzero: OnceLock<Vec<(AlgebraicNumber, usize)>>,
}

impl GraphFacts {
    pub fn new(graph: Graph) -> Self {
        let graph6 = emit_graph6(&graph).unwrap_or_else(|_| format!("{:?}", graph.edges()));
        let connected = graph.order() > 0 && graph.is_connected();
        let diameter = graph.diameter().ok();
        let cyclomatic = graph.cyclomatic_number();
        GraphFacts {
            graph,
            graph6,
            connected,
            diameter,
            cyclomatic,
            beta: OnceLock::new(),
            beta_prime: OnceLock::new(),
            eig: OnceLock::new(),
            nonzero: OnceLock::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn is_tree(&self) -> bool {
        self.connected && self.graph.is_tree()
    }

    /// β(G).
    pub fn beta(&self) -> usize {
        *self.beta.get_or_init(|| matching_size(&self.graph))
    }

    /// β′(G).
    pub fn beta_prime(&self) -> usize {
        *self.beta_prime.get_or_init(|| induced_matching_size(&self.graph))
    }

    pub fn eig(&self) -> &Eigenstructure {
        self.eig.get_or_init(|| Eigenstructure::new(&self.graph))
    }

    /// Distinct nonzero eigenvalues with multiplicities, ascending.
    pub fn nonzero(&self) -> &[(AlgebraicNumber, usize)] {
        self.nonzero.get_or_init(|| self.eig().nonzero_eigenvalues())
    }
}
