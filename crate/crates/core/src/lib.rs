//! Exact spectral graph toolkit: graphs on at most 64 vertices, exact
//! characteristic polynomials and eigenvalue multiplicities, induced
//! matchings, and recognizers for the graph families where the bound
//! `m_λ(G) ≤ β′(G) + c(G)` is tight.

pub mod algebra;
pub mod canon;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod matching;
pub mod spectral;

pub use algebra::{AlgebraicNumber, IntPolynomial, Rational};
pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonicalForm};
pub use error::{AlgebraError, FamilyError, GraphError, MatchingError, ParseError, SpectralError};
pub use families::Classification;
pub use graph::{Component, ComponentSplit, Graph, VertexSet};
pub use io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
pub use matching::{induced_matching_number, induced_matching_size, matching_number, matching_size, EdgeSet};
pub use spectral::{find_star_set, multiplicity, spectrum, Eigenstructure, StarSet};
