//! Mutual-visibility structure of small simple graphs: visibility
//! polynomials, mutual-visibility numbers, c_Q-visible families,
//! absolute-clearness, and the closed-form visibility polynomial of corona
//! products checked against direct enumeration.
//!
//! Vertices are 0-indexed everywhere. Graphs hold at most 64 vertices;
//! exhaustive routines are additionally bounded by [`Limits`].

pub mod census;
mod cliques;
pub mod corona_formula;
pub mod cq;
mod error;
pub mod graph;
pub mod graph6;
pub mod polynomial;
pub mod vertex_set;
pub mod visibility;

pub use cliques::maximal_cliques;
pub use error::{Error, Graph6Error, Result};
pub use graph::{
    all_pairs_distances, corona, induced_diameter, standard_graph, CoronaLabeling, CoronaPosition,
    DistanceMatrix, Graph, StandardKind,
};
pub use graph6::{encode_graph6, parse_graph6};
pub use polynomial::Polynomial;
pub use vertex_set::VertexSet;

/// Bounds on the exponential routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest graph order accepted by subset enumeration.
    pub max_order: usize,
    /// Largest c_Q family accepted by inclusion–exclusion.
    pub max_family: usize,
}

impl Limits {
    pub const DEFAULT_MAX_ORDER: usize = 24;
    pub const DEFAULT_MAX_FAMILY: usize = 20;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: Self::DEFAULT_MAX_ORDER,
            max_family: Self::DEFAULT_MAX_FAMILY,
        }
    }
}
