//! Finite simple undirected graphs with dense vertex indices, the graph
//! families used throughout the workspace, and the structural predicates
//! the solvers and bounds build on.

pub mod families;
mod graph;
pub mod io;
mod structure;

pub use families::{build_family, FamilyKind, FamilySpec};
pub use graph::Graph;
pub use structure::{
    cartesian_product, essential_vertices, is_isomorphic_small, is_linear_forest, linear_forest_order,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {vertex}{}", at(.line))]
    SelfLoop { vertex: usize, line: Option<usize> },
    #[error("duplicate edge {u}-{v}{}", at(.line))]
    DuplicateEdge { u: usize, v: usize, line: Option<usize> },
    #[error("vertex {vertex} out of range for n = {n}{}", at(.line))]
    OutOfRange { vertex: usize, n: usize, line: Option<usize> },
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("invalid parameters: {0}")]
    Domain(String),
}

fn at(line: &Option<usize>) -> String {
    line.map(|l| format!(" (line {l})")).unwrap_or_default()
}

pub type Result<T> = std::result::Result<T, GraphError>;
