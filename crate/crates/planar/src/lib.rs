//! The planar substrate: embeddings, straight-line grid drawings, dual
//! circumference bounds for triangulations and track assignments.

mod dual;
mod embedding;
mod grid;
mod tracks;

pub use dual::{dual_circumference_bound, DualBound};
pub use embedding::{is_planar, planarity_test, PlaneEmbedding};
pub use grid::{grid_drawing, grid_extent};
pub use tracks::{tree_tracks, TrackAssignment};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarError {
    #[error("graph is not planar")]
    NonPlanar,
    #[error("not a triangulation: {0}")]
    NotATriangulation(String),
    #[error("not a tree")]
    NotATree,
    #[error("invalid track assignment: {0}")]
    InvalidTracks(String),
}

pub type Result<T> = std::result::Result<T, PlanarError>;
