//! Drawings as certificates: the exact crossing-free verifier, cover
//! witnesses, and every measurement taken on a verified drawing.

mod drawing;
mod kn;
mod measure;
pub mod setcover;
mod witness;

pub use drawing::{verify_crossing_free, Drawing, Violation};
pub use kn::{kn_structural_checks, StructuralReport, StructuralViolation};
pub use measure::{
    edge_line_count, lemma_ess, min_edge_plane_cover, min_vertex_line_cover, segment_slope_count, CoverBudget,
    CoverResult, EssCheck, SegmentSlope,
};
pub use witness::{CoverKind, CoverObject, CoverWitness};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrawingError {
    #[error("{points} points given for {n} vertices")]
    PointCount { n: usize, points: usize },
    #[error("points mix dimensions {0} and {1}")]
    MixedDimensions(usize, usize),
    #[error("drawing has not passed verification")]
    NotVerified,
    #[error("operation needs a {expected}D drawing, got {got}D")]
    Dimension { expected: usize, got: usize },
    #[error("drawing is not of a complete graph")]
    NotComplete,
    #[error("witness invalid: {0}")]
    Witness(String),
    #[error(transparent)]
    Geometry(#[from] affcover_geometry::GeometryError),
}

pub type Result<T> = std::result::Result<T, DrawingError>;
