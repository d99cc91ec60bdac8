//! Exact rational geometry in two and three dimensions.
//!
//! Every predicate here is decided with exact arithmetic. Points carry
//! arbitrary-precision rational coordinates; the hot paths used by drawing
//! verification run on a common integer frame (see [`IntFrame`]) and fall
//! back to big integers when the coordinates are too large for `i128`.

mod canon;
mod frame;
mod point;
mod predicates;

pub use canon::{canon_line, canon_plane, plane_through_line, primitive_direction, CanonLine, CanonPlane};
pub use frame::IntFrame;
pub use point::{q, QPoint};
pub use predicates::{
    classify_segments, collinear, coplanar, cross, in_segment_interior, on_closed_segment, orient, orient2, orient3,
    point_in_triangle_strict, segments_intersect, Scalar, SegmentRelation, P3,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("points do not share a dimension ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("unsupported dimension {0}; only 2 and 3 are handled")]
    UnsupportedDimension(usize),
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("expected {expected} points, got {got}")]
    Arity { expected: &'static str, got: usize },
}

pub type Result<T> = std::result::Result<T, GeometryError>;
