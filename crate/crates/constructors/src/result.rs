use affcover_drawing::{
    edge_line_count, verify_crossing_free, CoverKind, CoverObject, CoverWitness, Drawing, DrawingError, Violation,
};
use affcover_geometry::{canon_line, GeometryError, QPoint};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("{0}")]
    Domain(String),
    #[error("construction is not crossing-free: {0}")]
    Violation(Violation),
    #[error("no crossing-free drawing after {attempts} attempts; last defect: {last}")]
    RetryExhausted { attempts: usize, last: Violation },
    #[error("witness uses {count} objects, above the claimed {claimed}")]
    AboveClaim { count: usize, claimed: usize },
    #[error(transparent)]
    Drawing(#[from] DrawingError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Graph(#[from] affcover_core::GraphError),
    #[error(transparent)]
    Planar(#[from] affcover_planar::PlanarError),
}

impl From<Violation> for ConstructError {
    fn from(v: Violation) -> Self {
        ConstructError::Violation(v)
    }
}

pub type Result<T> = std::result::Result<T, ConstructError>;

/// A verified drawing together with a cover witness certifying
/// `witness.count() <= claimed_bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    pub drawing: Drawing,
    pub witness: CoverWitness,
    pub claimed_bound: usize,
    /// Per-axis extent of the drawing, rounded up to an integer.
    pub box_dims: Vec<BigInt>,
}

impl ConstructionResult {
    /// Verifies `d`, assigns items to `objects`, and checks the claim.
    pub(crate) fn new(d: Drawing, kind: CoverKind, objects: Vec<CoverObject>, claimed: usize) -> Result<Self> {
        let d = verify_crossing_free(d)?;
        let w = CoverWitness::assign(kind, objects, &d)?;
        Self::with_witness(d, w, claimed)
    }

    /// Verifies `d` and uses its edge lines as the witness.
    pub(crate) fn edge_lines(d: Drawing, claimed: usize) -> Result<Self> {
        let d = verify_crossing_free(d)?;
        let (_, w) = edge_line_count(&d)?;
        Self::with_witness(d, w, claimed)
    }

    pub(crate) fn with_witness(d: Drawing, w: CoverWitness, claimed: usize) -> Result<Self> {
        if !d.is_verified() {
            return Err(DrawingError::NotVerified.into());
        }
        w.validate(&d)?;
        if w.count() > claimed {
            return Err(ConstructError::AboveClaim { count: w.count(), claimed });
        }
        let box_dims = d.extent().iter().map(|e| e.ceil().to_integer()).collect();
        Ok(ConstructionResult { drawing: d, witness: w, claimed_bound: claimed, box_dims })
    }
}

pub(crate) fn line(a: &[i64], b: &[i64]) -> CoverObject {
    CoverObject::Line(canon_line(&QPoint::from_ints(a), &QPoint::from_ints(b)).expect("distinct points"))
}
