use affcover_geometry::{point_in_triangle_strict, IntFrame, Scalar, P3};

use crate::witness::{CoverKind, CoverObject, CoverWitness};
use crate::{Drawing, DrawingError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructuralViolation {
    /// Four vertices on one plane, none inside the triangle of the others.
    ConvexFour {
        plane: usize,
        vertices: Vec<usize>,
    },
    TooManyOnPlane {
        plane: usize,
        vertices: Vec<usize>,
    },
    /// Two planes with four vertices each share three of them.
    SharedTriple {
        planes: (usize, usize),
        vertices: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralReport {
    /// Vertices lying on each witness plane, ascending.
    pub plane_vertices: Vec<Vec<usize>>,
    pub violations: Vec<StructuralViolation>,
}

impl StructuralReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn some_inside<T: Scalar>(p: &[P3<T>], vs: &[usize]) -> bool {
    (0..4).any(|i| {
        let o: Vec<usize> = (0..4).filter(|&j| j != i).map(|j| vs[j]).collect();
        point_in_triangle_strict(&p[o[0]], &p[o[1]], &p[o[2]], &p[vs[i]])
    })
}

/// Checks the shape of the vertex sets a plane cover of a drawn complete
/// graph can put on one plane: at most four vertices, four only as a
/// triangle with a point inside, and no three shared by two such planes.
pub fn kn_structural_checks(d: &Drawing, w: &CoverWitness) -> Result<StructuralReport> {
    d.require_verified()?;
    if !d.graph().is_complete() {
        return Err(DrawingError::NotComplete);
    }
    if w.kind != CoverKind::PlanesForEdges {
        return Err(DrawingError::Witness(format!("expected planes_for_edges, got {}", w.kind)));
    }
    w.validate(d)?;
    let d3 = d.lifted();
    let plane_vertices: Vec<Vec<usize>> = w
        .objects
        .iter()
        .map(|o| match o {
            CoverObject::Plane(h) => (0..d3.graph().n()).filter(|&v| h.contains(d3.point(v))).collect(),
            CoverObject::Line(_) => unreachable!("validated as planes"),
        })
        .collect();
    let frame = IntFrame::new(d3.points());
    let mut violations = Vec::new();
    for (j, vs) in plane_vertices.iter().enumerate() {
        if vs.len() >= 5 {
            violations.push(StructuralViolation::TooManyOnPlane { plane: j, vertices: vs.clone() });
        } else if vs.len() == 4 {
            let inside = match &frame {
                IntFrame::Small(p) => some_inside(p, vs),
                IntFrame::Big(p) => some_inside(p, vs),
            };
            if !inside {
                violations.push(StructuralViolation::ConvexFour { plane: j, vertices: vs.clone() });
            }
        }
    }
    for a in 0..plane_vertices.len() {
        for b in a + 1..plane_vertices.len() {
            let (va, vb) = (&plane_vertices[a], &plane_vertices[b]);
            if va.len() != 4 || vb.len() != 4 {
                continue;
            }
            let common: Vec<usize> = va.iter().copied().filter(|v| vb.contains(v)).collect();
            if common.len() >= 3 {
                violations.push(StructuralViolation::SharedTriple { planes: (a, b), vertices: common });
            }
        }
    }
    Ok(StructuralReport { plane_vertices, violations })
}
