use std::fmt;

use affcover_geometry::{CanonLine, CanonPlane, QPoint};

use crate::{Drawing, DrawingError, Result};

/// What a cover has to contain, and with which objects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoverKind {
    LinesForEdges,
    LinesForVertices,
    PlanesForEdges,
    PlanesForVertices,
    /// Vertex cover by pairwise parallel lines.
    ParallelLines,
    /// Vertex cover by pairwise parallel planes.
    ParallelPlanes,
}

impl CoverKind {
    pub fn name(self) -> &'static str {
        match self {
            CoverKind::LinesForEdges => "lines_for_edges",
            CoverKind::LinesForVertices => "lines_for_vertices",
            CoverKind::PlanesForEdges => "planes_for_edges",
            CoverKind::PlanesForVertices => "planes_for_vertices",
            CoverKind::ParallelLines => "parallel_lines",
            CoverKind::ParallelPlanes => "parallel_planes",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    pub const ALL: [CoverKind; 6] = [
        CoverKind::LinesForEdges,
        CoverKind::LinesForVertices,
        CoverKind::PlanesForEdges,
        CoverKind::PlanesForVertices,
        CoverKind::ParallelLines,
        CoverKind::ParallelPlanes,
    ];

    pub fn uses_planes(self) -> bool {
        matches!(self, CoverKind::PlanesForEdges | CoverKind::PlanesForVertices | CoverKind::ParallelPlanes)
    }

    pub fn covers_edges(self) -> bool {
        matches!(self, CoverKind::LinesForEdges | CoverKind::PlanesForEdges)
    }
}

impl fmt::Display for CoverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoverObject {
    Line(CanonLine),
    Plane(CanonPlane),
}

impl CoverObject {
    pub fn contains(&self, p: &QPoint) -> bool {
        match self {
            CoverObject::Line(l) => l.contains(p),
            CoverObject::Plane(h) => h.contains(&p.lift()),
        }
    }
}

/// A set of lines or planes and, for every edge or vertex, the index of the
/// object that contains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverWitness {
    pub kind: CoverKind,
    pub objects: Vec<CoverObject>,
    pub assignment: Vec<usize>,
}

impl CoverWitness {
    pub fn count(&self) -> usize {
        self.objects.len()
    }

    /// Builds a witness by assigning every item to the first object that
    /// contains it; fails if some item is uncovered.
    pub fn assign(kind: CoverKind, objects: Vec<CoverObject>, d: &Drawing) -> Result<Self> {
        let items = items(kind, d);
        let mut assignment = Vec::with_capacity(items.len());
        for (i, pts) in items.iter().enumerate() {
            let j = objects
                .iter()
                .position(|o| pts.iter().all(|p| o.contains(p)))
                .ok_or_else(|| DrawingError::Witness(format!("{} item {i} is not covered", kind)))?;
            assignment.push(j);
        }
        let w = CoverWitness { kind, objects, assignment };
        w.validate(d)?;
        Ok(w)
    }

    /// Checks incidence of every item with its object, that every object is
    /// used, that object types match the kind, and parallelism where required.
    pub fn validate(&self, d: &Drawing) -> Result<()> {
        let bad = |s: String| Err(DrawingError::Witness(s));
        let items = items(self.kind, d);
        if self.assignment.len() != items.len() {
            return bad(format!("{} assignments for {} items", self.assignment.len(), items.len()));
        }
        let mut used = vec![false; self.objects.len()];
        for (i, (&j, pts)) in self.assignment.iter().zip(&items).enumerate() {
            let Some(obj) = self.objects.get(j) else {
                return bad(format!("item {i} assigned to missing object {j}"));
            };
            if !pts.iter().all(|p| obj.contains(p)) {
                return bad(format!("item {i} does not lie on object {j}"));
            }
            used[j] = true;
        }
        if let Some(j) = used.iter().position(|u| !u) {
            return bad(format!("object {j} is unused"));
        }
        for (j, o) in self.objects.iter().enumerate() {
            match o {
                CoverObject::Line(l) if !self.kind.uses_planes() => {
                    if l.dim() != d.dim() {
                        return bad(format!("line {j} has dimension {}", l.dim()));
                    }
                }
                CoverObject::Plane(_) if self.kind.uses_planes() => {}
                _ => return bad(format!("object {j} has the wrong type for {}", self.kind)),
            }
        }
        let parallel = match self.kind {
            CoverKind::ParallelLines => self.objects.windows(2).all(|w| match (&w[0], &w[1]) {
                (CoverObject::Line(a), CoverObject::Line(b)) => a.is_parallel_to(b),
                _ => false,
            }),
            CoverKind::ParallelPlanes => self.objects.windows(2).all(|w| match (&w[0], &w[1]) {
                (CoverObject::Plane(a), CoverObject::Plane(b)) => a.is_parallel_to(b),
                _ => false,
            }),
            _ => true,
        };
        if !parallel {
            return bad("objects are not parallel".into());
        }
        Ok(())
    }
}

fn items(kind: CoverKind, d: &Drawing) -> Vec<Vec<QPoint>> {
    if kind.covers_edges() {
        d.graph().edges().iter().map(|&(u, v)| vec![d.point(u).clone(), d.point(v).clone()]).collect()
    } else {
        d.points().iter().map(|p| vec![p.clone()]).collect()
    }
}
