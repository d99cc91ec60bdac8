use std::fmt;

use affcover_core::Graph;
use affcover_geometry::{classify_segments, in_segment_interior, IntFrame, QPoint, Scalar, SegmentRelation, P3};

use crate::{DrawingError, Result};

/// Vertex positions for a graph, all in the plane or all in space.
///
/// The `verified` flag is only ever set by [`verify_crossing_free`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawing {
    graph: Graph,
    points: Vec<QPoint>,
    meta: String,
    verified: bool,
}

impl Drawing {
    pub fn new(graph: Graph, points: Vec<QPoint>, meta: impl Into<String>) -> Result<Self> {
        if points.len() != graph.n() {
            return Err(DrawingError::PointCount { n: graph.n(), points: points.len() });
        }
        if let Some(p) = points.first() {
            if let Some(q) = points.iter().find(|q| q.dim() != p.dim()) {
                return Err(DrawingError::MixedDimensions(p.dim(), q.dim()));
            }
        }
        Ok(Drawing { graph, points, meta: meta.into(), verified: false })
    }

    /// Integer coordinates, two or three per vertex.
    pub fn from_ints(graph: Graph, coords: &[Vec<i64>], meta: impl Into<String>) -> Result<Self> {
        let points = coords.iter().map(|c| QPoint::from_ints(c)).collect();
        Drawing::new(graph, points, meta)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn points(&self) -> &[QPoint] {
        &self.points
    }

    pub fn point(&self, v: usize) -> &QPoint {
        &self.points[v]
    }

    /// 2 or 3; an empty drawing counts as planar.
    pub fn dim(&self) -> usize {
        self.points.first().map_or(2, QPoint::dim)
    }

    pub fn meta(&self) -> &str {
        &self.meta
    }

    pub fn with_meta(mut self, meta: impl Into<String>) -> Self {
        self.meta = meta.into();
        self
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub(crate) fn require_verified(&self) -> Result<()> {
        if self.verified {
            Ok(())
        } else {
            Err(DrawingError::NotVerified)
        }
    }

    /// The same drawing in space, planar points moved to `z = 0`.
    /// Lifting keeps a verified drawing verified.
    pub fn lifted(&self) -> Drawing {
        Drawing {
            graph: self.graph.clone(),
            points: self.points.iter().map(QPoint::lift).collect(),
            meta: self.meta.clone(),
            verified: self.verified,
        }
    }

    /// Per-axis `max - min` over all points.
    pub fn extent(&self) -> Vec<num_rational::BigRational> {
        let d = self.dim();
        (0..d)
            .map(|i| {
                let cs = self.points.iter().map(|p| p.coord(i));
                match (cs.clone().min(), cs.max()) {
                    (Some(lo), Some(hi)) => hi - lo,
                    _ => num_rational::BigRational::from_integer(0.into()),
                }
            })
            .collect()
    }
}

/// The first defect found, in a fixed order: coincident vertices, then a
/// vertex inside an edge (by edge index, then vertex), then a bad pair of
/// edges (lexicographic in edge indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    CoincidentVertices(usize, usize),
    VertexOnEdge { vertex: usize, edge: (usize, usize) },
    EdgesMeet { first: (usize, usize), second: (usize, usize) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CoincidentVertices(u, v) => write!(f, "vertices {u} and {v} coincide"),
            Violation::VertexOnEdge { vertex, edge } => {
                write!(f, "vertex {vertex} lies inside edge {}-{}", edge.0, edge.1)
            }
            Violation::EdgesMeet { first, second } => {
                write!(f, "edges {}-{} and {}-{} cross", first.0, first.1, second.0, second.1)
            }
        }
    }
}

impl std::error::Error for Violation {}

fn bbox_overlap<T: Scalar>(a: &P3<T>, b: &P3<T>, c: &P3<T>, d: &P3<T>) -> bool {
    (0..3).all(|i| {
        let (lo1, hi1) = if a[i] <= b[i] { (&a[i], &b[i]) } else { (&b[i], &a[i]) };
        let (lo2, hi2) = if c[i] <= d[i] { (&c[i], &d[i]) } else { (&d[i], &c[i]) };
        lo1 <= hi2 && lo2 <= hi1
    })
}

fn first_violation<T: Scalar>(g: &Graph, p: &[P3<T>]) -> Option<Violation> {
    let mut idx: Vec<usize> = (0..p.len()).collect();
    idx.sort_by(|&a, &b| p[a].cmp(&p[b]).then(a.cmp(&b)));
    let coincident = idx.windows(2).filter(|w| p[w[0]] == p[w[1]]).map(|w| (w[0], w[1])).min();
    if let Some((u, v)) = coincident {
        return Some(Violation::CoincidentVertices(u, v));
    }
    let edges = g.edges();
    for &(a, b) in edges {
        for v in 0..p.len() {
            if v != a && v != b && in_segment_interior(&p[a], &p[b], &p[v]) {
                return Some(Violation::VertexOnEdge { vertex: v, edge: (a, b) });
            }
        }
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if !bbox_overlap(&p[a], &p[b], &p[c], &p[d]) {
                continue;
            }
            let rel = classify_segments(&p[a], &p[b], &p[c], &p[d]).expect("distinct endpoints");
            let shared = a == c || a == d || b == c || b == d;
            let ok = match rel {
                SegmentRelation::Disjoint => !shared,
                SegmentRelation::SharedEndpointOnly => shared,
                SegmentRelation::Crossing => false,
            };
            if !ok {
                return Some(Violation::EdgesMeet { first: (a, b), second: (c, d) });
            }
        }
    }
    None
}

/// Checks that `d` is a crossing-free straight-line drawing and marks it verified.
pub fn verify_crossing_free(mut d: Drawing) -> std::result::Result<Drawing, Violation> {
    let found = match IntFrame::new(&d.points) {
        IntFrame::Small(p) => first_violation(&d.graph, &p),
        IntFrame::Big(p) => first_violation(&d.graph, &p),
    };
    match found {
        Some(v) => Err(v),
        None => {
            d.verified = true;
            Ok(d)
        }
    }
}
