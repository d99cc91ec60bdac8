use affcover_constructors::{
    binary_tree_grid, k2q_optimal, kn_small_plane_cover, kpq_plane_book, linear_forest_one_line, moment_curve_kn,
    nested_squares_two_lines, parallel_kpq_lines, pi13_drawing, pi23_drawing, prism_stack_3d, spiral_two_lines,
    ConstructionResult, PrismBase,
};
use affcover_core::families::{complete_binary_tree, complete_bipartite, cycle, nested_squares, path};
use affcover_core::{cartesian_product, Graph};
use affcover_drawing::{
    edge_line_count, min_edge_plane_cover, min_vertex_line_cover, verify_crossing_free, CoverBudget, CoverKind,
    CoverWitness, Drawing, DrawingError,
};
use affcover_planar::{grid_drawing, is_planar, tree_tracks};

use crate::Param;

/// A verified drawing with a validated cover witness, named after the
/// construction or measurement that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub name: String,
    pub drawing: Drawing,
    pub witness: CoverWitness,
}

impl Certificate {
    pub fn new(name: impl Into<String>, drawing: Drawing, witness: CoverWitness) -> Result<Self, DrawingError> {
        if !drawing.is_verified() {
            return Err(DrawingError::NotVerified);
        }
        witness.validate(&drawing)?;
        Ok(Certificate { name: name.into(), drawing, witness })
    }

    pub fn from_construction(name: impl Into<String>, c: ConstructionResult) -> Self {
        Certificate { name: name.into(), drawing: c.drawing, witness: c.witness }
    }

    /// Number of objects a full cover needs: the witness objects plus one per
    /// isolated vertex that an edge cover leaves uncovered.
    pub fn value(&self) -> usize {
        let mut extra = 0;
        if self.witness.kind.covers_edges() {
            for v in self.drawing.graph().isolated_vertices() {
                let p = self.drawing.point(v);
                if !self.witness.objects.iter().any(|o| o.contains(p)) {
                    extra += 1;
                }
            }
        }
        self.witness.count() + extra
    }

    pub fn params(&self) -> Vec<Param> {
        let mut ps = certificate_params(self.witness.kind, self.drawing.dim());
        // One line is a parallel family on its own.
        let lines = matches!(self.witness.kind, CoverKind::LinesForVertices | CoverKind::LinesForEdges);
        if lines && self.value() == 1 && !ps.contains(&Param::PiBar13) {
            ps.push(Param::PiBar13);
        }
        ps
    }
}

/// Parameters bounded from above by a witness of `kind` in dimension `dim`.
pub fn certificate_params(kind: CoverKind, dim: usize) -> Vec<Param> {
    match (kind, dim) {
        (CoverKind::LinesForEdges, 2) => vec![Param::Rho12],
        (CoverKind::LinesForEdges, _) => vec![Param::Rho13],
        (CoverKind::LinesForVertices, 2) => vec![Param::Pi12],
        (CoverKind::LinesForVertices, _) => vec![Param::Pi13],
        (CoverKind::ParallelLines, 2) => vec![Param::Pi12, Param::PiBar13],
        (CoverKind::ParallelLines, _) => vec![Param::PiBar13],
        (CoverKind::PlanesForEdges, _) => vec![Param::Rho23],
        (CoverKind::PlanesForVertices | CoverKind::ParallelPlanes, _) => vec![Param::Pi23],
    }
}

const GENERIC_MAX_M: usize = 400;
const PI13_MAX_N: usize = 14;
const PI23_MAX_N: usize = 12;

fn measured(name: &str, d: &Drawing, out: &mut Vec<Certificate>) {
    if let Ok((_, w)) = edge_line_count(d) {
        out.push(Certificate { name: format!("{name}/edge_lines"), drawing: d.clone(), witness: w });
    }
    let budget = CoverBudget::default();
    if let Ok(r) = min_vertex_line_cover(d, &budget) {
        out.push(Certificate { name: format!("{name}/vertex_lines"), drawing: d.clone(), witness: r.witness });
    }
    if d.graph().m() <= 80 {
        if let Ok(r) = min_edge_plane_cover(d, &budget) {
            out.push(Certificate { name: format!("{name}/edge_planes"), drawing: d.clone(), witness: r.witness });
        }
    }
}

/// Points on the moment curve: no four are coplanar, so every graph is drawn
/// crossing-free.
fn generic_3d(g: &Graph) -> Option<Drawing> {
    let pts: Vec<Vec<i64>> = (0..g.n() as i64).map(|t| vec![t, t * t, t * t * t]).collect();
    verify_crossing_free(Drawing::from_ints(g.clone(), &pts, "moment curve").ok()?).ok()
}

/// A linear forest with its paths laid end to end on the x-axis.
fn grid_2d(g: &Graph) -> Option<Drawing> {
    let pts: Vec<Vec<i64>> = grid_drawing(g).ok()?.iter().map(|p| p.to_vec()).collect();
    verify_crossing_free(Drawing::from_ints(g.clone(), &pts, "grid").ok()?).ok()
}

/// Every construction and measured drawing that applies to `g`, restricted
/// to those drawn on exactly `g` (same vertex labels).
pub fn standard_certificates(g: &Graph, seed: u64) -> Vec<Certificate> {
    let n = g.n();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut push = |name: &str, r: affcover_constructors::Result<ConstructionResult>| {
        if let Ok(c) = r {
            measured(name, &c.drawing, &mut out);
            out.push(Certificate::from_construction(name, c));
        }
    };
    if n <= PI13_MAX_N {
        push("pi13", pi13_drawing(g));
    }
    if n <= PI23_MAX_N {
        push("pi23", pi23_drawing(g, seed));
    }
    if g.is_tree() {
        if let Ok(t) = tree_tracks(g, 0) {
            push("two_lines", spiral_two_lines(g, &t));
        }
    }
    if g.is_complete() {
        push("moment_curve", moment_curve_kn(n));
        if (4..=8).contains(&n) {
            push("rho23_kn", kn_small_plane_cover(n));
        }
    }
    if let Some((a, b)) = g.complete_bipartite_sides() {
        let (p, q) = (a.len(), b.len());
        if *g == complete_bipartite(p, q) {
            push("rho23_kpq", kpq_plane_book(p, q));
            push("parallel_kpq", parallel_kpq_lines(p, q));
            if p == 2 {
                push("k2q", k2q_optimal(q));
            }
        }
    }
    if n >= 3 && (n + 1).is_power_of_two() {
        let h = (n + 1).trailing_zeros() as usize - 1;
        if h <= 10 && *g == complete_binary_tree(h) {
            push("binary_tree", binary_tree_grid(h));
        }
    }
    if n.is_multiple_of(4) {
        let k = n / 4;
        if *g == cartesian_product(&path(k), &cycle(4)) {
            push("prism3d", prism_stack_3d(k, PrismBase::C4));
        }
        if *g == nested_squares(k) {
            push("nested_squares", nested_squares_two_lines(k));
        }
    }
    if n.is_multiple_of(3) && *g == cartesian_product(&path(n / 3), &cycle(3)) {
        push("prism3d", prism_stack_3d(n / 3, PrismBase::C3));
    }
    push("collinear", linear_forest_one_line(g));
    if g.m() <= GENERIC_MAX_M {
        if let Some(d) = generic_3d(g) {
            measured("generic3d", &d, &mut out);
        }
    }
    if g.m() <= GENERIC_MAX_M && is_planar(g) {
        if let Some(d) = grid_2d(g) {
            measured("grid", &d, &mut out);
        }
    }
    out.retain(|c| c.drawing.graph() == g);
    out
}
