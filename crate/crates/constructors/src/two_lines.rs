use affcover_core::families::nested_squares;
use affcover_core::{linear_forest_order, Graph};
use affcover_drawing::{CoverKind, Drawing};
use affcover_planar::TrackAssignment;

use crate::result::line;
use crate::{ConstructError, ConstructionResult, Result};

/// Plane drawing with every vertex on the two coordinate axes. Track `t`
/// goes on the half-line `t mod 4` (positive x, positive y, negative x,
/// negative y), tracks follow one another outward along the spiral, and
/// ranks increase away from the origin.
pub fn spiral_two_lines(g: &Graph, tracks: &TrackAssignment) -> Result<ConstructionResult> {
    tracks.validate(g)?;
    let mut pts = vec![Vec::new(); g.n()];
    let mut radius = 1i64;
    let mut axes = [false; 2];
    for (t, vs) in tracks.tracks().iter().enumerate() {
        let (dx, dy) = [(1, 0), (0, 1), (-1, 0), (0, -1)][t % 4];
        axes[t % 2] = true;
        for &v in vs {
            pts[v] = vec![dx * radius, dy * radius];
            radius += 1;
        }
    }
    let mut lines = Vec::new();
    if axes[0] {
        lines.push(line(&[0, 0], &[1, 0]));
    }
    if axes[1] {
        lines.push(line(&[0, 0], &[0, 1]));
    }
    let meta = format!("spiral_two_lines tracks={}", tracks.num_tracks());
    let d = Drawing::from_ints(g.clone(), &pts, meta)?;
    ConstructionResult::new(d, CoverKind::LinesForVertices, lines, 2)
}

/// A linear forest with all vertices on the x-axis, path after path.
pub fn linear_forest_one_line(g: &Graph) -> Result<ConstructionResult> {
    let all: Vec<usize> = (0..g.n()).collect();
    let order = linear_forest_order(g, &all)
        .ok_or_else(|| ConstructError::Domain("graph is not a linear forest".into()))?
        .concat();
    let mut pts = vec![Vec::new(); g.n()];
    for (x, &v) in order.iter().enumerate() {
        pts[v] = vec![x as i64, 0];
    }
    let d = Drawing::from_ints(g.clone(), &pts, "linear_forest_one_line")?;
    let lines = if g.n() == 0 { Vec::new() } else { vec![line(&[0, 0], &[1, 0])] };
    let claimed = lines.len();
    ConstructionResult::new(d, CoverKind::LinesForVertices, lines, claimed)
}

/// Nested squares `S_k` with square `j` at corners `(±(j+1), ±(j+1))`, so
/// every vertex lies on one of the diagonals `y = x` and `y = -x`.
pub fn nested_squares_two_lines(k: usize) -> Result<ConstructionResult> {
    let mut pts = Vec::with_capacity(4 * k);
    for j in 0..k as i64 {
        let s = j + 1;
        pts.extend([vec![s, s], vec![-s, s], vec![-s, -s], vec![s, -s]]);
    }
    let d = Drawing::from_ints(nested_squares(k), &pts, format!("nested_squares_two_lines k={k}"))?;
    let lines = if k == 0 { Vec::new() } else { vec![line(&[0, 0], &[1, 1]), line(&[0, 0], &[1, -1])] };
    ConstructionResult::new(d, CoverKind::LinesForVertices, lines, 2)
}
