use affcover_core::families::complete;
use affcover_drawing::{min_edge_plane_cover, verify_crossing_free, CoverBudget, CoverKind, CoverObject, Drawing};
use affcover_geometry::{CanonLine, QPoint};

use crate::result::line;
use crate::{ConstructError, ConstructionResult, Result};

/// `K_n` on the moment curve `(t, t², t³)`, `t = 0..n`, with its vertices
/// covered by lines through consecutive pairs. For odd `n` the last vertex
/// gets the line through it along the first axis.
pub fn moment_curve_kn(n: usize) -> Result<ConstructionResult> {
    if n == 0 {
        return Err(ConstructError::Domain("moment_curve_kn needs n >= 1".into()));
    }
    let pt = |t: i64| vec![t, t * t, t * t * t];
    let pts: Vec<Vec<i64>> = (0..n as i64).map(pt).collect();
    let mut lines: Vec<CoverObject> = (0..n as i64 / 2).map(|i| line(&pt(2 * i), &pt(2 * i + 1))).collect();
    if n % 2 == 1 {
        let last = n as i64 - 1;
        lines.push(CoverObject::Line(CanonLine::singleton(&QPoint::from_ints(&pt(last)))));
    }
    let d = Drawing::from_ints(complete(n), &pts, format!("moment_curve n={n}"))?;
    ConstructionResult::new(d, CoverKind::LinesForVertices, lines, n.div_ceil(2))
}

/// Best known plane-cover upper bounds for `K_4` to `K_8`.
pub const KN_PLANE_COVER_UPPER: [(usize, usize); 5] = [(4, 1), (5, 3), (6, 4), (7, 6), (8, 7)];

/// Shipped point sets. `K_6` lies on two planes through the line of
/// vertices 2 and 3, four vertices each; `K_7` adds a point inside a
/// triangle spanned by three vertices of a covering plane, `K_8` adds two.
/// The sets were found by randomized search (see the `kn_search` example).
const KN_POINTS: [&[[i64; 3]]; 5] = [
    &[[0, 0, 0], [6, 0, 0], [0, 6, 0], [1, 1, 0]],
    &[[0, 0, 0], [6, 0, 0], [0, 6, 0], [1, 1, 0], [2, 2, 5]],
    &[[-6, 2, 0], [-5, -6, 0], [-3, 0, 0], [1, 0, 0], [3, 0, 1], [1, 0, -2]],
    &[[-36, 12, 0], [-30, -36, 0], [-18, 0, 0], [6, 0, 0], [18, 0, 6], [6, 0, -12], [-4, 4, -2]],
    &[[-72, 24, 0], [-60, -72, 0], [-36, 0, 0], [12, 0, 0], [36, 0, 12], [12, 0, -24], [-9, -27, -6], [-4, 8, 2]],
];

/// A drawing of `K_n`, `4 <= n <= 8`, whose edges lie on few planes; the
/// witness is an exact minimum plane cover of the shipped drawing.
pub fn kn_small_plane_cover(n: usize) -> Result<ConstructionResult> {
    let Some(&(_, claimed)) = KN_PLANE_COVER_UPPER.iter().find(|&&(k, _)| k == n) else {
        return Err(ConstructError::Domain(format!("kn_small_plane_cover needs 4 <= n <= 8, got {n}")));
    };
    let pts: Vec<Vec<i64>> = KN_POINTS[n - 4].iter().map(|p| p.to_vec()).collect();
    let d = verify_crossing_free(Drawing::from_ints(complete(n), &pts, format!("kn_small_plane_cover n={n}"))?)?;
    let cover = min_edge_plane_cover(&d, &CoverBudget::default())?;
    ConstructionResult::with_witness(d, cover.witness, claimed)
}
