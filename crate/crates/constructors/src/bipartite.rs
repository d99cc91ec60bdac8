use affcover_core::families::complete_bipartite;
use affcover_drawing::{edge_line_count, verify_crossing_free, CoverKind, CoverObject, Drawing};
use affcover_geometry::{canon_plane, q as rat, QPoint};
use num_rational::BigRational;

use crate::result::line;
use crate::{ConstructError, ConstructionResult, Result};

fn check_pq(p: usize, q: usize) -> Result<()> {
    if p == 0 || p > q {
        return Err(ConstructError::Domain(format!("need 1 <= p <= q, got p = {p}, q = {q}")));
    }
    Ok(())
}

/// `K_{p,q}` with the `q` side on the x-axis and the `p` side split over
/// `⌈p/2⌉` planes through that axis, one vertex on each side of the axis.
pub fn kpq_plane_book(p: usize, q: usize) -> Result<ConstructionResult> {
    check_pq(p, q)?;
    let mut pts = Vec::with_capacity(p + q);
    for i in 0..p as i64 {
        let (page, side) = (i / 2, if i % 2 == 0 { 1 } else { -1 });
        pts.push(vec![0, side, side * page]);
    }
    pts.extend((0..q as i64).map(|x| vec![2 * x - q as i64 + 1, 0, 0]));
    let pages = p.div_ceil(2);
    let planes = (0..pages as i64)
        .map(|page| {
            let h = canon_plane(
                &QPoint::from_ints(&[0, 0, 0]),
                &QPoint::from_ints(&[1, 0, 0]),
                &QPoint::from_ints(&[0, 1, page]),
            )?;
            Ok(CoverObject::Plane(h))
        })
        .collect::<Result<Vec<_>>>()?;
    let d = Drawing::from_ints(complete_bipartite(p, q), &pts, format!("kpq_plane_book p={p} q={q}"))?;
    ConstructionResult::new(d, CoverKind::PlanesForEdges, planes, pages)
}

/// `K_{p,q}` with the `q` side on the z-axis and each of the `p` vertices on
/// its own line parallel to it, in distinct half-planes around the axis.
pub fn parallel_kpq_lines(p: usize, q: usize) -> Result<ConstructionResult> {
    check_pq(p, q)?;
    let mut pts: Vec<Vec<i64>> = (0..p as i64).map(|i| vec![1, i, 0]).collect();
    pts.extend((0..q as i64).map(|z| vec![0, 0, z]));
    let mut lines = vec![line(&[0, 0, 0], &[0, 0, 1])];
    lines.extend((0..p as i64).map(|i| line(&[1, i, 0], &[1, i, 1])));
    let d = Drawing::from_ints(complete_bipartite(p, q), &pts, format!("parallel_kpq_lines p={p} q={q}"))?;
    ConstructionResult::new(d, CoverKind::ParallelLines, lines, p + 1)
}

/// `⌈(3n - 7) / 2⌉` for `n = q + 2`.
fn k2q_lines(q: usize) -> usize {
    (3 * q).saturating_sub(1).div_ceil(2)
}

/// A plane drawing of `K_{2,q}` on `⌈(3n-7)/2⌉` lines, `n = q + 2`.
///
/// White vertex `w = 0` sits at the origin and `w' = 1` at `(0, -D)`; black
/// vertex 2 sits at `(0, -1)`, between them. The other blacks come in pairs
/// `(i, i²)` and `(-1/i², -1/i)` on lines through `w`, an odd one out alone.
/// `D` starts above `q²` and doubles until the drawing is crossing-free and
/// `w'` sees every black on its own line.
pub fn k2q_optimal(q: usize) -> Result<ConstructionResult> {
    if q == 0 {
        return Err(ConstructError::Domain("k2q_optimal needs q >= 1".into()));
    }
    let target = k2q_lines(q);
    let int = |x: i64| BigRational::from_integer(x.into());
    let mut blacks = vec![vec![int(0), int(-1)]];
    for k in 0..q - 1 {
        let i = (k / 2 + 1) as i64;
        blacks.push(if k % 2 == 0 { vec![int(i), int(i * i)] } else { vec![rat(-1, i * i), rat(-1, i)] });
    }
    let mut depth = (q * q) as i64 + 2;
    for _ in 0..32 {
        let mut pts = vec![QPoint::from_ints(&[0, 0]), QPoint::from_ints(&[0, -depth])];
        pts.extend(blacks.iter().map(|b| QPoint::new(b.clone()).expect("planar point")));
        let d = Drawing::new(complete_bipartite(2, q), pts, format!("k2q_optimal q={q} D={depth}"))?;
        if let Ok(d) = verify_crossing_free(d) {
            let (count, w) = edge_line_count(&d)?;
            if count == target {
                return ConstructionResult::with_witness(d, w, target);
            }
        }
        depth *= 2;
    }
    Err(ConstructError::Domain(format!("no depth found for q = {q}")))
}
