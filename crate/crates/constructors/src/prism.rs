use affcover_core::{build_family, FamilyKind, FamilySpec};
use affcover_drawing::Drawing;

use crate::{ConstructError, ConstructionResult, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrismBase {
    /// `C_4 x P_k`, squares.
    C4,
    /// `C_3 x P_k`, right triangles.
    C3,
}

impl PrismBase {
    fn ring(self) -> &'static [(i64, i64)] {
        match self {
            PrismBase::C4 => &[(1, 1), (-1, 1), (-1, -1), (1, -1)],
            PrismBase::C3 => &[(-3, -3), (3, -3), (-3, 3)],
        }
    }

    /// The ring scaled by 2 about its centroid.
    fn bridge(self) -> &'static [(i64, i64)] {
        match self {
            PrismBase::C4 => &[(2, 2), (-2, 2), (-2, -2), (2, -2)],
            PrismBase::C3 => &[(-5, -5), (7, -5), (-5, 7)],
        }
    }

    fn spacing(self) -> i64 {
        match self {
            PrismBase::C4 => 8,
            PrismBase::C3 => 16,
        }
    }

    fn family(self) -> FamilyKind {
        match self {
            PrismBase::C4 => FamilyKind::C4PrismStack,
            PrismBase::C3 => FamilyKind::NestedTriangles,
        }
    }

    /// Directions of the ring sides; lines of one direction are shared by
    /// cells in the same grid row, column or anti-diagonal.
    fn side_families(self, g: usize) -> usize {
        match self {
            PrismBase::C4 => 4 * g,
            PrismBase::C3 => 2 * g + 2 * g - 1,
        }
    }
}

fn icbrt(k: usize) -> usize {
    (1..).find(|h: &usize| h * h * h >= k).unwrap()
}

fn isqrt_ceil(k: usize) -> usize {
    (0..).find(|g: &usize| g * g >= k).unwrap()
}

/// `C_4 x P_k` (or `C_3 x P_k`) in space on `O(n^{2/3})` lines.
///
/// Rings are grouped into prisms of `h = ⌈k^{1/3}⌉` stacked rings, and the
/// prisms sit on a `g x g` grid of cells visited in snake order. Even prisms
/// climb levels `0..h`, odd ones descend from `h` to `1`. After the last ring
/// of a prism comes a bridge ring at the same level, twice as large and
/// around it; from there the path steps one level further to the first ring
/// of the next cell, whose stack leaves that level in the other direction.
/// Side lines are shared along grid rows and columns, vertical edges along
/// cell corners, and each bridge adds a constant number of fresh lines.
pub fn prism_stack_3d(k: usize, base: PrismBase) -> Result<ConstructionResult> {
    if k == 0 {
        return Err(ConstructError::Domain("prism_stack_3d needs k >= 1".into()));
    }
    let g_graph = build_family(&FamilySpec::new(base.family(), &[k]))?;
    let h = icbrt(k);
    let prisms = k.div_ceil(h + 1);
    let g = isqrt_ceil(prisms);
    let s = base.spacing();
    let (ring, bridge) = (base.ring(), base.bridge());
    let mut pts = Vec::with_capacity(g_graph.n());
    let mut placed = 0;
    'outer: for p in 0..prisms {
        let (row, col) = (p / g, p % g);
        let col = if row % 2 == 0 { col } else { g - 1 - col };
        let (cx, cy) = (s * col as i64, s * row as i64);
        let levels: Vec<i64> = if p % 2 == 0 { (0..h as i64).collect() } else { (1..=h as i64).rev().collect() };
        let last = *levels.last().unwrap();
        for (z, shape) in levels.into_iter().map(|z| (z, ring)).chain([(last, bridge)]) {
            if placed == k {
                break 'outer;
            }
            pts.extend(shape.iter().map(|&(x, y)| vec![cx + x, cy + y, z]));
            placed += 1;
        }
    }
    let c = ring.len();
    let claimed = base.side_families(g) * (h + 1) + 4 * c * prisms;
    let meta = format!("prism_stack_3d base={base:?} k={k} h={h} prisms={prisms} grid={g} spacing={s}");
    let d = Drawing::from_ints(g_graph, &pts, meta)?;
    ConstructionResult::edge_lines(d, claimed)
}
