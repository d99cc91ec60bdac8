use affcover_core::families::complete_multipartite;
use affcover_core::{linear_forest_order, Graph};
use affcover_drawing::{CoverKind, Drawing};
use affcover_solvers::{lva_exact, Budget};

use crate::result::line;
use crate::{ConstructError, ConstructionResult, Result};

pub fn smallest_prime_at_least(k: u64) -> u64 {
    let is_prime = |p: u64| p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
    (k.max(2)..).find(|&p| is_prime(p)).unwrap()
}

/// First `count` points of class `i` on the line through `(i, 0, 0)` with
/// direction `(0, 1, i)`, at parameters `t ≡ i² (mod p)`.
fn class_points(i: i64, p: i64, count: usize) -> Vec<Vec<i64>> {
    let first = i * i % p;
    (0..count as i64).map(|k| first + k * p).map(|t| vec![i, t, i * t]).collect()
}

fn class_line(i: i64) -> affcover_drawing::CoverObject {
    line(&[i, 0, 0], &[i, 1, i])
}

/// The balanced complete `r`-partite graph on `n` vertices drawn with every
/// class on its own line. Classes are numbered consecutively, each in order
/// along its line; with `join_classes` consecutive vertices of a class are
/// also joined.
pub fn pach_multipartite(r: usize, n: usize, join_classes: bool) -> Result<ConstructionResult> {
    if r < 2 || n == 0 || !n.is_multiple_of(r) {
        return Err(ConstructError::Domain(format!("need r >= 2 dividing n > 0, got r = {r}, n = {n}")));
    }
    let size = n / r;
    let p = smallest_prime_at_least(2 * r as u64 - 1) as i64;
    let mut g = complete_multipartite(&vec![size; r]);
    if join_classes {
        let mut e = g.edges().to_vec();
        for c in 0..r {
            e.extend((1..size).map(|k| (c * size + k - 1, c * size + k)));
        }
        g = Graph::from_edges(n, e)?;
    }
    let pts: Vec<Vec<i64>> = (0..r as i64).flat_map(|i| class_points(i, p, size)).collect();
    let meta = format!("pach_multipartite r={r} n={n} p={p} N={} join={join_classes}", p as usize * size);
    let d = Drawing::from_ints(g, &pts, meta)?;
    ConstructionResult::new(d, CoverKind::LinesForVertices, (0..r as i64).map(class_line).collect(), r)
}

/// Vertices on `lva(g)` lines in space: each linear-forest class of an
/// optimal partition is laid out path by path along one class line of the
/// multipartite host, so path edges join consecutive points.
pub fn pi13_drawing(g: &Graph) -> Result<ConstructionResult> {
    let n = g.n();
    if n == 0 {
        let d = Drawing::new(g.clone(), Vec::new(), "pi13 empty")?;
        return ConstructionResult::new(d, CoverKind::LinesForVertices, Vec::new(), 0);
    }
    let part = lva_exact(g, &Budget::default());
    let r = part.partition.len();
    let p = smallest_prime_at_least(2 * r as u64 - 1) as i64;
    let mut pts = vec![Vec::new(); n];
    for (i, class) in part.partition.classes.iter().enumerate() {
        let order: Vec<usize> = linear_forest_order(g, class)
            .ok_or_else(|| ConstructError::Domain(format!("class {i} is not a linear forest")))?
            .concat();
        for (v, pt) in order.into_iter().zip(class_points(i as i64, p, class.len())) {
            pts[v] = pt;
        }
    }
    let meta = format!("pi13 r={r} p={p} exact={}", part.exact);
    let d = Drawing::from_ints(g.clone(), &pts, meta)?;
    ConstructionResult::new(d, CoverKind::LinesForVertices, (0..r as i64).map(class_line).collect(), r)
}
