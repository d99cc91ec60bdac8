use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{Num, Signed};

use crate::point::same_dim;
use crate::{GeometryError, QPoint, Result};

/// Exact ring used by the predicates: `i128`, `BigInt` and `BigRational` all qualify.
pub trait Scalar: Clone + Ord + Signed + Num {}
impl<T: Clone + Ord + Signed + Num> Scalar for T {}

/// A point in 3-space; planar points live in `z = 0`.
pub type P3<T> = [T; 3];

/// How two closed segments meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SegmentRelation {
    Disjoint,
    /// The segments meet in exactly one point, which is an endpoint of both.
    SharedEndpointOnly,
    /// Any other contact: proper crossing, overlap of positive length, or
    /// an endpoint of one segment in the relative interior of the other.
    Crossing,
}

fn sub<T: Scalar>(a: &P3<T>, b: &P3<T>) -> P3<T> {
    [a[0].clone() - b[0].clone(), a[1].clone() - b[1].clone(), a[2].clone() - b[2].clone()]
}

pub fn cross<T: Scalar>(u: &P3<T>, v: &P3<T>) -> P3<T> {
    [
        u[1].clone() * v[2].clone() - u[2].clone() * v[1].clone(),
        u[2].clone() * v[0].clone() - u[0].clone() * v[2].clone(),
        u[0].clone() * v[1].clone() - u[1].clone() * v[0].clone(),
    ]
}

fn dot<T: Scalar>(u: &P3<T>, v: &P3<T>) -> T {
    u[0].clone() * v[0].clone() + u[1].clone() * v[1].clone() + u[2].clone() * v[2].clone()
}

fn is_zero3<T: Scalar>(v: &P3<T>) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn sign<T: Scalar>(x: &T) -> i8 {
    match x.cmp(&T::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Sign of the planar orientation of `a, b, c` (x and y coordinates only).
pub fn orient2<T: Scalar>(a: &P3<T>, b: &P3<T>, c: &P3<T>) -> i8 {
    let d = (b[0].clone() - a[0].clone()) * (c[1].clone() - a[1].clone())
        - (b[1].clone() - a[1].clone()) * (c[0].clone() - a[0].clone());
    sign(&d)
}

/// Sign of `det[b-a, c-a, d-a]`; zero iff the four points are coplanar.
pub fn orient3<T: Scalar>(a: &P3<T>, b: &P3<T>, c: &P3<T>, d: &P3<T>) -> i8 {
    let u = sub(b, a);
    let v = sub(c, a);
    let w = sub(d, a);
    sign(&dot(&u, &cross(&v, &w)))
}

pub fn collinear<T: Scalar>(a: &P3<T>, b: &P3<T>, c: &P3<T>) -> bool {
    is_zero3(&cross(&sub(b, a), &sub(c, a)))
}

pub fn coplanar<T: Scalar>(a: &P3<T>, b: &P3<T>, c: &P3<T>, d: &P3<T>) -> bool {
    orient3(a, b, c, d) == 0
}

fn in_box<T: Scalar>(a: &P3<T>, b: &P3<T>, p: &P3<T>) -> bool {
    (0..3).all(|i| {
        let (lo, hi) = if a[i] <= b[i] { (&a[i], &b[i]) } else { (&b[i], &a[i]) };
        lo <= &p[i] && &p[i] <= hi
    })
}

/// `p` lies on the closed segment `ab`.
pub fn on_closed_segment<T: Scalar>(a: &P3<T>, b: &P3<T>, p: &P3<T>) -> bool {
    collinear(a, b, p) && in_box(a, b, p)
}

/// `p` lies on segment `ab` and is neither endpoint.
pub fn in_segment_interior<T: Scalar>(a: &P3<T>, b: &P3<T>, p: &P3<T>) -> bool {
    p != a && p != b && on_closed_segment(a, b, p)
}

fn drop_axis<T: Scalar>(p: &P3<T>, axis: usize) -> P3<T> {
    let keep: Vec<usize> = (0..3).filter(|&i| i != axis).collect();
    [p[keep[0]].clone(), p[keep[1]].clone(), T::zero()]
}

/// Exact classification of closed segments `ab` and `cd` in 2D or 3D.
pub fn classify_segments<T: Scalar>(a: &P3<T>, b: &P3<T>, c: &P3<T>, d: &P3<T>) -> Result<SegmentRelation> {
    if a == b || c == d {
        return Err(GeometryError::Degenerate("zero-length segment"));
    }
    if !coplanar(a, b, c, d) {
        return Ok(SegmentRelation::Disjoint);
    }
    let ab = sub(b, a);
    let mut normal = cross(&ab, &sub(c, a));
    if is_zero3(&normal) {
        normal = cross(&ab, &sub(d, a));
    }
    let axis = if is_zero3(&normal) {
        // All four points are collinear; keep two axes along which ab moves.
        (0..3).find(|&k| (0..3).any(|i| i != k && !ab[i].is_zero())).expect("nonzero direction")
    } else {
        (0..3).max_by(|&i, &j| normal[i].abs().cmp(&normal[j].abs()).then(j.cmp(&i))).unwrap()
    };
    Ok(classify_planar(&drop_axis(a, axis), &drop_axis(b, axis), &drop_axis(c, axis), &drop_axis(d, axis)))
}

fn classify_planar<T: Scalar>(a: &P3<T>, b: &P3<T>, c: &P3<T>, d: &P3<T>) -> SegmentRelation {
    let o1 = orient2(a, b, c);
    let o2 = orient2(a, b, d);
    if o1 == 0 && o2 == 0 {
        let k = if a[0] != b[0] { 0 } else { 1 };
        let (l1, h1) = if a[k] <= b[k] { (&a[k], &b[k]) } else { (&b[k], &a[k]) };
        let (l2, h2) = if c[k] <= d[k] { (&c[k], &d[k]) } else { (&d[k], &c[k]) };
        let lo = l1.max(l2);
        let hi = h1.min(h2);
        return match lo.cmp(hi) {
            Ordering::Greater => SegmentRelation::Disjoint,
            Ordering::Equal => SegmentRelation::SharedEndpointOnly,
            Ordering::Less => SegmentRelation::Crossing,
        };
    }
    let o3 = orient2(c, d, a);
    let o4 = orient2(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return SegmentRelation::Crossing;
    }
    let mut shared = false;
    for (p, s, t, o) in [(c, a, b, o1), (d, a, b, o2), (a, c, d, o3), (b, c, d, o4)] {
        if o == 0 && in_box(s, t, p) {
            if p == s || p == t {
                shared = true;
            } else {
                return SegmentRelation::Crossing;
            }
        }
    }
    if shared {
        SegmentRelation::SharedEndpointOnly
    } else {
        SegmentRelation::Disjoint
    }
}

/// `p` lies strictly inside triangle `abc`; all four points must be coplanar
/// and `abc` non-degenerate.
pub fn point_in_triangle_strict<T: Scalar>(a: &P3<T>, b: &P3<T>, c: &P3<T>, p: &P3<T>) -> bool {
    if !coplanar(a, b, c, p) || collinear(a, b, c) {
        return false;
    }
    let n = cross(&sub(b, a), &sub(c, a));
    let axis = (0..3).max_by(|&i, &j| n[i].abs().cmp(&n[j].abs())).unwrap();
    let (a, b, c, p) = (drop_axis(a, axis), drop_axis(b, axis), drop_axis(c, axis), drop_axis(p, axis));
    let s = orient2(&a, &b, &c);
    orient2(&a, &b, &p) == s && orient2(&b, &c, &p) == s && orient2(&c, &a, &p) == s
}

/// Orientation sign of three planar or four spatial points.
pub fn orient(points: &[QPoint]) -> Result<i8> {
    let refs: Vec<&QPoint> = points.iter().collect();
    let dim = same_dim(&refs)?;
    let p: Vec<[BigRational; 3]> = points.iter().map(QPoint::to_p3).collect();
    match (dim, p.len()) {
        (2, 3) => Ok(orient2(&p[0], &p[1], &p[2])),
        (3, 4) => Ok(orient3(&p[0], &p[1], &p[2], &p[3])),
        (2, n) => Err(GeometryError::Arity { expected: "3 planar", got: n }),
        (_, n) => Err(GeometryError::Arity { expected: "4 spatial", got: n }),
    }
}

/// Classifies segments `ab` and `cd` given as rational points.
pub fn segments_intersect(a: &QPoint, b: &QPoint, c: &QPoint, d: &QPoint) -> Result<SegmentRelation> {
    same_dim(&[a, b, c, d])?;
    classify_segments(&a.to_p3(), &b.to_p3(), &c.to_p3(), &d.to_p3())
}
