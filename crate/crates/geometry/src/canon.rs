use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::point::same_dim;
use crate::predicates::cross;
use crate::{GeometryError, QPoint, Result};

/// Scales a nonzero rational vector to the primitive integer vector with
/// positive first nonzero entry.
pub fn primitive_direction(v: &[BigRational]) -> Option<Vec<BigInt>> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let mut l = BigInt::one();
    for c in v {
        l = l.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    for c in &mut ints {
        *c /= &g;
    }
    if ints.iter().find(|c| !c.is_zero()).unwrap().is_negative() {
        for c in &mut ints {
            *c = -c.clone();
        }
    }
    Some(ints)
}

/// A line in the plane or in space, stored as its primitive direction and the
/// unique point on it whose coordinate along the first nonzero direction
/// component is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonLine {
    dir: Vec<BigInt>,
    base: Vec<BigRational>,
}

impl CanonLine {
    fn from_point_dir(p: &QPoint, dir: Vec<BigInt>) -> Self {
        let j = dir.iter().position(|c| !c.is_zero()).unwrap();
        let t = p.coord(j) / BigRational::from_integer(dir[j].clone());
        let base = p.coords().iter().zip(&dir).map(|(c, d)| c - &t * BigRational::from_integer(d.clone())).collect();
        CanonLine { dir, base }
    }

    /// The line through `p` along the first basis vector; used for isolated points.
    pub fn singleton(p: &QPoint) -> Self {
        let mut dir = vec![BigInt::zero(); p.dim()];
        dir[0] = BigInt::one();
        Self::from_point_dir(p, dir)
    }

    /// Reassembles a line from stored coefficients, re-normalizing them.
    pub fn from_parts(base: &QPoint, dir: &[BigRational]) -> Result<Self> {
        if base.dim() != dir.len() {
            return Err(GeometryError::DimensionMismatch(base.dim(), dir.len()));
        }
        let d = primitive_direction(dir).ok_or(GeometryError::Degenerate("zero direction"))?;
        Ok(Self::from_point_dir(base, d))
    }

    pub fn dim(&self) -> usize {
        self.dir.len()
    }

    pub fn direction(&self) -> &[BigInt] {
        &self.dir
    }

    pub fn base(&self) -> &[BigRational] {
        &self.base
    }

    pub fn base_point(&self) -> QPoint {
        QPoint::new(self.base.clone()).expect("line dimension is 2 or 3")
    }

    pub fn contains(&self, p: &QPoint) -> bool {
        if p.dim() != self.dim() {
            return false;
        }
        let diff: Vec<BigRational> = p.coords().iter().zip(&self.base).map(|(a, b)| a - b).collect();
        let d: Vec<BigRational> = self.dir.iter().cloned().map(BigRational::from_integer).collect();
        (0..diff.len()).all(|i| (i + 1..diff.len()).all(|k| &diff[i] * &d[k] == &diff[k] * &d[i]))
    }

    pub fn is_parallel_to(&self, other: &CanonLine) -> bool {
        self.dir == other.dir
    }
}

/// A plane in space: primitive integer normal with positive first nonzero
/// entry, plus the rational offset `normal . x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonPlane {
    normal: [BigInt; 3],
    offset: BigRational,
}

impl CanonPlane {
    pub fn normal(&self) -> &[BigInt; 3] {
        &self.normal
    }

    pub fn offset(&self) -> &BigRational {
        &self.offset
    }

    /// Rebuilds a plane from a (not necessarily primitive) normal and a point on it.
    pub fn from_normal_point(normal: &[BigRational; 3], p: &QPoint) -> Result<Self> {
        if p.dim() != 3 {
            return Err(GeometryError::DimensionMismatch(3, p.dim()));
        }
        let n = primitive_direction(normal).ok_or(GeometryError::Degenerate("zero normal"))?;
        let normal = [n[0].clone(), n[1].clone(), n[2].clone()];
        let offset = dot_int(&normal, p.coords());
        Ok(CanonPlane { normal, offset })
    }

    /// Rebuilds a plane from an integer normal and offset, re-normalizing.
    pub fn from_equation(normal: &[BigRational; 3], offset: &BigRational) -> Result<Self> {
        let n = primitive_direction(normal).ok_or(GeometryError::Degenerate("zero normal"))?;
        let j = (0..3).find(|&i| !normal[i].is_zero()).unwrap();
        let factor = BigRational::from_integer(n[j].clone()) / &normal[j];
        Ok(CanonPlane { normal: [n[0].clone(), n[1].clone(), n[2].clone()], offset: offset * factor })
    }

    pub fn contains(&self, p: &QPoint) -> bool {
        p.dim() == 3 && dot_int(&self.normal, p.coords()) == self.offset
    }

    pub fn contains_line(&self, l: &CanonLine) -> bool {
        l.dim() == 3
            && self.contains(&l.base_point())
            && l.direction().iter().zip(&self.normal).fold(BigInt::zero(), |s, (a, b)| s + a * b).is_zero()
    }

    pub fn is_parallel_to(&self, other: &CanonPlane) -> bool {
        self.normal == other.normal
    }
}

fn dot_int(n: &[BigInt; 3], p: &[BigRational]) -> BigRational {
    n.iter().zip(p).fold(BigRational::zero(), |s, (a, c)| s + BigRational::from_integer(a.clone()) * c)
}

pub fn canon_line(p: &QPoint, q: &QPoint) -> Result<CanonLine> {
    same_dim(&[p, q])?;
    let v: Vec<BigRational> = q.coords().iter().zip(p.coords()).map(|(a, b)| a - b).collect();
    let dir = primitive_direction(&v).ok_or(GeometryError::Degenerate("coincident points"))?;
    Ok(CanonLine::from_point_dir(p, dir))
}

pub fn canon_plane(p: &QPoint, q: &QPoint, r: &QPoint) -> Result<CanonPlane> {
    let d = same_dim(&[p, q, r])?;
    if d != 3 {
        return Err(GeometryError::DimensionMismatch(3, d));
    }
    let (p3, q3, r3) = (p.to_p3(), q.to_p3(), r.to_p3());
    let u = [0, 1, 2].map(|i| &q3[i] - &p3[i]);
    let v = [0, 1, 2].map(|i| &r3[i] - &p3[i]);
    let n = cross(&u, &v);
    CanonPlane::from_normal_point(&n, p).map_err(|_| GeometryError::Degenerate("collinear points"))
}

/// A canonical plane containing a spatial line: spanned by the line and the
/// first basis vector not parallel to it.
pub fn plane_through_line(l: &CanonLine) -> Result<CanonPlane> {
    if l.dim() != 3 {
        return Err(GeometryError::DimensionMismatch(3, l.dim()));
    }
    let d: [BigRational; 3] = [0, 1, 2].map(|i| BigRational::from_integer(l.direction()[i].clone()));
    for k in 0..3 {
        let mut e = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
        e[k] = BigRational::one();
        let n = cross(&d, &e);
        if n.iter().any(|c| !c.is_zero()) {
            return CanonPlane::from_normal_point(&n, &l.base_point());
        }
    }
    unreachable!("a nonzero direction is parallel to at most one basis vector")
}
