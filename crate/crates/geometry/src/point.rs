use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::{GeometryError, Result};

/// Shorthand for the rational `num / den`.
pub fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A point with two or three exact rational coordinates.
///
/// `BigRational` keeps every coordinate gcd-reduced with a positive
/// denominator, so structural equality is geometric equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPoint(Vec<BigRational>);

impl QPoint {
    pub fn new(coords: Vec<BigRational>) -> Result<Self> {
        match coords.len() {
            2 | 3 => Ok(QPoint(coords)),
            d => Err(GeometryError::UnsupportedDimension(d)),
        }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        assert!(matches!(coords.len(), 2 | 3), "QPoint needs 2 or 3 coordinates");
        QPoint(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn from_bigints(coords: &[BigInt]) -> Self {
        assert!(matches!(coords.len(), 2 | 3));
        QPoint(coords.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn coord(&self, i: usize) -> &BigRational {
        &self.0[i]
    }

    /// Embeds a planar point into the plane `z = 0`; 3D points are returned unchanged.
    pub fn lift(&self) -> QPoint {
        if self.dim() == 3 {
            return self.clone();
        }
        let mut c = self.0.clone();
        c.push(BigRational::zero());
        QPoint(c)
    }

    pub fn to_p3(&self) -> [BigRational; 3] {
        let z = if self.dim() == 3 { self.0[2].clone() } else { BigRational::zero() };
        [self.0[0].clone(), self.0[1].clone(), z]
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.0.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn same_dim(points: &[&QPoint]) -> Result<usize> {
    let d = points.first().map(|p| p.dim()).unwrap_or(2);
    for p in points {
        if p.dim() != d {
            return Err(GeometryError::DimensionMismatch(d, p.dim()));
        }
    }
    Ok(d)
}
