use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::QPoint;

/// Below this magnitude every 3x3 determinant of coordinate differences fits in `i128`.
const SMALL_LIMIT: i64 = 1 << 40;

/// A point set rescaled by one positive integer so that all coordinates are
/// integers. Positive scaling preserves every orientation and incidence
/// predicate, so verification can run on the scaled copy.
#[derive(Debug, Clone)]
pub enum IntFrame {
    Small(Vec<[i128; 3]>),
    Big(Vec<[BigInt; 3]>),
}

impl IntFrame {
    pub fn new(points: &[QPoint]) -> Self {
        let mut scale = BigInt::one();
        for p in points {
            for c in p.coords() {
                scale = scale.lcm(c.denom());
            }
        }
        let big: Vec<[BigInt; 3]> = points
            .iter()
            .map(|p| {
                let c = p.to_p3();
                [0, 1, 2].map(|i| (c[i].numer() * &scale) / c[i].denom())
            })
            .collect();
        let fits = big.iter().flatten().all(|c| c.abs() < BigInt::from(SMALL_LIMIT));
        if fits {
            IntFrame::Small(big.iter().map(|p| [0, 1, 2].map(|i| p[i].to_i128().expect("bounded"))).collect())
        } else {
            IntFrame::Big(big)
        }
    }

    pub fn len(&self) -> usize {
        match self {
            IntFrame::Small(v) => v.len(),
            IntFrame::Big(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
