use affcover_core::Graph;
use affcover_drawing::{verify_crossing_free, CoverKind, CoverObject, Drawing};
use affcover_geometry::{canon_plane, QPoint};
use affcover_planar::grid_drawing;
use affcover_solvers::{vertex_thickness_exact, Budget};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{ConstructError, ConstructionResult, Result};

pub const PI23_RETRY_CAP: usize = 64;

fn level_plane(z: i64) -> CoverObject {
    let p = |x, y| QPoint::from_ints(&[x, y, z]);
    CoverObject::Plane(canon_plane(&p(0, 0), &p(1, 0), &p(0, 1)).expect("axis points"))
}

/// Vertices on `vt(g)` parallel planes `z = 0, 1, ...`. Each planar class is
/// drawn on the grid and, when there are several classes, moved in its plane
/// by a random dilating rotation and shift; draws repeat until the result is
/// crossing-free. The rotation range `t` and shift range `s` start at `m`
/// and `m²` and double after every failed draw, up to a factor of 2^20.
pub fn pi23_drawing(g: &Graph, seed: u64) -> Result<ConstructionResult> {
    let n = g.n();
    if n == 0 {
        let d = Drawing::new(g.clone(), Vec::new(), "pi23 empty")?;
        return ConstructionResult::new(d, CoverKind::ParallelPlanes, Vec::new(), 0);
    }
    let part = vertex_thickness_exact(g, &Budget::default());
    let classes = &part.partition.classes;
    let r = classes.len();
    let mut layouts = Vec::with_capacity(r);
    for class in classes {
        layouts.push(grid_drawing(&g.induced(class))?);
    }
    let planes: Vec<CoverObject> = (0..r as i64).map(level_plane).collect();
    let place = |transforms: &[(i64, i64, i64, i64)]| {
        let mut pts = vec![Vec::new(); n];
        for (i, class) in classes.iter().enumerate() {
            let (a, b, p, q) = transforms[i];
            for (k, &v) in class.iter().enumerate() {
                let [x, y] = layouts[i][k];
                pts[v] = vec![a * x - b * y + p, b * x + a * y + q, i as i64];
            }
        }
        pts
    };
    if r == 1 {
        let d = Drawing::from_ints(g.clone(), &place(&[(1, 0, 0, 0)]), format!("pi23 r=1 exact={}", part.exact))?;
        return ConstructionResult::new(d, CoverKind::ParallelPlanes, planes, 1);
    }
    let m = g.m().max(1) as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut c1, mut c2) = (1i64, 1i64);
    let mut last = None;
    for attempt in 0..PI23_RETRY_CAP {
        let s = c1 * m * m;
        let t = (c2 * m).max(2);
        let transforms: Vec<(i64, i64, i64, i64)> = (0..r)
            .map(|_| {
                let (a, b) = loop {
                    let a = rng.gen_range(2..=t);
                    let b = rng.gen_range(1..a);
                    if a.gcd(&b) == 1 {
                        break (a, b);
                    }
                };
                (a, b, rng.gen_range(0..s), rng.gen_range(0..s))
            })
            .collect();
        let meta = format!("pi23 r={r} seed={seed} attempt={attempt} s={s} t={t} exact={}", part.exact);
        let d = Drawing::from_ints(g.clone(), &place(&transforms), meta)?;
        match verify_crossing_free(d) {
            Ok(d) => return ConstructionResult::new(d, CoverKind::ParallelPlanes, planes, r),
            Err(v) => last = Some(v),
        }
        if c1 < 1 << 20 {
            c1 *= 2;
            c2 *= 2;
        }
    }
    Err(ConstructError::RetryExhausted { attempts: PI23_RETRY_CAP, last: last.expect("at least one attempt") })
}
