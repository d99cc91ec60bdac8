//! Randomized search for small complete-graph drawings with few covering
//! planes. Prints accepted coordinate sets.
//!
//! K6: two planes meeting in the line through vertices 2 and 3, each
//! holding four vertices, plus two planes through vertices 0, 1 and one of
//! 4, 5. K7 and K8 extend a K6 set by points inside its triangles.

use affcover_core::families::complete;
use affcover_drawing::{kn_structural_checks, min_edge_plane_cover, verify_crossing_free, CoverBudget, Drawing};
use affcover_geometry::QPoint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check(pts: &[Vec<i64>], target: usize) -> bool {
    let n = pts.len();
    let Ok(d) = Drawing::from_ints(complete(n), pts, "") else { return false };
    let Ok(d) = verify_crossing_free(d) else { return false };
    let r = min_edge_plane_cover(&d, &CoverBudget::default()).unwrap();
    r.exact && r.count == target && kn_structural_checks(&d, &r.witness).unwrap().passed()
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let k6 = loop {
        let a = rng.gen_range(-4..0);
        let b = rng.gen_range(1..5);
        let mut pts = vec![
            vec![rng.gen_range(-6..7), rng.gen_range(1..6), 0],
            vec![rng.gen_range(-6..7), rng.gen_range(-6..0), 0],
            vec![a, 0, 0],
            vec![b, 0, 0],
            vec![rng.gen_range(-6..7), 0, rng.gen_range(1..6)],
            vec![rng.gen_range(-6..7), 0, rng.gen_range(-6..0)],
        ];
        if rng.gen_bool(0.5) {
            pts[1][1] = rng.gen_range(1..6);
        }
        if check(&pts, 4) {
            break pts;
        }
    };
    println!("K6: {k6:?}");
    let k7 = loop {
        let t: Vec<usize> = loop {
            let t: Vec<usize> = (0..3).map(|_| rng.gen_range(0..6)).collect();
            if t[0] < t[1] && t[1] < t[2] {
                break t;
            }
        };
        let w: Vec<i64> = (0..3).map(|_| rng.gen_range(1..4)).collect();
        let s: i64 = w.iter().sum();
        let mut pts: Vec<Vec<i64>> = k6.iter().map(|p| p.iter().map(|x| x * s).collect()).collect();
        pts.push((0..3).map(|c| (0..3).map(|i| w[i] * k6[t[i]][c]).sum::<i64>()).collect());
        if check(&pts, 6) {
            break pts;
        }
    };
    println!("K7: {k7:?}");
    let mut tries = 0u64;
    let k8 = loop {
        tries += 1;
        let mut pts = k6.clone();
        for _ in 0..2 {
            let t: Vec<usize> = loop {
                let t: Vec<usize> = (0..3).map(|_| rng.gen_range(0..6)).collect();
                if t[0] < t[1] && t[1] < t[2] {
                    break t;
                }
            };
            let w: Vec<i64> = (0..3).map(|_| rng.gen_range(1..4)).collect();
            let s: i64 = w.iter().sum();
            let p: Vec<i64> = (0..3).map(|c| (0..3).map(|i| w[i] * k6[t[i]][c]).sum::<i64>()).collect();
            pts.push(p.iter().map(|x| x * 12 / s).collect());
            if p.iter().any(|x| x * 12 % s != 0) {
                pts.pop();
                break;
            }
        }
        if pts.len() == 8 {
            let scaled: Vec<Vec<i64>> = pts
                .iter()
                .enumerate()
                .map(|(i, p)| if i < 6 { p.iter().map(|x| x * 12).collect() } else { p.clone() })
                .collect();
            if check(&scaled, 7) {
                break scaled;
            }
        }
        if tries.is_multiple_of(10000) {
            eprintln!("{tries} tries");
        }
    };
    println!("K8: {k8:?}");
    let _ = QPoint::from_ints(&[0, 0, 0]);
}
