use affcover_constructors::*;
use affcover_core::families::{self, complete, complete_binary_tree, cycle, path};
use affcover_core::Graph;
use affcover_drawing::{
    edge_line_count, kn_structural_checks, min_edge_plane_cover, min_vertex_line_cover, CoverBudget, CoverKind,
};
use affcover_geometry::QPoint;
use affcover_planar::{grid_drawing, tree_tracks, TrackAssignment};
use num_bigint::BigInt;
use proptest::prelude::*;

fn ints(r: &ConstructionResult) -> Vec<Vec<i64>> {
    r.drawing
        .points()
        .iter()
        .map(|p| p.coords().iter().map(|c| i64::try_from(c.to_integer()).unwrap()).collect())
        .collect()
}

fn sound(r: &ConstructionResult) {
    assert!(r.drawing.is_verified());
    r.witness.validate(&r.drawing).unwrap();
    assert!(r.witness.count() <= r.claimed_bound);
}

fn within(r: &ConstructionResult, dims: &[usize]) -> bool {
    r.box_dims.iter().zip(dims).all(|(b, &d)| *b <= BigInt::from(d))
}

#[test]
fn pach_examples() {
    let r = pach_multipartite(2, 4, false).unwrap();
    sound(&r);
    assert_eq!(ints(&r), vec![vec![0, 0, 0], vec![0, 3, 0], vec![1, 1, 1], vec![1, 4, 4]]);
    assert_eq!(r.witness.count(), 2);
    let r = pach_multipartite(3, 3, false).unwrap();
    assert_eq!(ints(&r), vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 4, 8]]);
    assert!(r.drawing.meta().contains("p=5"));
    assert!(matches!(pach_multipartite(2, 3, false), Err(ConstructError::Domain(_))));
    assert_eq!(smallest_prime_at_least(1), 2);
    assert_eq!(smallest_prime_at_least(7), 7);
    assert_eq!(smallest_prime_at_least(8), 11);
}

#[test]
fn pach_is_crossing_free_at_desk_scale() {
    for r in 2..=4 {
        for n in (r..=24).step_by(r) {
            let res = pach_multipartite(r, n, true).unwrap();
            sound(&res);
            assert!(within(&res, &[r, 4 * n, 4 * r * n]), "r={r} n={n} box {:?}", res.box_dims);
        }
    }
}

#[test]
fn pi13_examples() {
    for (g, lines) in [(cycle(5), 2), (families::planar_lva3(), 3), (path(6), 1)] {
        let r = pi13_drawing(&g).unwrap();
        sound(&r);
        assert_eq!(r.witness.count(), lines);
        let (k, n) = (lines, g.n());
        assert!(within(&r, &[k, 4 * k * n, 4 * k * k * n]));
        assert!(min_vertex_line_cover(&r.drawing, &CoverBudget::default()).unwrap().count <= lines);
    }
    for g in [families::petersen(), families::icosahedron(), complete(6), families::nested_squares(3)] {
        let r = pi13_drawing(&g).unwrap();
        sound(&r);
        let k = r.witness.count();
        assert!(within(&r, &[k, 4 * k * g.n(), 4 * k * k * g.n()]));
    }
}

#[test]
fn pi23_examples() {
    let r = pi23_drawing(&complete(5), 7).unwrap();
    sound(&r);
    assert_eq!(r.witness.count(), 2);
    assert_eq!(r.witness.kind, CoverKind::ParallelPlanes);
    let again = pi23_drawing(&complete(5), 7).unwrap();
    assert_eq!(r.drawing.points(), again.drawing.points());

    let g = families::icosahedron();
    let r = pi23_drawing(&g, 1).unwrap();
    let grid = grid_drawing(&g).unwrap();
    let expected: Vec<Vec<i64>> = grid.iter().map(|&[x, y]| vec![x, y, 0]).collect();
    assert_eq!(ints(&r), expected);
    assert_eq!(r.witness.count(), 1);

    let r = pi23_drawing(&complete(9), 3).unwrap();
    sound(&r);
    assert_eq!(r.witness.count(), 3);
}

#[test]
fn moment_curve_examples() {
    for (n, lines) in [(6, 3), (2, 1), (5, 3), (1, 1)] {
        let r = moment_curve_kn(n).unwrap();
        sound(&r);
        assert_eq!(r.witness.count(), lines);
    }
    assert!(moment_curve_kn(0).is_err());
}

#[test]
fn plane_book_examples() {
    for (p, q, planes) in [(3, 4, 2), (1, 5, 1), (4, 4, 2), (1, 1, 1), (5, 6, 3)] {
        let r = kpq_plane_book(p, q).unwrap();
        sound(&r);
        assert_eq!(r.witness.count(), planes);
    }
    let r = kpq_plane_book(3, 4).unwrap();
    assert_eq!(min_edge_plane_cover(&r.drawing, &CoverBudget::default()).unwrap().count, 2);
    assert!(kpq_plane_book(3, 2).is_err());
}

#[test]
fn small_complete_plane_covers() {
    for (n, planes) in KN_PLANE_COVER_UPPER {
        let r = kn_small_plane_cover(n).unwrap();
        sound(&r);
        assert_eq!(r.witness.count(), planes, "K{n}");
        let report = kn_structural_checks(&r.drawing, &r.witness).unwrap();
        assert!(report.passed(), "K{n}: {:?}", report.violations);
    }
    let k6 = kn_small_plane_cover(6).unwrap();
    let report = kn_structural_checks(&k6.drawing, &k6.witness).unwrap();
    assert!(report.plane_vertices.iter().any(|p| p.len() == 3));
    assert!(kn_small_plane_cover(9).is_err());
    assert!(kn_small_plane_cover(3).is_err());
}

#[test]
fn spiral_examples() {
    let p4 = path(4);
    let r = spiral_two_lines(&p4, &tree_tracks(&p4, 0).unwrap()).unwrap();
    sound(&r);
    assert!(r.witness.count() <= 2);
    let one_track = TrackAssignment::from_tracks(4, &[vec![0, 1, 2, 3]]).unwrap();
    assert_eq!(spiral_two_lines(&p4, &one_track).unwrap().witness.count(), 1);
    let star = families::complete_bipartite(1, 3);
    let r = spiral_two_lines(&star, &tree_tracks(&star, 0).unwrap()).unwrap();
    assert_eq!(r.witness.count(), 2);
    let tree = complete_binary_tree(5);
    let r = spiral_two_lines(&tree, &tree_tracks(&tree, 0).unwrap()).unwrap();
    sound(&r);
    let bad = TrackAssignment::from_tracks(3, &[vec![0], vec![1], vec![2]]).unwrap();
    assert!(spiral_two_lines(&cycle(3), &bad).is_err());
}

#[test]
fn parallel_line_examples() {
    for (p, q, lines) in [(2, 3, 3), (1, 1, 2), (3, 5, 4)] {
        let r = parallel_kpq_lines(p, q).unwrap();
        sound(&r);
        assert_eq!(r.witness.count(), lines);
        assert_eq!(r.witness.kind, CoverKind::ParallelLines);
    }
}

#[test]
fn binary_tree_examples() {
    assert_eq!((0..=8).map(binary_tree_m).collect::<Vec<_>>(), vec![0, 1, 2, 4, 8, 12, 20, 28, 44]);
    let r = binary_tree_grid(0).unwrap();
    assert_eq!(r.drawing.graph().n(), 1);
    let r = binary_tree_grid(2).unwrap();
    assert!(within(&r, &[2, 3]));
    assert!(r.witness.count() <= 5);
    let r = binary_tree_grid(4).unwrap();
    assert!(r.witness.count() <= 17);
    for h in 2..=10 {
        let r = binary_tree_grid(h).unwrap();
        sound(&r);
        let m = binary_tree_m(h);
        assert!(within(&r, &[m, m + 1]), "h={h}");
        let lines = r.witness.count();
        let n = complete_binary_tree(h).n();
        assert!(lines <= 2 * m + 1);
        assert!(lines * lines > n - 3, "h={h}: {lines} lines");
    }
}

#[test]
fn k2q_matches_formula() {
    assert_eq!(k2q_optimal(3).unwrap().witness.count(), 4);
    assert_eq!(k2q_optimal(1).unwrap().witness.count(), 1);
    assert_eq!(k2q_optimal(5).unwrap().witness.count(), 7);
    for q in 1..=20 {
        let r = k2q_optimal(q).unwrap();
        sound(&r);
        let n = q + 2;
        assert_eq!(r.witness.count(), (3 * n - 7).div_ceil(2), "q={q}");
        assert_eq!(edge_line_count(&r.drawing).unwrap().0, r.witness.count());
    }
}

#[test]
fn prism_stack_scaling() {
    let r = prism_stack_3d(1, PrismBase::C4).unwrap();
    sound(&r);
    assert_eq!(r.witness.count(), 4);
    let lines = |k: usize| {
        let r = prism_stack_3d(k, PrismBase::C4).unwrap();
        sound(&r);
        r.witness.count() as f64
    };
    let (l8, l27) = (lines(8), lines(27));
    let c8 = l8 / (32f64).powf(2.0 / 3.0);
    let c27 = l27 / (108f64).powf(2.0 / 3.0);
    let ratio = c27 / c8;
    assert!((0.5..=2.0).contains(&ratio), "c8 = {c8}, c27 = {c27}");
    for k in [2, 3, 5, 9, 64, 125] {
        let r = prism_stack_3d(k, PrismBase::C4).unwrap();
        sound(&r);
        let n = 4.0 * k as f64;
        assert!(r.witness.count() as f64 <= 12.0 * n.powf(2.0 / 3.0), "k={k}");
    }
    for k in [1, 2, 8, 27, 64] {
        let r = prism_stack_3d(k, PrismBase::C3).unwrap();
        sound(&r);
        let n = 3.0 * k as f64;
        assert!(r.witness.count() as f64 <= 12.0 * n.powf(2.0 / 3.0), "C3 k={k}");
    }
}

#[test]
fn nested_squares_examples() {
    for k in [1, 2, 4, 7] {
        let r = nested_squares_two_lines(k).unwrap();
        sound(&r);
        assert_eq!(r.witness.count(), 2);
    }
    let r = nested_squares_two_lines(4).unwrap();
    assert_eq!(min_vertex_line_cover(&r.drawing, &CoverBudget::default()).unwrap().count, 2);
}

fn random_tree() -> impl Strategy<Value = Graph> {
    (2usize..40).prop_flat_map(|n| {
        proptest::collection::vec(any::<proptest::sample::Index>(), n - 1).prop_map(move |parents| {
            let e: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, ix)| (ix.index(i + 1), i + 1)).collect();
            Graph::from_edges(n, e).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trees_on_two_lines(g in random_tree(), root in any::<proptest::sample::Index>()) {
        let root = root.index(g.n());
        let r = spiral_two_lines(&g, &tree_tracks(&g, root).unwrap()).unwrap();
        prop_assert!(r.drawing.is_verified());
        prop_assert!(r.witness.count() <= 2);
        let _ = QPoint::from_ints(&[0, 0]);
    }

    #[test]
    fn pi13_uses_lva_lines(n in 1usize..9, bits in proptest::collection::vec(any::<bool>(), 36)) {
        let mut e = Vec::new();
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits[k] { e.push((u, v)); }
                k += 1;
            }
        }
        let g = Graph::from_edges(n, e).unwrap();
        let r = pi13_drawing(&g).unwrap();
        r.witness.validate(&r.drawing).unwrap();
        let lva = affcover_solvers::lva_exact(&g, &affcover_solvers::Budget::default());
        prop_assert_eq!(r.witness.count(), lva.value);
    }
}
