use affcover_geometry::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn p(c: &[i64]) -> QPoint {
    QPoint::from_ints(c)
}

#[test]
fn orient_examples() {
    assert_eq!(orient(&[p(&[0, 0]), p(&[1, 0]), p(&[0, 1])]).unwrap(), 1);
    assert_eq!(orient(&[p(&[0, 0]), p(&[1, 1]), p(&[2, 2])]).unwrap(), 0);
    assert_eq!(orient(&[p(&[0, 0, 0]), p(&[1, 0, 0]), p(&[0, 1, 0]), p(&[0, 0, 1])]).unwrap(), 1);
    assert!(matches!(orient(&[p(&[0, 0]), p(&[1, 0, 0]), p(&[0, 1])]), Err(GeometryError::DimensionMismatch(..))));
}

#[test]
fn segment_examples() {
    use SegmentRelation::*;
    let s = |a: &[i64], b: &[i64], c: &[i64], d: &[i64]| segments_intersect(&p(a), &p(b), &p(c), &p(d)).unwrap();
    assert_eq!(s(&[0, 0], &[2, 2], &[0, 2], &[2, 0]), Crossing);
    assert_eq!(s(&[0, 0], &[1, 0], &[1, 0], &[2, 1]), SharedEndpointOnly);
    assert_eq!(s(&[0, 0, 0], &[1, 0, 0], &[0, 0, 1], &[1, 0, 1]), Disjoint);
    // collinear overlap, collinear touching, T-junction, skew lines
    assert_eq!(s(&[0, 0], &[2, 0], &[1, 0], &[3, 0]), Crossing);
    assert_eq!(s(&[0, 0], &[1, 0], &[1, 0], &[3, 0]), SharedEndpointOnly);
    assert_eq!(s(&[0, 0], &[2, 0], &[3, 0], &[4, 0]), Disjoint);
    assert_eq!(s(&[0, 0], &[2, 0], &[1, 0], &[1, 5]), Crossing);
    assert_eq!(s(&[0, 0, 0], &[2, 0, 0], &[1, -1, 1], &[1, 1, 1]), Disjoint);
    assert_eq!(s(&[0, 0, 0], &[2, 0, 0], &[1, -1, -1], &[1, 1, 1]), Crossing);
    assert_eq!(s(&[0, 0, 0], &[2, 2, 2], &[1, 1, 1], &[3, 3, 3]), Crossing);
    assert!(segments_intersect(&p(&[0, 0]), &p(&[0, 0]), &p(&[1, 0]), &p(&[2, 0])).is_err());
}

#[test]
fn canonical_forms() {
    assert_eq!(canon_line(&p(&[0, 0]), &p(&[2, 0])).unwrap(), canon_line(&p(&[5, 0]), &p(&[-1, 0])).unwrap());
    assert_eq!(
        canon_plane(&p(&[0, 0, 0]), &p(&[1, 0, 0]), &p(&[0, 1, 0])).unwrap(),
        canon_plane(&p(&[3, 4, 0]), &p(&[7, -2, 0]), &p(&[1, 1, 0])).unwrap()
    );
    let pts = [p(&[1, 2, 3]), p(&[3, 3, 5]), p(&[-1, 1, 1])];
    let l = canon_line(&pts[0], &pts[1]).unwrap();
    assert_eq!(l, canon_line(&pts[1], &pts[2]).unwrap());
    assert_eq!(l, canon_line(&pts[2], &pts[0]).unwrap());
    assert!(pts.iter().all(|x| l.contains(x)));
    assert!(!l.contains(&p(&[0, 0, 0])));
    let plane = plane_through_line(&l).unwrap();
    assert!(plane.contains_line(&l));
    assert!(canon_plane(&pts[0], &pts[1], &pts[2]).is_err());
}

#[test]
fn triangle_interior() {
    let a = [0i128, 0, 0];
    let b = [4i128, 0, 0];
    let c = [0i128, 4, 0];
    assert!(point_in_triangle_strict(&a, &b, &c, &[1, 1, 0]));
    assert!(!point_in_triangle_strict(&a, &b, &c, &[2, 0, 0]));
    assert!(!point_in_triangle_strict(&a, &b, &c, &[3, 3, 0]));
    assert!(!point_in_triangle_strict(&a, &b, &c, &[1, 1, 1]));
}

fn rat() -> impl Strategy<Value = BigRational> {
    (-20i64..20, 1i64..6).prop_map(|(n, d)| q(n, d))
}

fn pt3() -> impl Strategy<Value = [BigRational; 3]> {
    [rat(), rat(), rat()]
}

fn small_quad() -> impl Strategy<Value = Vec<QPoint>> {
    (2usize..4).prop_flat_map(|d| {
        prop::collection::vec(prop::collection::vec(-4i64..5, d).prop_map(|c| QPoint::from_ints(&c)), 4)
    })
}

/// Cofactor expansion along the last column, independent of `orient3`.
fn det_by_columns(
    a: &[BigRational; 3],
    b: &[BigRational; 3],
    c: &[BigRational; 3],
    d: &[BigRational; 3],
) -> BigRational {
    let m: Vec<[BigRational; 3]> = [b, c, d].iter().map(|r| [0, 1, 2].map(|i| &r[i] - &a[i])).collect();
    let minor = |i: usize, j: usize, k: usize, l: usize| &m[i][j] * &m[k][l] - &m[i][l] * &m[k][j];
    &m[0][2] * minor(1, 0, 2, 1) - &m[1][2] * minor(0, 0, 2, 1) + &m[2][2] * minor(0, 0, 1, 1)
}

fn sign(x: &BigRational) -> i8 {
    use num_traits::Signed;
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100_000))]

    #[test]
    fn orient_matches_second_expansion(a in pt3(), b in pt3(), c in pt3(), d in pt3()) {
        prop_assert_eq!(orient3(&a, &b, &c, &d), sign(&det_by_columns(&a, &b, &c, &d)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn segment_relation_symmetric(v in small_quad()) {
        let (a, b, c, d) = (&v[0], &v[1], &v[2], &v[3]);
        prop_assume!(a != b && c != d);
        let r = segments_intersect(a, b, c, d).unwrap();
        prop_assert_eq!(r, segments_intersect(c, d, a, b).unwrap());
        prop_assert_eq!(r, segments_intersect(b, a, c, d).unwrap());
        prop_assert_eq!(r, segments_intersect(a, b, d, c).unwrap());
    }

    #[test]
    fn integer_frame_agrees_with_rationals(a in pt3(), b in pt3(), c in pt3(), d in pt3()) {
        prop_assume!(a != b && c != d);
        let qs: Vec<QPoint> = [&a, &b, &c, &d].iter().map(|x| QPoint::new(x.to_vec()).unwrap()).collect();
        let exact = classify_segments(&a, &b, &c, &d).unwrap();
        match IntFrame::new(&qs) {
            IntFrame::Small(v) => prop_assert_eq!(exact, classify_segments(&v[0], &v[1], &v[2], &v[3]).unwrap()),
            IntFrame::Big(v) => prop_assert_eq!(exact, classify_segments(&v[0], &v[1], &v[2], &v[3]).unwrap()),
        }
    }

    #[test]
    fn canon_invariant_under_permutation_and_scaling(a in pt3(), b in pt3(), c in pt3(), k in 1i64..7, j in 1i64..7) {
        let s = q(k, j);
        let scale = |x: &[BigRational; 3]| QPoint::new(x.iter().map(|v| v * &s).collect()).unwrap();
        let (pa, pb, pc) = (QPoint::new(a.to_vec()).unwrap(), QPoint::new(b.to_vec()).unwrap(), QPoint::new(c.to_vec()).unwrap());
        if pa != pb {
            let l = canon_line(&pa, &pb).unwrap();
            prop_assert_eq!(&l, &canon_line(&pb, &pa).unwrap());
            let ls = canon_line(&scale(&a), &scale(&b)).unwrap();
            prop_assert_eq!(l.direction(), ls.direction());
            let scaled_base: Vec<BigRational> = l.base().iter().map(|v| v * &s).collect();
            prop_assert_eq!(&scaled_base[..], ls.base());
        }
        if let Ok(pl) = canon_plane(&pa, &pb, &pc) {
            for perm in [(&pb, &pa, &pc), (&pc, &pb, &pa), (&pb, &pc, &pa)] {
                prop_assert_eq!(&pl, &canon_plane(perm.0, perm.1, perm.2).unwrap());
            }
            let ps = canon_plane(&scale(&a), &scale(&b), &scale(&c)).unwrap();
            prop_assert_eq!(pl.normal(), ps.normal());
            prop_assert_eq!(pl.offset() * &s, ps.offset().clone());
        }
    }

    #[test]
    fn primitive_direction_is_primitive(v in prop::collection::vec(-30i64..30, 3)) {
        prop_assume!(v.iter().any(|&x| x != 0));
        let r: Vec<BigRational> = v.iter().map(|&x| q(x, 1)).collect();
        let d = primitive_direction(&r).unwrap();
        use num_integer::Integer;
        let g = d.iter().fold(BigInt::from(0), |g, x| g.gcd(x));
        prop_assert_eq!(g, BigInt::from(1));
    }
}
