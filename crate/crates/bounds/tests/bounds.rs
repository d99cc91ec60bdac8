use affcover_bounds::*;
use affcover_core::families::{self, complete, complete_bipartite, cycle, path};
use affcover_core::{cartesian_product, Graph};
use affcover_solvers::{clique_cover_exact, Budget};
use proptest::prelude::*;

fn v(x: usize) -> Value {
    Value::int(x)
}

#[test]
fn k6_plane_cover_interval() {
    let r = bound_report(&complete(6), &Budget::default());
    assert_eq!(r.lower(Param::Rho23), &v(3));
    assert_eq!(r.upper(Param::Rho23), &v(4));
    let asserted =
        r.get(Param::Rho23).provenance.iter().find(|e| e.trust == Trust::Asserted).expect("asserted entry is recorded");
    assert_eq!(asserted.value, v(4));
    assert!(!asserted.counted);
    assert_eq!(r.get(Param::Rho23).best_upper().unwrap().trust, Trust::Certified);

    let opts = ReportOptions { trust_asserted: true, ..ReportOptions::default() };
    let r = bound_report_with(&complete(6), &opts);
    assert_eq!(r.lower(Param::Rho23), &v(4));
    assert!(r.inconsistencies().is_empty());
}

#[test]
fn complete_graph_uppers_match_table() {
    for (n, up) in [(4, 1), (5, 3), (6, 4), (7, 6)] {
        let r = bound_report(&complete(n), &Budget::default());
        assert_eq!(r.upper(Param::Rho23), &v(up), "K{n}");
        assert_eq!(r.lower(Param::Rho13), &v(n * (n - 1) / 2));
        assert_eq!(r.lower(Param::Pi13), &v(n.div_ceil(2)));
        assert!(r.inconsistencies().is_empty());
    }
    let r = bound_report(&complete(5), &Budget::default());
    assert_eq!(r.lower(Param::Rho23), &v(3));
    assert_eq!(r.lower(Param::Pi12), &Value::Infinite);
}

#[test]
fn nested_triangles_lower_bound() {
    for k in 4..=8 {
        let g = cartesian_product(&path(k), &cycle(3));
        let r = bound_report(&g, &Budget::default());
        let n = 3 * k;
        let tk = r.get(Param::Rho12).provenance.iter().find(|e| e.rule == Rule::TkLower).unwrap();
        assert_eq!(tk.value, v(n.div_ceil(2)));
        assert_eq!(r.lower(Param::Rho12), &v(n.div_ceil(2)), "k={k}");
    }
    let r = bound_report(&cartesian_product(&path(3), &cycle(4)), &Budget::default());
    assert!(r.get(Param::Rho12).provenance.iter().all(|e| e.rule != Rule::TkLower));
}

#[test]
fn path_is_one_line() {
    let g = path(5);
    let opts = ReportOptions { certificates: standard_certificates(&g, 0), ..ReportOptions::default() };
    let r = bound_report_with(&g, &opts);
    for p in Param::ALL {
        assert_eq!(r.lower(p), &v(1), "{p}");
        assert_eq!(r.upper(p), &v(1), "{p}");
    }
}

#[test]
fn bipartite_identities() {
    for q in 1..=8 {
        let r = bound_report(&complete_bipartite(2, q), &Budget::default());
        let n = q + 2;
        assert_eq!(r.lower(Param::Rho12), &v((3 * n - 7).div_ceil(2)), "q={q}");
        assert_eq!(r.upper(Param::Rho23), &v(1));
    }
    let r = bound_report(&complete_bipartite(3, 5), &Budget::default());
    assert_eq!(r.lower(Param::PiBar13), &v(4));
    assert_eq!(r.upper(Param::Rho23), &v(2));
    assert_eq!(r.lower(Param::Rho13), &v(8));
}

#[test]
fn empty_and_single_vertex() {
    let r = bound_report(&Graph::empty(0), &Budget::default());
    assert!(Param::ALL.iter().all(|&p| r.upper(p) == &v(0)));
    let r = bound_report(&Graph::empty(1), &Budget::default());
    assert!(Param::ALL.iter().all(|&p| r.lower(p) == &v(1) && r.upper(p) == &v(1)));
}

#[test]
fn triangle_counts_agree_with_search() {
    for n in 3..=9 {
        let cc = clique_cover_exact(n, 3, &Budget::default());
        assert!(cc.exact);
        assert_eq!(fort_hedlund_triples(n), cc.value, "n={n}");
    }
    for n in 4..=8 {
        let cc = clique_cover_exact(n, 4, &Budget::default());
        assert!(schonheim_k4(n) <= cc.value);
    }
    assert_eq!(schonheim_k4(9), 7);
}

#[test]
fn icosahedron_triangulation_rule() {
    let r = bound_report(&families::icosahedron(), &Budget::default());
    let e = r.get(Param::Pi12).provenance.iter().find(|e| e.rule == Rule::L12).unwrap();
    // The dual is the dodecahedron, which is Hamiltonian.
    assert_eq!(e.value, v(1));
    assert!(e.exact);
    assert!(r.inconsistencies().is_empty());
}

#[test]
fn attached_certificates_tighten_uppers() {
    let g = families::petersen();
    let certs = standard_certificates(&g, 3);
    assert!(!certs.is_empty());
    let opts = ReportOptions { certificates: certs.clone(), ..ReportOptions::default() };
    let r = bound_report_with(&g, &opts);
    for c in &certs {
        for p in c.params() {
            assert!(r.upper(p) <= &v(c.value()));
            assert!(r.lower(p) <= &v(c.value()), "{} {p}", c.name);
        }
    }
    let json = serde_json::to_string(&r).unwrap();
    assert!(json.contains("\"rho^1_3\""));
}

fn random_graph() -> impl Strategy<Value = Graph> {
    (1usize..10).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn intervals_are_consistent_and_closed(g in random_graph()) {
        let r = bound_report(&g, &Budget::default());
        prop_assert!(r.inconsistencies().is_empty());
        let mut again = r.clone();
        again.close();
        prop_assert_eq!(again, r);
    }

    #[test]
    fn lower_bounds_never_beat_certificates(g in random_graph(), seed in 0u64..4) {
        let certs = standard_certificates(&g, seed);
        let r = bound_report(&g, &Budget::default());
        for c in &certs {
            for p in c.params() {
                prop_assert!(r.lower(p) <= &v(c.value()), "{} {}: lower {} > {}", c.name, p, r.lower(p), c.value());
            }
        }
    }
}
