use affcover_core::families::{complete, complete_bipartite, cycle, path, petersen};
use affcover_core::{build_family, is_linear_forest, Graph};
use affcover_planar::is_planar;
use affcover_solvers::*;
use proptest::prelude::*;

fn fam(s: &str) -> Graph {
    build_family(&s.parse().unwrap()).unwrap()
}

fn b() -> Budget {
    Budget::default()
}

/// Smallest r admitting a labelling in which every class passes `ok`.
fn brute_partition(g: &Graph, ok: impl Fn(&Graph, &[usize]) -> bool) -> usize {
    let n = g.n();
    for r in 1..=n {
        let mut labels = vec![0usize; n];
        loop {
            let good = (0..r).all(|c| {
                let cls: Vec<usize> = (0..n).filter(|&v| labels[v] == c).collect();
                ok(g, &cls)
            });
            if good {
                return r;
            }
            let mut i = 0;
            while i < n && labels[i] == r - 1 {
                labels[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            labels[i] += 1;
        }
    }
    0
}

fn brute_chi(g: &Graph) -> usize {
    brute_partition(g, |g, c| g.induced(c).m() == 0)
}

fn brute_treewidth(g: &Graph) -> usize {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = g.n();
    perms(n)
        .into_iter()
        .map(|order| {
            let mut adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
            let mut gone = vec![false; n];
            let mut w = 0;
            for &v in &order {
                let nb: Vec<usize> = (0..n).filter(|&x| !gone[x] && adj[v][x]).collect();
                w = w.max(nb.len());
                for &a in &nb {
                    for &c in &nb {
                        if a != c {
                            adj[a][c] = true;
                        }
                    }
                }
                gone[v] = true;
            }
            w
        })
        .min()
        .unwrap()
}

fn brute_bisection(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == n / 2)
        .map(|s| g.edges().iter().filter(|&&(u, v)| (s >> u & 1) != (s >> v & 1)).count())
        .min()
        .unwrap()
}

#[test]
fn chromatic_examples() {
    assert_eq!(chromatic_number(&complete(4), &b()).value, 4);
    assert_eq!(chromatic_number(&cycle(5), &b()).value, 3);
    let p = chromatic_number(&petersen(), &b());
    assert!(p.exact && p.value == 3 && p.partition.validate(&petersen()));
    assert_eq!(brute_chi(&petersen()), 3);
    // lexicographically first optimal coloring
    assert_eq!(chromatic_number(&cycle(5), &b()).partition.labels(5), vec![0, 1, 0, 1, 2]);
    let big = Budget { max_n: Some(3), max_nodes: 1000 };
    let r = chromatic_number(&cycle(5), &big);
    assert!(!r.exact && r.partition.validate(&cycle(5)));
}

#[test]
fn lva_examples() {
    assert_eq!(lva_exact(&cycle(5), &b()).value, 2);
    assert_eq!(lva_exact(&path(7), &b()).value, 1);
    let g = fam("planar_lva3");
    let r = lva_exact(&g, &b());
    assert!(r.exact && r.value == 3 && r.partition.validate(&g));
    assert!(r.partition.classes.iter().all(|c| is_linear_forest(&g, c)));
    assert_eq!(lva_exact(&complete(6), &b()).value, 3);
    let capped = lva_exact(&complete(6), &Budget { max_n: Some(4), max_nodes: 10 });
    assert!(!capped.exact && capped.partition.validate(&complete(6)));
}

#[test]
fn vertex_thickness_examples() {
    assert_eq!(vertex_thickness_exact(&complete(4), &b()).value, 1);
    let k9 = vertex_thickness_exact(&complete(9), &b());
    assert!(k9.exact && k9.value == 3 && k9.partition.validate(&complete(9)));
    assert_eq!(vertex_thickness_exact(&complete(5), &b()).value, 2);
    assert_eq!(brute_partition(&complete(5), |g, c| is_planar(&g.induced(c))), 2);
    assert_eq!(vertex_thickness_exact(&complete_bipartite(3, 3), &b()).value, 2);
    let fb = vertex_thickness_exact(&complete(9), &Budget { max_n: Some(4), max_nodes: 1 });
    assert!(!fb.exact && fb.value == 3 && fb.partition.validate(&complete(9)));
}

#[test]
fn treewidth_examples() {
    assert_eq!(treewidth_exact(&complete(5), &b()).upper, 4);
    assert_eq!(treewidth_exact(&path(6), &b()).upper, 1);
    assert_eq!(treewidth_exact(&fam("complete_binary_tree:3"), &b()).upper, 1);
    assert_eq!(treewidth_exact(&cycle(6), &b()).upper, 2);
    assert_eq!(brute_treewidth(&cycle(6)), 2);
    assert_eq!(treewidth_exact(&petersen(), &b()).upper, 4);
    let grid = fam("c4xp:4");
    let tw = treewidth_exact(&grid, &b());
    assert!(tw.exact);
    let capped = treewidth_exact(&grid, &Budget { max_n: Some(5), max_nodes: 1 });
    assert!(capped.lower <= tw.upper && tw.upper <= capped.upper);
}

#[test]
fn bisection_examples() {
    assert_eq!(bisection_width_exact(&complete(4), &b()).value, 4);
    assert_eq!(bisection_width_exact(&path(6), &b()).value, 1);
    assert_eq!(bisection_width_exact(&complete_bipartite(3, 3), &b()).value, 5);
    assert_eq!(brute_bisection(&complete_bipartite(3, 3)), 5);
    assert_eq!(brute_bisection(&complete(4)), 4);
    let r = bisection_width_exact(&petersen(), &b());
    assert_eq!(r.value, brute_bisection(&petersen()));
    assert_eq!(r.side.len(), 5);
    let h = bisection_width_exact(&petersen(), &Budget { max_n: Some(4), max_nodes: 1 });
    assert!(!h.exact && h.value >= r.value);
}

#[test]
fn clique_cover_examples() {
    for (n, s, want) in [(6, 4, 3), (7, 3, 7), (5, 4, 3)] {
        let r = clique_cover_exact(n, s, &b());
        assert!(r.exact && r.cover.validate());
        assert_eq!((r.value, r.cover.blocks.len()), (want, want), "c(K{n},K{s})");
    }
    let k9 = clique_cover_exact(9, 4, &b());
    assert!(k9.lower >= 7 && k9.cover.validate());
}

#[test]
fn clique_cover_matches_subset_enumeration() {
    for (n, s) in [(4, 3), (5, 3), (6, 3), (6, 4), (5, 4)] {
        let blocks: Vec<Vec<usize>> = (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == s)
            .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
            .collect();
        let best = (0u32..1 << blocks.len())
            .filter(|pick| {
                (0..n).all(|i| {
                    (i + 1..n).all(|j| {
                        (0..blocks.len())
                            .any(|k| pick >> k & 1 == 1 && blocks[k].contains(&i) && blocks[k].contains(&j))
                    })
                })
            })
            .map(|pick| pick.count_ones() as usize)
            .min()
            .unwrap();
        assert_eq!(clique_cover_exact(n, s, &b()).value, best, "c(K{n},K{s})");
    }
}

#[test]
fn steiner_examples() {
    assert_eq!(steiner_bounds(7, 3), (7, true));
    assert_eq!(steiner_bounds(9, 4), (6, false));
    assert_eq!(steiner_bounds(13, 4), (13, true));
}

#[test]
fn clique_cover_meets_steiner_bound() {
    for (s, max_n) in [(3, 13), (4, 10)] {
        for n in s..=max_n {
            let r = clique_cover_exact(n, s, &b());
            let (lower, exists) = steiner_bounds(n, s);
            assert!(r.exact && r.cover.validate());
            assert!(r.value >= lower);
            if exists {
                assert_eq!(r.value, lower, "n = {n}, s = {s}");
            }
        }
    }
}

#[test]
fn nine_lva_sweep_counts() {
    let rows = nine_lva_sweep(9, &b());
    let counts: Vec<usize> = rows.iter().map(|r| r.triangulations).collect();
    assert_eq!(counts, vec![1, 1, 2, 5, 14, 50]);
    assert!(rows[..5].iter().all(|r| r.max_lva == 2));
    assert_eq!(rows[5].max_lva, 3);
}

fn random_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0f64..1.0).prop_flat_map(|(n, _)| {
        let pairs = n * (n - 1) / 2;
        (Just(n), prop::collection::vec(any::<bool>(), pairs), 1u8..5).prop_map(|(n, bits, thin)| {
            let all: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            let keep =
                all.into_iter().enumerate().filter(|(i, _)| bits[*i] && (*i % thin as usize == 0)).map(|(_, e)| e);
            Graph::from_edges(n, keep).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn solvers_match_brute_force(g in random_graph(7)) {
        let chi = chromatic_number(&g, &b());
        prop_assert_eq!(chi.value, brute_chi(&g));
        prop_assert!(chi.partition.validate(&g));
        let lva = lva_exact(&g, &b());
        prop_assert_eq!(lva.value, brute_partition(&g, is_linear_forest));
        prop_assert!(lva.partition.validate(&g));
        let vt = vertex_thickness_exact(&g, &b());
        prop_assert_eq!(vt.value, brute_partition(&g, |g, c| is_planar(&g.induced(c))));
        prop_assert!(vt.partition.validate(&g));
        prop_assert_eq!(treewidth_exact(&g, &b()).upper, brute_treewidth(&g));
        if g.n() >= 2 {
            prop_assert_eq!(bisection_width_exact(&g, &b()).value, brute_bisection(&g));
        }
    }

    #[test]
    fn partition_chains_hold(g in random_graph(12)) {
        let chi = chromatic_number(&g, &b()).value;
        let lva = lva_exact(&g, &b());
        let vt = vertex_thickness_exact(&g, &b());
        prop_assert!(lva.exact && vt.exact);
        prop_assert!(chi <= 2 * lva.value && lva.value <= chi);
        prop_assert!(chi <= 4 * vt.value && vt.value <= chi);
        prop_assert!(vt.value <= g.n().div_ceil(4));
        if g.is_connected() {
            prop_assert!(lva.value <= g.max_degree() / 2 + 1);
        }
        prop_assert!(lva.partition.validate(&g) && vt.partition.validate(&g));
    }
}

#[test]
fn cover_decision_brackets_the_optimum() {
    let b = Budget::default();
    for s in [3, 4] {
        for n in 3..=8 {
            let v = clique_cover_exact(n, s, &b).value;
            let c = clique_cover_within(n, s, v, &b).unwrap().expect("optimum is attainable");
            assert!(c.validate() && c.blocks.len() <= v);
            assert!(clique_cover_within(n, s, v - 1, &b).unwrap().is_none(), "n={n} s={s}");
        }
    }
    assert!(clique_cover_within(9, 4, 6, &b).unwrap().is_none());
}
