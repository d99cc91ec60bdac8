use std::path::Path;
use std::process::{Command, Output};

use affcover_cli::{draw, kn_rho23_rows, resolve_graph, verify, CertificateFile, DrawTarget, GraphSource};
use affcover_solvers::Budget;
use clap::ValueEnum;

fn affcover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affcover")).args(args).output().expect("binary runs")
}

fn family(s: &str) -> affcover_core::Graph {
    resolve_graph(&GraphSource::Family(s.into())).unwrap()
}

fn draw_to(dir: &Path, fam: &str, target: &str, name: &str) -> String {
    let out = dir.join(name);
    let o = affcover(&["draw", "--family", fam, "--target", target, "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out.to_str().unwrap().to_string()
}

#[test]
fn target_names() {
    let names: Vec<String> = DrawTarget::value_variants().iter().map(|t| t.name()).collect();
    assert_eq!(
        names,
        [
            "pi13",
            "pi23",
            "rho23_kn",
            "rho23_kpq",
            "two_lines",
            "parallel_kpq",
            "binary_tree",
            "k2q",
            "prism3d",
            "nested_squares"
        ]
    );
}

#[test]
fn k6_certificate_has_four_planes() {
    let dir = tempfile::tempdir().unwrap();
    let f = draw_to(dir.path(), "complete:6", "rho23_kn", "k6.json");
    let o = affcover(&["verify", &f]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("PASS"), "{text}");
    assert!(text.contains("with 4 objects"), "{text}");
    assert!(text.contains("structural checks passed"));
}

#[test]
fn path_needs_one_line() {
    let (file, _) = draw(&family("path:5"), DrawTarget::Pi13, 0).unwrap();
    assert_eq!(file.witness.objects.len(), 1);
    assert_eq!(verify(&file.emit()).unwrap().objects, 1);
}

#[test]
fn round_trip_is_byte_identical() {
    for (fam, t) in [
        ("complete:6", DrawTarget::Rho23Kn),
        ("kpq:3,5", DrawTarget::ParallelKpq),
        ("bintree:4", DrawTarget::BinaryTree),
        ("petersen", DrawTarget::Pi23),
    ] {
        let (file, _) = draw(&family(fam), t, 1).unwrap();
        let text = file.emit();
        let back = CertificateFile::parse(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.emit(), text);
        assert_eq!(back.load().unwrap().to_file().emit(), text, "{fam}");
    }
}

#[test]
fn tampered_certificate_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let (mut file, _) = draw(&family("complete:4"), DrawTarget::Rho23Kn, 0).unwrap();
    // Put vertex 3 on top of vertex 0.
    file.drawing[3] = file.drawing[0].clone();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, file.emit()).unwrap();
    let o = affcover(&["verify", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("verification failed"), "{err}");

    let (mut file, _) = draw(&family("cycle:4"), DrawTarget::Pi13, 0).unwrap();
    file.witness.assignment[0] = 7;
    assert_eq!(verify(&file.emit()).unwrap_err().exit_code(), 1);
    assert_eq!(verify("{ not json").unwrap_err().exit_code(), 1);
}

#[test]
fn crossing_is_reported_with_the_pair() {
    // A square drawn as a bow tie.
    let (mut file, _) = draw(&family("cycle:4"), DrawTarget::Pi13, 0).unwrap();
    let z = || ["0".to_string(), "1".to_string()];
    let one = || ["1".to_string(), "1".to_string()];
    file.drawing = vec![vec![z(), z(), z()], vec![one(), one(), z()], vec![one(), z(), z()], vec![z(), one(), z()]];
    let e = verify(&file.emit()).unwrap_err();
    assert!(e.to_string().contains("cross"), "{e}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(affcover(&["draw", "--family", "complete:5", "--target", "k2q"]).status.code(), Some(2));
    assert_eq!(affcover(&["draw", "--target", "pi13"]).status.code(), Some(2));
    assert_eq!(
        affcover(&["draw", "--family", "complete:3", "--graph6", "Bw", "--target", "pi13"]).status.code(),
        Some(2)
    );
    assert_eq!(affcover(&["draw", "--family", "nosuch:3", "--target", "pi13"]).status.code(), Some(2));
    assert_eq!(affcover(&["frobnicate"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let f = draw_to(dir.path(), "complete:6", "rho23_kn", "k6.json");
    assert_eq!(affcover(&["export", &f, "--format", "svg2d"]).status.code(), Some(2));
}

#[test]
fn graph_sources_agree() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("c5.txt");
    std::fs::write(&p, "# pentagon\n5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let a = resolve_graph(&GraphSource::Edges(p)).unwrap();
    let b = resolve_graph(&GraphSource::Graph6(affcover_core::io::to_graph6(&a))).unwrap();
    assert_eq!(a, b);
    assert_eq!(a, family("cycle:5"));
}

#[test]
fn iso3d_svg_colours_each_plane() {
    let dir = tempfile::tempdir().unwrap();
    let f = draw_to(dir.path(), "complete:6", "rho23_kn", "k6.json");
    let o = affcover(&["export", &f, "--format", "svg-iso3d"]);
    assert!(o.status.success());
    let svg = String::from_utf8(o.stdout).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let groups: Vec<_> = doc.descendants().filter(|n| n.attribute("class") == Some("plane")).collect();
    assert_eq!(groups.len(), 4);
    let colours: std::collections::HashSet<_> = groups.iter().map(|g| g.attribute("stroke").unwrap()).collect();
    assert_eq!(colours.len(), 4);
    let edges: usize = groups.iter().map(|g| g.children().filter(|c| c.has_tag_name("line")).count()).sum();
    assert_eq!(edges, 15);
}

#[test]
fn svg2d_dashes_cover_lines() {
    let dir = tempfile::tempdir().unwrap();
    let f = draw_to(dir.path(), "path:5", "two_lines", "p5.json");
    let svg = String::from_utf8(affcover(&["export", &f, "--format", "svg2d"]).stdout).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let dashed = doc.descendants().filter(|n| n.attribute("stroke-dasharray").is_some()).count();
    let file = CertificateFile::parse(&std::fs::read_to_string(&f).unwrap()).unwrap();
    assert_eq!(dashed, file.witness.objects.len());
    assert_eq!(dashed, 1);

    let f = draw_to(dir.path(), "bintree:4", "binary_tree", "t.json");
    let svg = String::from_utf8(affcover(&["export", &f, "--format", "svg2d"]).stdout).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(doc.descendants().filter(|n| n.has_tag_name("circle")).count(), 31);
}

#[test]
fn obj_lists_vertices_and_edges() {
    let dir = tempfile::tempdir().unwrap();
    let f = draw_to(dir.path(), "c4xp:8", "prism3d", "prism.json");
    let obj = String::from_utf8(affcover(&["export", &f, "--format", "obj"]).stdout).unwrap();
    let g = family("c4xp:8");
    assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), g.n());
    assert_eq!(obj.lines().filter(|l| l.starts_with("l ")).count(), g.m());
}

#[test]
fn kn_table_upper_row() {
    let rows = kn_rho23_rows(&Budget::default());
    let ups: Vec<usize> = rows.iter().filter_map(|r| r.certified_upper).collect();
    assert_eq!(ups, [1, 3, 4, 6, 7]);
    let o = affcover(&["table", "kn_rho23"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("| <= (certified) | 1 | 3 | 4 | 6 | 7 |"), "{text}");
    assert!(affcover(&["table", "steiner"]).status.success());
}

#[test]
fn bounds_json_is_parseable() {
    let o = affcover(&["bounds", "--family", "kpq:2,4", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["params"]["rho^2_3"].is_object());
}

#[test]
fn verifier_accepts_every_draw() {
    let matrix: &[(&str, &[DrawTarget])] = &[
        ("complete:4", &[DrawTarget::Pi13, DrawTarget::Pi23, DrawTarget::Rho23Kn]),
        ("complete:7", &[DrawTarget::Pi13, DrawTarget::Pi23, DrawTarget::Rho23Kn]),
        ("complete:9", &[DrawTarget::Pi23]),
        ("kpq:2,5", &[DrawTarget::Rho23Kpq, DrawTarget::ParallelKpq, DrawTarget::K2q, DrawTarget::Pi13]),
        ("kpq:4,4", &[DrawTarget::Rho23Kpq, DrawTarget::ParallelKpq]),
        ("path:7", &[DrawTarget::TwoLines, DrawTarget::Pi13]),
        ("bintree:3", &[DrawTarget::BinaryTree, DrawTarget::TwoLines]),
        ("c4xp:5", &[DrawTarget::Prism3d, DrawTarget::Pi23]),
        ("c3xp:4", &[DrawTarget::Prism3d, DrawTarget::Pi13]),
        ("nested_squares:3", &[DrawTarget::NestedSquares]),
        ("petersen", &[DrawTarget::Pi13, DrawTarget::Pi23]),
    ];
    for (fam, targets) in matrix {
        let g = family(fam);
        for &t in *targets {
            let (file, c) = draw(&g, t, 2).unwrap_or_else(|e| panic!("{fam} {}: {e}", t.name()));
            let r = verify(&file.emit()).unwrap_or_else(|e| panic!("{fam} {}: {e}", t.name()));
            assert!(r.objects <= c.claimed_bound);
            assert_eq!(r.n, g.n());
        }
    }
}

fn random_graph() -> impl proptest::strategy::Strategy<Value = affcover_core::Graph> {
    use proptest::prelude::*;
    (1usize..9).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            affcover_core::Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(32))]

    #[test]
    fn drawn_certificates_round_trip_and_verify(g in random_graph(), seed in 0u64..8) {
        for t in [DrawTarget::Pi13, DrawTarget::Pi23] {
            let (file, c) = draw(&g, t, seed).unwrap();
            let text = file.emit();
            let back = CertificateFile::parse(&text).unwrap();
            proptest::prop_assert_eq!(back.emit(), text.clone());
            let r = verify(&text).unwrap();
            proptest::prop_assert_eq!(r.objects, c.witness.count());
        }
    }
}
