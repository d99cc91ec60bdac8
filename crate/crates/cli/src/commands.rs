use std::fmt::Write;
use std::path::PathBuf;

use affcover_bounds::{fort_hedlund_triples, schonheim_k4, BoundReport, Param, KN_ASSERTED_LOWER};
use affcover_constructors::{
    binary_tree_grid, k2q_optimal, kn_small_plane_cover, kpq_plane_book, linear_forest_one_line,
    nested_squares_two_lines, parallel_kpq_lines, pi13_drawing, pi23_drawing, prism_stack_3d, spiral_two_lines,
    ConstructError, ConstructionResult, PrismBase,
};
use affcover_core::families::{complete_binary_tree, complete_bipartite, cycle, nested_squares, path};
use affcover_core::io::{parse_edge_list, parse_graph6, to_graph6};
use affcover_core::{build_family, cartesian_product, FamilySpec, Graph};
use affcover_drawing::{kn_structural_checks, min_edge_plane_cover, CoverBudget, CoverKind};
use affcover_planar::tree_tracks;
use affcover_solvers::{clique_cover_exact, steiner_bounds, Budget};
use clap::ValueEnum;

use crate::cert::{CertificateFile, MetaJson};
use crate::CliError;

pub const ENV_BUDGET_N: &str = "AFFCOVER_BUDGET_N";
pub const ENV_BUDGET_NODES: &str = "AFFCOVER_BUDGET_NODES";

/// Solver budget from the environment, with `--budget-n` taking precedence.
pub fn budget_from_env(flag_n: Option<usize>) -> Budget {
    let env = |k: &str| std::env::var(k).ok().and_then(|v| v.trim().parse::<u64>().ok());
    let max_nodes = env(ENV_BUDGET_NODES).unwrap_or(Budget::default().max_nodes);
    Budget { max_n: flag_n.or(env(ENV_BUDGET_N).map(|v| v as usize)), max_nodes }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSource {
    Family(String),
    Graph6(String),
    Edges(PathBuf),
}

pub fn resolve_graph(src: &GraphSource) -> Result<Graph, CliError> {
    let usage = |e: affcover_core::GraphError| CliError::Usage(e.to_string());
    match src {
        GraphSource::Family(s) => build_family(&s.parse::<FamilySpec>().map_err(usage)?).map_err(usage),
        GraphSource::Graph6(s) => parse_graph6(s.as_bytes()).map_err(usage),
        GraphSource::Edges(p) => parse_edge_list(&std::fs::read(p)?).map_err(usage),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum DrawTarget {
    Pi13,
    Pi23,
    Rho23Kn,
    Rho23Kpq,
    TwoLines,
    ParallelKpq,
    BinaryTree,
    K2q,
    Prism3d,
    NestedSquares,
}

impl DrawTarget {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

fn inapplicable(t: DrawTarget, why: &str) -> CliError {
    CliError::Usage(format!("target {} does not apply: {why}", t.name()))
}

fn kpq_sides(g: &Graph, t: DrawTarget) -> Result<(usize, usize), CliError> {
    let (a, b) = g.complete_bipartite_sides().ok_or_else(|| inapplicable(t, "graph is not complete bipartite"))?;
    let (p, q) = (a.len(), b.len());
    if *g != complete_bipartite(p, q) {
        return Err(inapplicable(t, "K_{p,q} must use the family labelling (smaller side first)"));
    }
    Ok((p, q))
}

fn construct(g: &Graph, t: DrawTarget, seed: u64) -> Result<ConstructionResult, CliError> {
    let n = g.n();
    let r = match t {
        DrawTarget::Pi13 => pi13_drawing(g),
        DrawTarget::Pi23 => pi23_drawing(g, seed),
        DrawTarget::Rho23Kn => {
            if !g.is_complete() {
                return Err(inapplicable(t, "graph is not complete"));
            }
            kn_small_plane_cover(n)
        }
        DrawTarget::Rho23Kpq => {
            let (p, q) = kpq_sides(g, t)?;
            kpq_plane_book(p, q)
        }
        DrawTarget::ParallelKpq => {
            let (p, q) = kpq_sides(g, t)?;
            parallel_kpq_lines(p, q)
        }
        DrawTarget::K2q => match kpq_sides(g, t)? {
            (2, q) => k2q_optimal(q),
            _ => return Err(inapplicable(t, "graph is not K_{2,q}")),
        },
        DrawTarget::TwoLines if affcover_core::is_linear_forest(g, &(0..n).collect::<Vec<_>>()) => {
            linear_forest_one_line(g)
        }
        DrawTarget::TwoLines => {
            let tracks = tree_tracks(g, 0).map_err(|_| inapplicable(t, "graph is not a tree"))?;
            spiral_two_lines(g, &tracks)
        }
        DrawTarget::BinaryTree => {
            let h = (n + 1).trailing_zeros() as usize;
            if n == 0 || !(n + 1).is_power_of_two() || *g != complete_binary_tree(h - 1) {
                return Err(inapplicable(t, "graph is not a complete binary tree in heap order"));
            }
            binary_tree_grid(h - 1)
        }
        DrawTarget::Prism3d => {
            if n.is_multiple_of(4) && n > 0 && *g == cartesian_product(&path(n / 4), &cycle(4)) {
                prism_stack_3d(n / 4, PrismBase::C4)
            } else if n.is_multiple_of(3) && n > 0 && *g == cartesian_product(&path(n / 3), &cycle(3)) {
                prism_stack_3d(n / 3, PrismBase::C3)
            } else {
                return Err(inapplicable(t, "graph is not a stack of C4 or C3 prisms"));
            }
        }
        DrawTarget::NestedSquares => {
            if !n.is_multiple_of(4) || n == 0 || *g != nested_squares(n / 4) {
                return Err(inapplicable(t, "graph is not a nested-squares graph"));
            }
            nested_squares_two_lines(n / 4)
        }
    };
    r.map_err(|e| match e {
        ConstructError::Domain(m) => inapplicable(t, &m),
        other => CliError::Construction(other.to_string()),
    })
}

/// Runs a construction and packages it as a certificate.
pub fn draw(g: &Graph, t: DrawTarget, seed: u64) -> Result<(CertificateFile, ConstructionResult), CliError> {
    let c = construct(g, t, seed)?;
    let seed = matches!(t, DrawTarget::Pi23).then_some(seed);
    let meta = MetaJson::new(t.name(), seed, Some(c.claimed_bound));
    Ok((CertificateFile::from_parts(&c.drawing, &c.witness, meta), c))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub dim: usize,
    pub kind: CoverKind,
    pub objects: usize,
    pub claimed: Option<usize>,
    /// For plane covers of complete graphs: vertices on each plane.
    pub plane_vertices: Option<Vec<Vec<usize>>>,
}

impl VerifyReport {
    pub fn render(&self) -> String {
        let mut s = format!(
            "PASS: crossing-free {}D drawing of n={} m={} ({}); witness {} with {} objects",
            self.dim, self.n, self.m, self.graph6, self.kind, self.objects
        );
        if let Some(c) = self.claimed {
            let _ = write!(s, "; claimed bound {c}");
        }
        if let Some(pv) = &self.plane_vertices {
            let sizes: Vec<String> = pv.iter().map(|p| p.len().to_string()).collect();
            let _ = write!(s, "; plane sizes [{}]; structural checks passed", sizes.join(", "));
        }
        s
    }
}

/// Parses, re-verifies and cross-checks a certificate.
pub fn verify(text: &str) -> Result<VerifyReport, CliError> {
    let file = CertificateFile::parse(text)?;
    let loaded = file.load()?;
    let (d, w) = (&loaded.drawing, &loaded.witness);
    if let Some(c) = loaded.meta.claimed_bound {
        if w.count() > c {
            return Err(CliError::Witness(format!("witness has {} objects, above the claimed {c}", w.count())));
        }
    }
    let mut plane_vertices = None;
    if w.kind == CoverKind::PlanesForEdges && d.graph().is_complete() && d.dim() == 3 {
        let r = kn_structural_checks(d, w).map_err(|e| CliError::Witness(e.to_string()))?;
        if !r.passed() {
            return Err(CliError::Witness(format!("structural check failed: {:?}", r.violations[0])));
        }
        plane_vertices = Some(r.plane_vertices);
    }
    Ok(VerifyReport {
        graph6: file.graph.clone(),
        n: d.graph().n(),
        m: d.graph().m(),
        dim: d.dim(),
        kind: w.kind,
        objects: w.count(),
        claimed: loaded.meta.claimed_bound,
        plane_vertices,
    })
}

pub fn bounds_markdown(g: &Graph, r: &BoundReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "Bounds for {} (n={}, m={})\n", to_graph6(g), r.n, r.m);
    let _ = writeln!(s, "| parameter | lower | upper | lower rule | upper rule |");
    let _ = writeln!(s, "|---|---|---|---|---|");
    let rule = |e: Option<&affcover_bounds::Entry>| {
        e.map_or("-".to_string(), |e| {
            format!("{} ({}{})", e.rule.id(), e.trust, if e.exact { "" } else { ", inexact" })
        })
    };
    for p in Param::ALL {
        let b = r.get(p);
        let _ =
            writeln!(s, "| {p} | {} | {} | {} | {} |", b.lower, b.upper, rule(b.best_lower()), rule(b.best_upper()));
    }
    let _ = writeln!(s, "\nProvenance:\n");
    for p in Param::ALL {
        for e in &r.get(p).provenance {
            let side = match e.side {
                affcover_bounds::Side::Lower => ">=",
                affcover_bounds::Side::Upper => "<=",
            };
            let counted = if e.counted { "" } else { " [not counted]" };
            let _ = writeln!(s, "- {p} {side} {} by {} ({}): {}{counted}", e.value, e.rule.id(), e.trust, e.note);
        }
    }
    s
}

/// One column of the complete-graph plane-cover table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnRow {
    pub n: usize,
    pub asserted_lower: usize,
    /// Lower bound on `c(K_n, K_4)` proven here, and whether the search finished.
    pub machine_lower: usize,
    pub machine_exact: bool,
    /// Plane count measured on the shipped certificate.
    pub certified_upper: Option<usize>,
    pub triples: usize,
}

pub fn kn_rho23_rows(budget: &Budget) -> Vec<KnRow> {
    KN_ASSERTED_LOWER
        .iter()
        .map(|&(n, asserted_lower)| {
            let (machine_lower, machine_exact) = if n <= 8 {
                let c = clique_cover_exact(n, 4, budget);
                (c.lower, c.exact)
            } else {
                (schonheim_k4(n), false)
            };
            let certified_upper = kn_small_plane_cover(n)
                .ok()
                .and_then(|c| min_edge_plane_cover(&c.drawing, &CoverBudget::default()).ok())
                .map(|r| r.count);
            KnRow { n, asserted_lower, machine_lower, machine_exact, certified_upper, triples: fort_hedlund_triples(n) }
        })
        .collect()
}

pub fn table_kn_rho23(budget: &Budget) -> String {
    let rows = kn_rho23_rows(budget);
    let cells = |f: &dyn Fn(&KnRow) -> String| rows.iter().map(f).collect::<Vec<_>>().join(" | ");
    let mut s = String::new();
    let _ = writeln!(s, "| n | {} |", cells(&|r| r.n.to_string()));
    let _ = writeln!(s, "|---|{}", "---|".repeat(rows.len()));
    let _ = writeln!(s, "| >= (asserted) | {} |", cells(&|r| r.asserted_lower.to_string()));
    let _ = writeln!(s, "| >= c(K_n,K_4) (machine-verified) | {} |", cells(&|r| r.machine_lower.to_string()));
    let _ =
        writeln!(s, "| <= (certified) | {} |", cells(&|r| r.certified_upper.map_or(String::new(), |u| u.to_string())));
    let _ = writeln!(s, "| c(K_n,K_3) | {} |", cells(&|r| r.triples.to_string()));
    s
}

pub fn table_steiner() -> String {
    let mut s = String::new();
    let _ = writeln!(s, "| n | K3 counting | S(2,3,n) | c(K_n,K_3) | K4 counting | S(2,4,n) | K4 Schonheim |");
    let _ = writeln!(s, "|---|---|---|---|---|---|---|");
    for n in 4..=16 {
        let (l3, e3) = steiner_bounds(n, 3);
        let (l4, e4) = steiner_bounds(n, 4);
        let yn = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(
            s,
            "| {n} | {l3} | {} | {} | {l4} | {} | {} |",
            yn(e3),
            fort_hedlund_triples(n),
            yn(e4),
            schonheim_k4(n)
        );
    }
    s
}
