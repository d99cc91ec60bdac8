use affcover_constructors::{kn_small_plane_cover, spiral_two_lines};
use affcover_core::families::{cycle, path};
use affcover_core::{cartesian_product, essential_vertices, Graph};
use affcover_planar::{dual_circumference_bound, is_planar, tree_tracks};
use affcover_solvers::{
    bisection_width_exact, chromatic_number, clique_cover_exact, lva_exact, treewidth_exact, vertex_thickness_exact,
    Budget,
};
use serde::Serialize;

use crate::report::{BoundReport, Entry, Side, Trust, Value};
use crate::{Certificate, Param};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    /// Essential vertices need pairwise line intersections.
    L1,
    /// Degree-weighted intersection count.
    L2,
    /// Bisection width.
    L3,
    /// Treewidth over three.
    L4,
    /// Chromatic number envelope and the maximum-degree bound for lines.
    L5,
    /// Linear vertex arboricity.
    L6,
    /// Vertex thickness and the chromatic envelope for planes.
    L7,
    /// Linear arboricity floor.
    L8,
    /// Maximum degree over two, and one line per edge.
    L9,
    /// Complete graphs.
    L10,
    /// Complete bipartite graphs.
    L11,
    /// Longest dual cycle of a triangulation.
    L12,
    /// Trees on two lines.
    L13,
    /// Attached certificates.
    L14,
    /// Order closure between parameters.
    L15,
    /// Nested triangles need a line per two vertices in the plane.
    TkLower,
    /// Non-planar graphs have no planar drawing.
    Planarity,
    /// At least one object; trivial placements.
    Trivial,
}

impl Rule {
    pub const ALL: [Rule; 18] = [
        Rule::L1,
        Rule::L2,
        Rule::L3,
        Rule::L4,
        Rule::L5,
        Rule::L6,
        Rule::L7,
        Rule::L8,
        Rule::L9,
        Rule::L10,
        Rule::L11,
        Rule::L12,
        Rule::L13,
        Rule::L14,
        Rule::L15,
        Rule::TkLower,
        Rule::Planarity,
        Rule::Trivial,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Rule::L1 => "L1",
            Rule::L2 => "L2",
            Rule::L3 => "L3",
            Rule::L4 => "L4",
            Rule::L5 => "L5",
            Rule::L6 => "L6",
            Rule::L7 => "L7",
            Rule::L8 => "L8",
            Rule::L9 => "L9",
            Rule::L10 => "L10",
            Rule::L11 => "L11",
            Rule::L12 => "L12",
            Rule::L13 => "L13",
            Rule::L14 => "L14",
            Rule::L15 => "L15",
            Rule::TkLower => "Tk",
            Rule::Planarity => "P0",
            Rule::Trivial => "U0",
        }
    }
}

/// Published lower bounds on `rho^2_3(K_n)` for `n = 4..=9`; only the first
/// three follow from the clique-cover bounds computed here.
pub const KN_ASSERTED_LOWER: [(usize, usize); 6] = [(4, 1), (5, 3), (6, 4), (7, 6), (8, 6), (9, 7)];

#[derive(Debug, Clone, Default)]
pub struct ReportOptions {
    pub budget: Budget,
    /// Let asserted values tighten the intervals.
    pub trust_asserted: bool,
    pub certificates: Vec<Certificate>,
}

/// Schonheim's lower bound on the number of `K_4`s covering `K_n`.
pub fn schonheim_k4(n: usize) -> usize {
    if n < 2 {
        return 0;
    }
    if n <= 4 {
        return 1;
    }
    (n * (n - 1).div_ceil(3)).div_ceil(4)
}

/// Minimum number of triangles covering `K_n` (Fort and Hedlund).
pub fn fort_hedlund_triples(n: usize) -> usize {
    if n < 2 {
        return 0;
    }
    if n <= 3 {
        return 1;
    }
    (n * (n - 1).div_ceil(2)).div_ceil(3)
}

/// Smallest `l` with `n * l^2 > m^2 - m * n`.
fn density_floor(n: usize, m: usize) -> usize {
    let rhs = (m as u128) * (m as u128) - (m as u128) * (n as u128);
    let mut l = ((rhs / n as u128) as f64).sqrt() as u128;
    while l > 0 && (n as u128) * (l - 1) * (l - 1) > rhs {
        l -= 1;
    }
    while (n as u128) * l * l <= rhs {
        l += 1;
    }
    l as usize
}

/// Smallest `l` with `C(l, 2) >= es`.
fn ess_floor(es: usize) -> usize {
    let mut l = 0usize;
    while l * l.saturating_sub(1) / 2 < es {
        l += 1;
    }
    l
}

struct Ctx {
    r: BoundReport,
}

impl Ctx {
    #[allow(clippy::too_many_arguments)]
    fn put(
        &mut self,
        p: Param,
        side: Side,
        value: Value,
        rule: Rule,
        exact: bool,
        trust: Trust,
        note: impl Into<String>,
    ) {
        let note = note.into();
        self.r.add(p, Entry { side, value, rule, exact, trust, counted: true, note });
    }

    fn lower(&mut self, p: Param, v: usize, rule: Rule, trust: Trust, note: impl Into<String>) {
        self.put(p, Side::Lower, Value::int(v), rule, true, trust, note);
    }

    fn upper(&mut self, p: Param, v: usize, rule: Rule, exact: bool, trust: Trust, note: impl Into<String>) {
        self.put(p, Side::Upper, Value::int(v), rule, exact, trust, note);
    }

    fn exactly(&mut self, p: Param, v: usize, rule: Rule, trust: Trust, note: &str) {
        self.lower(p, v, rule, trust, note);
        self.upper(p, v, rule, true, trust, note);
    }
}

pub fn bound_report(g: &Graph, budget: &Budget) -> BoundReport {
    bound_report_with(g, &ReportOptions { budget: *budget, ..ReportOptions::default() })
}

/// Applies every applicable rule to `g`, attaches the certificates drawn on
/// `g`, and closes the result under the parameter order.
pub fn bound_report_with(g: &Graph, opts: &ReportOptions) -> BoundReport {
    let (n, m) = (g.n(), g.m());
    let mut c = Ctx { r: BoundReport::new(n, m, opts.trust_asserted) };
    if n == 0 {
        for p in Param::ALL {
            c.upper(p, 0, Rule::Trivial, true, Trust::Certified, "empty graph");
        }
        return c.r;
    }
    let budget = &opts.budget;
    let planar = is_planar(g);
    let delta = g.max_degree();

    for p in Param::ALL {
        c.lower(p, 1, Rule::Trivial, Trust::Certified, "at least one object");
    }
    if planar {
        c.upper(Param::Rho12, m.max(1), Rule::Trivial, true, Trust::Theorem, "one line per edge");
        c.upper(Param::Pi12, n.div_ceil(2), Rule::Trivial, true, Trust::Theorem, "two vertices per line");
    } else {
        for p in [Param::Pi12, Param::Rho12] {
            c.put(p, Side::Lower, Value::Infinite, Rule::Planarity, true, Trust::Certified, "not planar");
        }
    }
    c.upper(Param::Pi13, n.div_ceil(2), Rule::Trivial, true, Trust::Theorem, "two vertices per line");
    c.upper(Param::PiBar13, n, Rule::Trivial, true, Trust::Theorem, "one parallel line per vertex");

    let es = essential_vertices(g).len();
    c.lower(Param::Rho13, ess_floor(es), Rule::L1, Trust::Theorem, format!("C(L,2) >= es = {es}"));
    if m >= n {
        c.lower(Param::Rho13, density_floor(n, m), Rule::L2, Trust::Theorem, "n L^2 > m^2 - m n");
    }

    let bw = bisection_width_exact(g, budget);
    if bw.exact {
        c.lower(Param::Rho13, bw.value, Rule::L3, Trust::Theorem, format!("bw = {}", bw.value));
    }
    let tw = treewidth_exact(g, budget);
    let note = if tw.exact { format!("tw = {}", tw.lower) } else { format!("tw >= {}", tw.lower) };
    c.put(Param::Rho13, Side::Lower, Value::int(tw.lower.div_ceil(3)), Rule::L4, tw.exact, Trust::Theorem, note);

    let chi = chromatic_number(g, budget);
    let note = format!("chi {} {}", if chi.exact { "=" } else { "<=" }, chi.value);
    c.upper(Param::Pi13, chi.value, Rule::L5, chi.exact, Trust::Theorem, note.clone());
    c.upper(Param::Pi23, chi.value, Rule::L7, chi.exact, Trust::Theorem, note.clone());
    if chi.exact {
        c.lower(Param::Pi13, chi.value.div_ceil(2), Rule::L5, Trust::Theorem, note.clone());
        c.lower(Param::Pi23, chi.value.div_ceil(4), Rule::L7, Trust::Theorem, note);
    }
    c.upper(Param::Pi13, delta / 2 + 1, Rule::L5, true, Trust::Theorem, format!("Delta = {delta}"));

    let lva = lva_exact(g, budget);
    let note = format!("lva {} {}", if lva.exact { "=" } else { "<=" }, lva.value);
    c.upper(Param::Pi13, lva.value, Rule::L6, lva.exact, Trust::Theorem, note.clone());
    if lva.exact {
        c.lower(Param::Pi13, lva.value, Rule::L6, Trust::Theorem, note);
    }
    let vt = vertex_thickness_exact(g, budget);
    let note = format!("vt {} {}", if vt.exact { "=" } else { "<=" }, vt.value);
    c.upper(Param::Pi23, vt.value, Rule::L7, vt.exact, Trust::Theorem, note.clone());
    if vt.exact {
        c.lower(Param::Pi23, vt.value, Rule::L7, Trust::Theorem, note);
    }
    c.upper(Param::Pi23, n.div_ceil(4), Rule::L7, true, Trust::Theorem, "four vertices per plane");

    if n >= 2 {
        c.lower(Param::Rho13, m.div_ceil(n - 1), Rule::L8, Trust::Theorem, "la >= m/(n-1)");
    }
    c.lower(Param::Rho13, delta.div_ceil(2), Rule::L9, Trust::Theorem, format!("Delta = {delta}"));
    c.upper(Param::Rho13, m.max(1), Rule::L9, true, Trust::Theorem, "one line per edge");

    if g.is_complete() && n >= 2 {
        complete_rules(&mut c, n, budget);
    }
    if let Some((a, b)) = g.complete_bipartite_sides() {
        bipartite_rules(&mut c, a.len(), b.len());
    }

    if planar && n >= 4 && m == 3 * n - 6 {
        if let Ok(db) = dual_circumference_bound(g, budget.max_nodes) {
            let note = format!("(2n-4)/c(G*) = {}/{}", db.faces, db.c_dual);
            c.put(Param::Pi12, Side::Lower, Value::int(db.lower_bound_pi12), Rule::L12, db.exact, Trust::Theorem, note);
        }
    }
    if g.is_tree() {
        if let Some(cert) = tree_tracks(g, 0).ok().and_then(|t| spiral_two_lines(g, &t).ok()) {
            c.upper(Param::Pi12, cert.witness.count(), Rule::L13, true, Trust::Certified, "spiral drawing");
        }
    }
    if n % 3 == 0 && *g == cartesian_product(&path(n / 3), &cycle(3)) {
        c.lower(Param::Rho12, n.div_ceil(2), Rule::TkLower, Trust::Theorem, format!("T_{}", n / 3));
    }

    for cert in &opts.certificates {
        if cert.drawing.graph() != g || !cert.drawing.is_verified() || cert.witness.validate(&cert.drawing).is_err() {
            continue;
        }
        for p in cert.params() {
            c.upper(p, cert.value(), Rule::L14, true, Trust::Certified, cert.name.clone());
        }
    }
    c.r.close();
    c.r
}

const CLIQUE_SEARCH_MAX_N: usize = 8;
const TRIPLE_SEARCH_MAX_N: usize = 10;

fn complete_rules(c: &mut Ctx, n: usize, budget: &Budget) {
    c.exactly(Param::Rho13, n * (n - 1) / 2, Rule::L10, Trust::Theorem, "C(n,2)");
    c.exactly(Param::Pi13, n.div_ceil(2), Rule::L10, Trust::Theorem, "ceil(n/2)");
    c.exactly(Param::Pi23, n.div_ceil(4), Rule::L10, Trust::Theorem, "ceil(n/4)");
    if n <= 3 {
        return;
    }
    if n <= CLIQUE_SEARCH_MAX_N {
        let cc = clique_cover_exact(n, 4, budget);
        let note = format!("c(K_{n},K_4) >= {}", cc.lower);
        c.put(Param::Rho23, Side::Lower, Value::int(cc.lower), Rule::L10, cc.exact, Trust::Certified, note);
    } else {
        let s = schonheim_k4(n);
        c.lower(Param::Rho23, s, Rule::L10, Trust::Theorem, format!("c(K_{n},K_4) >= {s} (counting)"));
    }
    if let Some(&(_, v)) = KN_ASSERTED_LOWER.iter().find(|&&(k, _)| k == n) {
        c.lower(Param::Rho23, v, Rule::L10, Trust::Asserted, "published lower bound");
    }
    if n <= TRIPLE_SEARCH_MAX_N {
        let cc = clique_cover_exact(n, 3, budget);
        c.upper(Param::Rho23, cc.value, Rule::L10, cc.exact, Trust::Theorem, format!("c(K_{n},K_3) <= {}", cc.value));
    } else {
        let t = fort_hedlund_triples(n);
        c.upper(Param::Rho23, t, Rule::L10, true, Trust::Theorem, format!("c(K_{n},K_3) = {t}"));
    }
    if let Ok(cert) = kn_small_plane_cover(n) {
        c.upper(Param::Rho23, cert.witness.count(), Rule::L10, true, Trust::Certified, "shipped certificate");
    }
}

fn bipartite_rules(c: &mut Ctx, p: usize, q: usize) {
    let n = p + q;
    c.exactly(Param::Rho23, p.div_ceil(2), Rule::L11, Trust::Theorem, "ceil(p/2)");
    c.lower(Param::Rho13, (p * q).div_ceil(2), Rule::L11, Trust::Theorem, "pq/2");
    c.upper(Param::Rho13, p * q, Rule::L11, true, Trust::Theorem, "pq");
    let pi = if p == 1 && q <= 2 { 1 } else { 2 };
    c.exactly(Param::Pi13, pi, Rule::L11, Trust::Theorem, "K_{p,q} on lines");
    if q >= 3 {
        c.exactly(Param::PiBar13, p + 1, Rule::L11, Trust::Theorem, "p+1 parallel lines");
    }
    if p == 2 {
        c.exactly(Param::Rho12, (3 * n - 7).div_ceil(2), Rule::L11, Trust::Theorem, "ceil((3n-7)/2)");
    }
}
