use std::collections::{HashMap, HashSet};

use affcover_core::essential_vertices;
use affcover_geometry::{
    canon_line, canon_plane, collinear, cross, plane_through_line, CanonLine, IntFrame, Scalar, P3,
};
use fixedbitset::FixedBitSet;

use crate::setcover::min_set_cover;
use crate::witness::{CoverKind, CoverObject, CoverWitness};
use crate::{Drawing, DrawingError, Result};

/// Limits for the set-cover measurements. `max_items` defaults to 40 vertices
/// for line covers and 64 edges for plane covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverBudget {
    pub max_items: Option<usize>,
    pub max_nodes: u64,
}

impl Default for CoverBudget {
    fn default() -> Self {
        CoverBudget { max_items: None, max_nodes: 5_000_000 }
    }
}

pub const VERTEX_COVER_MAX_N: usize = 40;
pub const PLANE_COVER_MAX_M: usize = 64;
const CANDIDATE_LIMIT: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverResult {
    pub count: usize,
    pub witness: CoverWitness,
    /// False for greedy or fallback covers, which are only upper bounds.
    pub exact: bool,
}

/// Distinct supporting lines of the edges, listed in order of first use.
pub fn edge_line_count(d: &Drawing) -> Result<(usize, CoverWitness)> {
    d.require_verified()?;
    let mut index: HashMap<CanonLine, usize> = HashMap::new();
    let mut objects = Vec::new();
    let mut assignment = Vec::with_capacity(d.graph().m());
    for &(u, v) in d.graph().edges() {
        let l = canon_line(d.point(u), d.point(v))?;
        let j = *index.entry(l.clone()).or_insert_with(|| {
            objects.push(CoverObject::Line(l));
            objects.len() - 1
        });
        assignment.push(j);
    }
    Ok((objects.len(), CoverWitness { kind: CoverKind::LinesForEdges, objects, assignment }))
}

fn collinear_sets<T: Scalar>(p: &[P3<T>]) -> Vec<(FixedBitSet, (usize, usize))> {
    let n = p.len();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let mut s = FixedBitSet::with_capacity(n);
            s.insert(u);
            s.insert(v);
            for w in 0..n {
                if w != u && w != v && collinear(&p[u], &p[v], &p[w]) {
                    s.insert(w);
                }
            }
            if seen.insert(s.clone()) {
                out.push((s, (u, v)));
            }
        }
    }
    out
}

/// Fewest lines containing all vertex points.
pub fn min_vertex_line_cover(d: &Drawing, budget: &CoverBudget) -> Result<CoverResult> {
    d.require_verified()?;
    let n = d.graph().n();
    let kind = CoverKind::LinesForVertices;
    if n == 0 {
        let witness = CoverWitness { kind, objects: Vec::new(), assignment: Vec::new() };
        return Ok(CoverResult { count: 0, witness, exact: true });
    }
    if n == 1 {
        let witness = CoverWitness::assign(kind, vec![CoverObject::Line(CanonLine::singleton(d.point(0)))], d)?;
        return Ok(CoverResult { count: 1, witness, exact: true });
    }
    let limit = budget.max_items.unwrap_or(VERTEX_COVER_MAX_N);
    let (pairs, exact) = if n <= CANDIDATE_LIMIT {
        let cands = match IntFrame::new(d.points()) {
            IntFrame::Small(p) => collinear_sets(&p),
            IntFrame::Big(p) => collinear_sets(&p),
        };
        let sets: Vec<FixedBitSet> = cands.iter().map(|c| c.0.clone()).collect();
        let nodes = if n <= limit { budget.max_nodes } else { 0 };
        let r = min_set_cover(n, &sets, nodes).expect("pair lines cover every point");
        (r.chosen.iter().map(|&i| cands[i].1).collect::<Vec<_>>(), r.exact)
    } else {
        ((0..n).step_by(2).map(|u| if u + 1 < n { (u, u + 1) } else { (u - 1, u) }).collect(), false)
    };
    let objects = pairs
        .iter()
        .map(|&(u, v)| canon_line(d.point(u), d.point(v)).map(CoverObject::Line))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let witness = CoverWitness::assign(kind, objects, d)?;
    Ok(CoverResult { count: witness.count(), witness, exact })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum PlaneGen {
    Triple(usize, usize, usize),
    EdgeAxis(usize, usize),
}

fn sub<T: Scalar>(a: &P3<T>, b: &P3<T>) -> P3<T> {
    [a[0].clone() - b[0].clone(), a[1].clone() - b[1].clone(), a[2].clone() - b[2].clone()]
}

fn dot<T: Scalar>(a: &P3<T>, b: &P3<T>) -> T {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

fn coplanar_edge_sets<T: Scalar>(
    p: &[P3<T>],
    edges: &[(usize, usize)],
    with_triples: bool,
) -> Vec<(FixedBitSet, PlaneGen)> {
    let m = edges.len();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut add = |normal: P3<T>, base: &P3<T>, gen: PlaneGen| {
        let on: Vec<bool> = p.iter().map(|q| dot(&normal, &sub(q, base)).is_zero()).collect();
        let mut s = FixedBitSet::with_capacity(m);
        for (i, &(a, b)) in edges.iter().enumerate() {
            if on[a] && on[b] {
                s.insert(i);
            }
        }
        if seen.insert(s.clone()) {
            out.push((s, gen));
        }
    };
    for &(u, v) in edges {
        let dir = sub(&p[v], &p[u]);
        if with_triples {
            for w in 0..p.len() {
                let normal = cross(&dir, &sub(&p[w], &p[u]));
                if normal.iter().any(|c| !c.is_zero()) {
                    add(normal, &p[u], PlaneGen::Triple(u, v, w));
                }
            }
        }
        let normal = (0..3)
            .map(|k| {
                let mut e = [T::zero(), T::zero(), T::zero()];
                e[k] = T::one();
                cross(&dir, &e)
            })
            .find(|c| c.iter().any(|x| !x.is_zero()))
            .expect("an edge has nonzero length");
        add(normal, &p[u], PlaneGen::EdgeAxis(u, v));
    }
    out
}

/// Fewest planes such that every edge lies in one of them. Planar drawings
/// are measured after lifting to `z = 0`.
pub fn min_edge_plane_cover(d: &Drawing, budget: &CoverBudget) -> Result<CoverResult> {
    d.require_verified()?;
    let d3 = d.lifted();
    let edges = d3.graph().edges();
    let m = edges.len();
    let kind = CoverKind::PlanesForEdges;
    if m == 0 {
        let witness = CoverWitness { kind, objects: Vec::new(), assignment: Vec::new() };
        return Ok(CoverResult { count: 0, witness, exact: true });
    }
    let limit = budget.max_items.unwrap_or(PLANE_COVER_MAX_M);
    let with_triples = m <= CANDIDATE_LIMIT;
    let cands = match IntFrame::new(d3.points()) {
        IntFrame::Small(p) => coplanar_edge_sets(&p, edges, with_triples),
        IntFrame::Big(p) => coplanar_edge_sets(&p, edges, with_triples),
    };
    let sets: Vec<FixedBitSet> = cands.iter().map(|c| c.0.clone()).collect();
    let nodes = if m <= limit { budget.max_nodes } else { 0 };
    let r = min_set_cover(m, &sets, nodes).expect("every edge has its own plane");
    let pts = d3.points();
    let objects = r
        .chosen
        .iter()
        .map(|&i| match cands[i].1 {
            PlaneGen::Triple(u, v, w) => canon_plane(&pts[u], &pts[v], &pts[w]),
            PlaneGen::EdgeAxis(u, v) => plane_through_line(&canon_line(&pts[u], &pts[v])?),
        })
        .map(|r| r.map(CoverObject::Plane))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let witness = CoverWitness::assign(kind, objects, d)?;
    Ok(CoverResult { count: witness.count(), witness, exact: r.exact && with_triples })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SegmentSlope {
    pub segments: usize,
    pub slopes: usize,
}

/// Maximal connected collinear edge paths, and distinct edge directions.
pub fn segment_slope_count(d: &Drawing) -> Result<SegmentSlope> {
    d.require_verified()?;
    if d.dim() != 2 {
        return Err(DrawingError::Dimension { expected: 2, got: d.dim() });
    }
    let edges = d.graph().edges();
    let lines: Vec<CanonLine> =
        edges.iter().map(|&(u, v)| canon_line(d.point(u), d.point(v))).collect::<std::result::Result<_, _>>()?;
    let slopes: HashSet<&[num_bigint::BigInt]> = lines.iter().map(CanonLine::direction).collect();
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut at_vertex: HashMap<(usize, &CanonLine), usize> = HashMap::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        for w in [u, v] {
            if let Some(&j) = at_vertex.get(&(w, &lines[i])) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            } else {
                at_vertex.insert((w, &lines[i]), i);
            }
        }
    }
    let segments = (0..edges.len()).filter(|&i| find(&mut parent, i) == i).count();
    Ok(SegmentSlope { segments, slopes: slopes.len() })
}

/// The two counting bounds on the number of edge lines of a drawing,
/// evaluated on the drawing's own line count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EssCheck {
    pub lines: usize,
    pub es: usize,
    pub n: usize,
    pub m: usize,
    /// `C(lines, 2) >= es`: distinct lines meet in at most one point, and every
    /// essential vertex is such a meeting point.
    pub pairs_weak: bool,
    /// `C(lines, 2) > es`, the strict form.
    pub pairs_strict: bool,
    /// `Some(n * lines^2 > m^2 - m * n)` when `m >= n >= 1`.
    pub density: Option<bool>,
}

pub fn lemma_ess(d: &Drawing) -> Result<EssCheck> {
    let (lines, _) = edge_line_count(d)?;
    let g = d.graph();
    let es = essential_vertices(g).len();
    let pairs = (lines * lines.saturating_sub(1) / 2) as u128;
    let (n, m) = (g.n() as i128, g.m() as i128);
    let density = (m >= n && n >= 1).then(|| n * (lines as i128).pow(2) > m * m - m * n);
    Ok(EssCheck {
        lines,
        es,
        n: g.n(),
        m: g.m(),
        pairs_weak: pairs >= es as u128,
        pairs_strict: pairs > es as u128,
        density,
    })
}
