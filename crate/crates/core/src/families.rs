//! Named graph families with fixed vertex numberings.
//!
//! | kind | params | numbering |
//! |---|---|---|
//! | `complete` | n | `0..n` |
//! | `complete_bipartite` | p, q with 1 ≤ p ≤ q | side of size p is `0..p`, the other `p..p+q` |
//! | `cycle` | n ≥ 3 | `i ~ i+1 mod n` |
//! | `path` | n ≥ 1 | `i ~ i+1` |
//! | `nested_triangles` | k ≥ 1 | ring-major: vertex `3j + c` is corner c of triangle j |
//! | `nested_squares` | k ≥ 1 | vertex `4j + c`, corners c = NE, NW, SW, SE of square j |
//! | `c4_prism_stack` | k ≥ 1 | ring-major: `4j + c` |
//! | `complete_binary_tree` | h ≥ 0 | heap order, children of i are 2i+1, 2i+2 |
//! | `caterpillar` | s ≥ 1, then s leaf counts (or one, repeated) | spine `0..s`, leaves after, grouped by spine vertex |
//! | `balanced_multipartite` | r ≥ 1, n ≥ r | classes consecutive; the first `n mod r` have size ⌈n/r⌉ |
//! | `petersen`, `octahedron`, `icosahedron`, `planar_lva3` | none | see the builders |
//!
//! In `nested_squares`, square j is joined to square j+1 at corners NE and SW
//! when j is even and at NW and SE when j is odd, so the maximum degree is 3.

use std::fmt;
use std::str::FromStr;

use crate::{cartesian_product, Graph, GraphError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Complete,
    CompleteBipartite,
    Cycle,
    Path,
    NestedTriangles,
    NestedSquares,
    C4PrismStack,
    CompleteBinaryTree,
    Caterpillar,
    BalancedMultipartite,
    Petersen,
    Octahedron,
    Icosahedron,
    /// The maximal planar 9-vertex graph with linear vertex arboricity 3.
    PlanarLva3,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 14] = [
        FamilyKind::Complete,
        FamilyKind::CompleteBipartite,
        FamilyKind::Cycle,
        FamilyKind::Path,
        FamilyKind::NestedTriangles,
        FamilyKind::NestedSquares,
        FamilyKind::C4PrismStack,
        FamilyKind::CompleteBinaryTree,
        FamilyKind::Caterpillar,
        FamilyKind::BalancedMultipartite,
        FamilyKind::Petersen,
        FamilyKind::Octahedron,
        FamilyKind::Icosahedron,
        FamilyKind::PlanarLva3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete_bipartite",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Path => "path",
            FamilyKind::NestedTriangles => "nested_triangles",
            FamilyKind::NestedSquares => "nested_squares",
            FamilyKind::C4PrismStack => "c4_prism_stack",
            FamilyKind::CompleteBinaryTree => "complete_binary_tree",
            FamilyKind::Caterpillar => "caterpillar",
            FamilyKind::BalancedMultipartite => "balanced_multipartite",
            FamilyKind::Petersen => "petersen",
            FamilyKind::Octahedron => "octahedron",
            FamilyKind::Icosahedron => "icosahedron",
            FamilyKind::PlanarLva3 => "planar_lva3",
        }
    }

    fn aliases(self) -> &'static [&'static str] {
        match self {
            FamilyKind::Complete => &["kn"],
            FamilyKind::CompleteBipartite => &["kpq"],
            FamilyKind::NestedTriangles => &["c3xp"],
            FamilyKind::C4PrismStack => &["c4xp"],
            FamilyKind::CompleteBinaryTree => &["bintree"],
            FamilyKind::BalancedMultipartite => &["multipartite"],
            _ => &[],
        }
    }
}

impl FromStr for FamilyKind {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s || k.aliases().contains(&s.as_str()))
            .ok_or_else(|| GraphError::Domain(format!("unknown family {s:?}")))
    }
}

/// A family name plus its integer parameters, written `kind:p1,p2,...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: &[usize]) -> Self {
        FamilySpec { kind, params: params.to_vec() }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.name())?;
        if !self.params.is_empty() {
            let p: Vec<String> = self.params.iter().map(|x| x.to_string()).collect();
            write!(f, ":{}", p.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let kind = name.parse()?;
        let params = rest
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| GraphError::Domain(format!("bad parameter {t:?} in {s:?}"))))
            .collect::<Result<_>>()?;
        Ok(FamilySpec { kind, params })
    }
}

fn dom(msg: impl Into<String>) -> GraphError {
    GraphError::Domain(msg.into())
}

fn arity(spec: &FamilySpec, want: usize) -> Result<()> {
    if spec.params.len() != want {
        return Err(dom(format!("{} takes {want} parameter(s), got {}", spec.kind.name(), spec.params.len())));
    }
    Ok(())
}

fn at_least(spec: &FamilySpec, what: &str, v: usize, min: usize) -> Result<()> {
    if v < min {
        return Err(dom(format!("{}: {what} must be at least {min}, got {v}", spec.kind.name())));
    }
    Ok(())
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    let p = &spec.params;
    match spec.kind {
        FamilyKind::Complete => {
            arity(spec, 1)?;
            Ok(complete(p[0]))
        }
        FamilyKind::CompleteBipartite => {
            arity(spec, 2)?;
            at_least(spec, "p", p[0], 1)?;
            if p[0] > p[1] {
                return Err(dom(format!("complete_bipartite needs p <= q, got {} > {}", p[0], p[1])));
            }
            Ok(complete_bipartite(p[0], p[1]))
        }
        FamilyKind::Cycle => {
            arity(spec, 1)?;
            at_least(spec, "n", p[0], 3)?;
            Ok(cycle(p[0]))
        }
        FamilyKind::Path => {
            arity(spec, 1)?;
            at_least(spec, "n", p[0], 1)?;
            Ok(path(p[0]))
        }
        FamilyKind::NestedTriangles => {
            arity(spec, 1)?;
            at_least(spec, "k", p[0], 1)?;
            Ok(cartesian_product(&path(p[0]), &cycle(3)))
        }
        FamilyKind::C4PrismStack => {
            arity(spec, 1)?;
            at_least(spec, "k", p[0], 1)?;
            Ok(cartesian_product(&path(p[0]), &cycle(4)))
        }
        FamilyKind::NestedSquares => {
            arity(spec, 1)?;
            at_least(spec, "k", p[0], 1)?;
            Ok(nested_squares(p[0]))
        }
        FamilyKind::CompleteBinaryTree => {
            arity(spec, 1)?;
            if p[0] > 24 {
                return Err(dom("complete_binary_tree height above 24 is not supported"));
            }
            Ok(complete_binary_tree(p[0]))
        }
        FamilyKind::Caterpillar => {
            if p.is_empty() {
                return Err(dom("caterpillar takes a spine length and leaf counts"));
            }
            let s = p[0];
            at_least(spec, "spine length", s, 1)?;
            let leaves: Vec<usize> = match &p[1..] {
                [] => vec![0; s],
                [c] => vec![*c; s],
                l if l.len() == s => l.to_vec(),
                l => return Err(dom(format!("caterpillar: expected 1 or {s} leaf counts, got {}", l.len()))),
            };
            Ok(caterpillar(&leaves))
        }
        FamilyKind::BalancedMultipartite => {
            arity(spec, 2)?;
            at_least(spec, "r", p[0], 1)?;
            at_least(spec, "n", p[1], p[0])?;
            Ok(complete_multipartite(&balanced_class_sizes(p[0], p[1])))
        }
        FamilyKind::Petersen => {
            arity(spec, 0)?;
            Ok(petersen())
        }
        FamilyKind::Octahedron => {
            arity(spec, 0)?;
            Ok(complete_multipartite(&[2, 2, 2]))
        }
        FamilyKind::Icosahedron => {
            arity(spec, 0)?;
            Ok(icosahedron())
        }
        FamilyKind::PlanarLva3 => {
            arity(spec, 0)?;
            Ok(planar_lva3())
        }
    }
}

fn built(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("family builders emit simple graphs")
}

pub fn complete(n: usize) -> Graph {
    built(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect())
}

pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    built(p + q, (0..p).flat_map(|i| (p..p + q).map(move |j| (i, j))).collect())
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs n >= 3");
    built(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

pub fn path(n: usize) -> Graph {
    built(n, (1..n).map(|i| (i - 1, i)).collect())
}

pub fn nested_squares(k: usize) -> Graph {
    let mut e = Vec::new();
    for j in 0..k {
        for c in 0..4 {
            e.push((4 * j + c, 4 * j + (c + 1) % 4));
        }
        if j + 1 < k {
            let corners = if j % 2 == 0 { [0, 2] } else { [1, 3] };
            for c in corners {
                e.push((4 * j + c, 4 * (j + 1) + c));
            }
        }
    }
    built(4 * k, e)
}

pub fn complete_binary_tree(h: usize) -> Graph {
    let n = (1usize << (h + 1)) - 1;
    built(n, (1..n).map(|i| ((i - 1) / 2, i)).collect())
}

/// Caterpillar whose spine vertex i carries `leaves[i]` pendant vertices.
pub fn caterpillar(leaves: &[usize]) -> Graph {
    let s = leaves.len();
    let mut e: Vec<(usize, usize)> = (1..s).map(|i| (i - 1, i)).collect();
    let mut next = s;
    for (i, &c) in leaves.iter().enumerate() {
        for _ in 0..c {
            e.push((i, next));
            next += 1;
        }
    }
    built(next, e)
}

/// Sizes of the r classes of `K^r(n)`, larger classes first.
pub fn balanced_class_sizes(r: usize, n: usize) -> Vec<usize> {
    (0..r).map(|i| n / r + usize::from(i < n % r)).collect()
}

pub fn complete_multipartite(sizes: &[usize]) -> Graph {
    let mut class = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        class.extend(std::iter::repeat_n(i, s));
    }
    let n = class.len();
    let e = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| class[u] != class[v]).collect();
    built(n, e)
}

/// Outer 5-cycle `0..5`, spokes `i ~ 5+i`, inner pentagram `5+i ~ 5+(i+2 mod 5)`.
pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, 5 + i));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    built(10, e)
}

/// Poles 0 and 11, upper ring `1..=5`, lower ring `6..=10`.
pub fn icosahedron() -> Graph {
    let mut e = Vec::new();
    for i in 1..=5 {
        let next = i % 5 + 1;
        e.push((0, i));
        e.push((i, next));
        e.push((5 + i, 5 + next));
        e.push((i, 5 + i));
        e.push((i, 5 + next));
        e.push((5 + i, 11));
    }
    built(12, e)
}

/// Hub 0 joined to the octagon `1..=8` (corners at odd labels, side midpoints
/// at even ones), with chords 1-3, 3-5, 5-7, 7-1 and 3-7 outside it.
pub fn planar_lva3() -> Graph {
    let mut e = Vec::new();
    for i in 1..=8 {
        e.push((0, i));
        e.push((i, i % 8 + 1));
    }
    e.extend([(1, 3), (3, 5), (5, 7), (1, 7), (3, 7)]);
    built(9, e)
}
