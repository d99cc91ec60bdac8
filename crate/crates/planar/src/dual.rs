use affcover_core::Graph;

use crate::embedding::planarity_test;
use crate::{PlanarError, Result};

/// The bound `pi^1_2(G) >= (2n-4) / c(G*)` for a triangulation `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualBound {
    /// Number of faces, `2n - 4`.
    pub faces: usize,
    /// Circumference of the dual graph, or `2n - 4` when the search was cut off.
    pub c_dual: usize,
    /// `ceil(faces / c_dual)`.
    pub lower_bound_pi12: usize,
    /// Whether `c_dual` is the exact circumference.
    pub exact: bool,
}

/// Builds the dual of the triangulation `g` and searches for its longest
/// cycle, visiting at most `node_budget` search nodes.
pub fn dual_circumference_bound(g: &Graph, node_budget: u64) -> Result<DualBound> {
    let n = g.n();
    if n < 4 || g.m() != 3 * n - 6 || !g.is_connected() {
        return Err(PlanarError::NotATriangulation(format!("n = {n}, m = {}", g.m())));
    }
    let emb = planarity_test(g).ok_or(PlanarError::NonPlanar)?;
    let faces = emb.faces();
    if faces.iter().any(|f| f.len() != 3) {
        return Err(PlanarError::NotATriangulation("a face is not a triangle".into()));
    }
    let dual = dual_graph(faces);
    let f = faces.len();
    let (c, exact) = circumference(&dual, node_budget);
    let c_dual = if exact { c } else { f };
    Ok(DualBound { faces: f, c_dual, lower_bound_pi12: f.div_ceil(c_dual), exact })
}

/// Faces sharing an edge are adjacent; for a triangulation the result is cubic.
pub(crate) fn dual_graph(faces: &[Vec<usize>]) -> Graph {
    let mut owner = std::collections::HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for k in 0..f.len() {
            owner.insert((f[k], f[(k + 1) % f.len()]), i);
        }
    }
    let mut edges = Vec::new();
    for (&(a, b), &i) in &owner {
        let j = owner[&(b, a)];
        if i < j {
            edges.push((i, j));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(faces.len(), edges).expect("dual of a triangulation is simple")
}

/// Longest cycle length by exhaustive search; the flag is false when the
/// budget ran out first.
pub(crate) fn circumference(g: &Graph, budget: u64) -> (usize, bool) {
    struct S<'a> {
        g: &'a Graph,
        best: usize,
        nodes: u64,
        budget: u64,
        on_path: Vec<bool>,
    }
    fn dfs(s: &mut S, start: usize, v: usize, len: usize, free: usize) -> bool {
        s.nodes += 1;
        if s.nodes > s.budget {
            return false;
        }
        if len >= 3 && s.g.has_edge(v, start) && len > s.best {
            s.best = len;
        }
        if s.best == s.g.n() || len + free <= s.best {
            return true;
        }
        for &w in s.g.neighbors(v) {
            if w > start && !s.on_path[w] {
                s.on_path[w] = true;
                let ok = dfs(s, start, w, len + 1, free - 1);
                s.on_path[w] = false;
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    let n = g.n();
    let mut s = S { g, best: 0, nodes: 0, budget, on_path: vec![false; n] };
    for start in 0..n {
        if n - start <= s.best {
            break;
        }
        s.on_path[start] = true;
        let ok = dfs(&mut s, start, start, 1, n - start - 1);
        s.on_path[start] = false;
        if !ok {
            return (s.best, false);
        }
    }
    (s.best, true)
}
