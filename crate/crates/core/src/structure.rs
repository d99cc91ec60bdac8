use crate::Graph;

/// Cartesian product. Vertex `(u, v)` gets index `u * h.n() + v`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let k = h.n();
    let mut e = Vec::new();
    for u in 0..g.n() {
        for &(a, b) in h.edges() {
            e.push((u * k + a, u * k + b));
        }
    }
    for &(a, b) in g.edges() {
        for v in 0..k {
            e.push((a * k + v, b * k + v));
        }
    }
    Graph::from_edges(g.n() * k, e).expect("product of simple graphs")
}

/// Vertices of degree at least 3 or lying on a triangle, ascending.
/// `es(G)` is the length of the result.
pub fn essential_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n())
        .filter(|&v| {
            let nb = g.neighbors(v);
            nb.len() >= 3 || nb.iter().enumerate().any(|(i, &a)| nb[i + 1..].iter().any(|&b| g.has_edge(a, b)))
        })
        .collect()
}

/// Whether `part` induces a disjoint union of paths.
pub fn is_linear_forest(g: &Graph, part: &[usize]) -> bool {
    let h = g.induced(part);
    h.max_degree() <= 2 && h.is_forest()
}

/// The vertices of `part` listed path by path, each path from one end to the
/// other. Paths are ordered by their smallest vertex and start at their
/// smaller endpoint. Returns `None` if `part` is not a linear forest.
pub fn linear_forest_order(g: &Graph, part: &[usize]) -> Option<Vec<Vec<usize>>> {
    if !is_linear_forest(g, part) {
        return None;
    }
    let mut sorted = part.to_vec();
    sorted.sort_unstable();
    let h = g.induced(&sorted);
    let mut out = Vec::new();
    for comp in h.components() {
        let start = *comp.iter().find(|&&v| h.degree(v) <= 1).expect("a path has an end");
        let mut walk = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = h.neighbors(cur).iter().find(|&&w| w != prev) {
            walk.push(next);
            prev = cur;
            cur = next;
        }
        out.push(walk.into_iter().map(|i| sorted[i]).collect());
    }
    Some(out)
}

/// Brute-force isomorphism test; only for graphs with at most 8 vertices.
pub fn is_isomorphic_small(g: &Graph, h: &Graph) -> bool {
    assert!(g.n() <= 8, "brute-force isomorphism is limited to 8 vertices");
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let n = g.n();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, h, 0, &mut perm, &mut used)
}

fn extend(g: &Graph, h: &Graph, v: usize, perm: &mut [usize], used: &mut [bool]) -> bool {
    if v == g.n() {
        return true;
    }
    for w in 0..h.n() {
        if used[w] || g.degree(v) != h.degree(w) {
            continue;
        }
        let ok = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(perm[u], w));
        if ok {
            perm[v] = w;
            used[w] = true;
            if extend(g, h, v + 1, perm, used) {
                return true;
            }
            used[w] = false;
        }
    }
    false
}
