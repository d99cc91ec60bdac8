use affcover_core::Graph;

use crate::{Budget, BISECTION_MAX_N};

/// Bisection width. `side` is a smallest-cut class of size `floor(n/2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BisectionResult {
    pub value: usize,
    pub side: Vec<usize>,
    pub exact: bool,
}

fn cut(g: &Graph, in_b: &[bool]) -> usize {
    g.edges().iter().filter(|&&(u, v)| in_b[u] != in_b[v]).count()
}

/// Minimum number of edges between a class of `floor(n/2)` vertices and its
/// complement, by enumerating all such classes (Gosper's hack). Above budget,
/// a breadth-first split improved by pairwise swaps gives an upper bound.
pub fn bisection_width_exact(g: &Graph, budget: &Budget) -> BisectionResult {
    let n = g.n();
    let k = n / 2;
    if n < 2 {
        return BisectionResult { value: 0, side: vec![], exact: true };
    }
    if !budget.allows(n, BISECTION_MAX_N) || n > 63 {
        return heuristic(g);
    }
    let adj = g.adjacency_masks();
    let full: u64 = (1u64 << n) - 1;
    let mut best = (usize::MAX, 0u64);
    let mut s: u64 = (1u64 << k) - 1;
    let mut count = 0u64;
    while s <= full {
        count += 1;
        if count > budget.max_nodes {
            let h = heuristic(g);
            if h.value < best.0 {
                return h;
            }
            return BisectionResult { value: best.0, side: bits(best.1), exact: false };
        }
        let mut c = 0;
        let mut b = s;
        while b != 0 {
            let v = b.trailing_zeros() as usize;
            b &= b - 1;
            c += (adj[v] & !s).count_ones() as usize;
        }
        if c < best.0 {
            best = (c, s);
        }
        if k == 0 {
            break;
        }
        let low = s & s.wrapping_neg();
        let r = s + low;
        s = (((r ^ s) >> 2) / low) | r;
    }
    BisectionResult { value: best.0, side: bits(best.1), exact: true }
}

fn bits(mut s: u64) -> Vec<usize> {
    let mut v = Vec::new();
    while s != 0 {
        v.push(s.trailing_zeros() as usize);
        s &= s - 1;
    }
    v
}

fn heuristic(g: &Graph) -> BisectionResult {
    let n = g.n();
    let mut order = Vec::new();
    let mut seen = vec![false; n];
    for comp in g.components() {
        let d = g.bfs_distances(comp[0]);
        let mut c = comp.clone();
        c.sort_by_key(|&v| (d[v], v));
        for v in c {
            if !seen[v] {
                seen[v] = true;
                order.push(v);
            }
        }
    }
    let mut in_b = vec![false; n];
    for &v in &order[..n / 2] {
        in_b[v] = true;
    }
    let mut cur = cut(g, &in_b);
    let mut improved = true;
    while improved {
        improved = false;
        'outer: for a in 0..n {
            for b in 0..n {
                if in_b[a] && !in_b[b] {
                    in_b[a] = false;
                    in_b[b] = true;
                    let c = cut(g, &in_b);
                    if c < cur {
                        cur = c;
                        improved = true;
                        break 'outer;
                    }
                    in_b[a] = true;
                    in_b[b] = false;
                }
            }
        }
    }
    BisectionResult { value: cur, side: (0..n).filter(|&v| in_b[v]).collect(), exact: false }
}
