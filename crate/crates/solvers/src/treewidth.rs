use affcover_core::Graph;

use crate::{Budget, TREEWIDTH_MAX_N};

/// Treewidth, exact when `exact` holds (then `lower == upper`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreewidthResult {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
}

/// Exact treewidth by dynamic programming over vertex subsets:
/// `TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|)`, where
/// `Q(S, v)` is the set of vertices outside `S + v` reachable from `v`
/// through `S`. Above the vertex limit the degeneracy and a min-fill
/// elimination give an interval.
pub fn treewidth_exact(g: &Graph, budget: &Budget) -> TreewidthResult {
    let n = g.n();
    if n == 0 {
        return TreewidthResult { lower: 0, upper: 0, exact: true };
    }
    if !budget.allows(n, TREEWIDTH_MAX_N) || n > 24 {
        let lower = degeneracy(g);
        let upper = min_fill_width(g);
        return TreewidthResult { lower, upper, exact: lower == upper };
    }
    let adj = g.adjacency_masks();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut tw = vec![0u8; 1usize << n];
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            let q = reach_outside(&adj, rest, v);
            let prev = if rest == 0 { 0 } else { tw[rest as usize] };
            best = best.min(prev.max(q));
        }
        tw[s as usize] = best;
    }
    let t = tw[full as usize] as usize;
    TreewidthResult { lower: t, upper: t, exact: true }
}

fn reach_outside(adj: &[u64], s: u32, v: usize) -> u8 {
    let s = s as u64;
    let mut comp = 1u64 << v;
    let mut nb = adj[v];
    loop {
        let add = nb & s & !comp;
        if add == 0 {
            break;
        }
        comp |= add;
        let mut b = add;
        while b != 0 {
            let w = b.trailing_zeros() as usize;
            b &= b - 1;
            nb |= adj[w];
        }
    }
    (nb & !s & !(1u64 << v)).count_ones() as u8
}

/// Largest minimum degree over all subgraphs; a treewidth lower bound.
pub(crate) fn degeneracy(g: &Graph) -> usize {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut best = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| deg[v]).unwrap();
        best = best.max(deg[v]);
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
    }
    best
}

/// Width of the elimination order that always removes a vertex needing the
/// fewest fill edges.
pub(crate) fn min_fill_width(g: &Graph) -> usize {
    let n = g.n();
    let mut nb: Vec<std::collections::BTreeSet<usize>> =
        (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut width = 0;
    for _ in 0..n {
        let fill = |v: usize| {
            let ns: Vec<usize> = nb[v].iter().copied().collect();
            let mut f = 0;
            for (i, &a) in ns.iter().enumerate() {
                f += ns[i + 1..].iter().filter(|&&b| !nb[a].contains(&b)).count();
            }
            f
        };
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (fill(v), nb[v].len())).unwrap();
        let ns: Vec<usize> = nb[v].iter().copied().collect();
        width = width.max(ns.len());
        for &a in &ns {
            nb[a].remove(&v);
            for &b in &ns {
                if a != b {
                    nb[a].insert(b);
                }
            }
        }
        alive[v] = false;
        nb[v].clear();
    }
    width
}
