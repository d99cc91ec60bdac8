//! Exhaustive search for small planar graphs of linear vertex arboricity 3.
//!
//! Deleting edges never raises lva, and every planar graph on `n >= 3`
//! vertices is a spanning subgraph of a triangulation, so the maximum lva over
//! planar graphs on `n` vertices is attained by a triangulation. All
//! triangulations on `n` vertices are reached from one of them by edge flips.

use std::collections::{HashSet, VecDeque};

use affcover_core::Graph;
use affcover_planar::planarity_test;

use crate::lva::lva_exact;
use crate::Budget;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepRow {
    pub n: usize,
    /// Number of triangulations up to isomorphism.
    pub triangulations: usize,
    pub max_lva: usize,
    /// How many of them have lva 3.
    pub with_lva3: usize,
}

/// Canonical adjacency bitmask: the least over vertex orderings that list
/// vertices by increasing degree.
fn canonical(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical forms are brute force");
    let mut by_deg: Vec<usize> = (0..n).collect();
    by_deg.sort_by_key(|&v| g.degree(v));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &by_deg {
        match groups.last_mut() {
            Some(gr) if g.degree(gr[0]) == g.degree(v) => gr.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(n);
    fn rec(g: &Graph, groups: &mut [Vec<usize>], gi: usize, order: &mut Vec<usize>, best: &mut u64) {
        if gi == groups.len() {
            let mut code = 0u64;
            let mut bit = 0;
            for j in 1..order.len() {
                for i in 0..j {
                    if g.has_edge(order[i], order[j]) {
                        code |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            *best = (*best).min(code);
            return;
        }
        let k = groups[gi].len();
        permute(g, groups, gi, 0, k, order, best);
    }
    fn permute(
        g: &Graph,
        groups: &mut [Vec<usize>],
        gi: usize,
        i: usize,
        k: usize,
        order: &mut Vec<usize>,
        best: &mut u64,
    ) {
        if i == k {
            let base = order.len();
            order.extend(groups[gi].iter().copied());
            rec(g, groups, gi + 1, order, best);
            order.truncate(base);
            return;
        }
        for j in i..k {
            groups[gi].swap(i, j);
            permute(g, groups, gi, i + 1, k, order, best);
            groups[gi].swap(i, j);
        }
    }
    rec(g, &mut groups, 0, &mut order, &mut best);
    best
}

/// All triangulations on `n` vertices (4 <= n <= 10), one per isomorphism class.
pub fn triangulations(n: usize) -> Vec<Graph> {
    assert!((4..=10).contains(&n), "triangulations are enumerated for 4 <= n <= 10");
    // stacked start: K4, then each new vertex inside the triangle {0, 1, v-1}
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    for v in 4..n {
        edges.extend([(0, v), (1, v), (v - 1, v)]);
    }
    let start = Graph::from_edges(n, edges).unwrap();
    let mut seen = HashSet::from([canonical(&start)]);
    let mut out = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(g) = queue.pop_front() {
        let emb = planarity_test(&g).expect("triangulations are planar");
        for &(a, b) in g.edges() {
            if g.degree(a) <= 3 || g.degree(b) <= 3 {
                continue;
            }
            let apex: Vec<usize> = emb
                .faces()
                .iter()
                .filter(|f| f.contains(&a) && f.contains(&b))
                .map(|f| *f.iter().find(|&&x| x != a && x != b).unwrap())
                .collect();
            let (c, d) = (apex[0], apex[1]);
            if g.has_edge(c, d) {
                continue;
            }
            let flipped =
                Graph::from_edges(n, g.edges().iter().copied().filter(|&e| e != (a, b)).chain([(c.min(d), c.max(d))]))
                    .unwrap();
            if seen.insert(canonical(&flipped)) {
                out.push(flipped.clone());
                queue.push_back(flipped);
            }
        }
    }
    out
}

/// For each `n` in `4..=max_n`, the largest lva over planar graphs on `n` vertices.
pub fn nine_lva_sweep(max_n: usize, budget: &Budget) -> Vec<SweepRow> {
    (4..=max_n)
        .map(|n| {
            let ts = triangulations(n);
            let lvas: Vec<usize> = ts
                .iter()
                .map(|g| {
                    let r = lva_exact(g, budget);
                    assert!(r.exact, "lva search on a small triangulation exceeded its budget");
                    r.value
                })
                .collect();
            SweepRow {
                n,
                triangulations: ts.len(),
                max_lva: lvas.iter().copied().max().unwrap_or(0),
                with_lva3: lvas.iter().filter(|&&l| l == 3).count(),
            }
        })
        .collect()
}
