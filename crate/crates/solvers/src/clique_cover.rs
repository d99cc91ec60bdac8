use std::collections::HashMap;

use crate::Budget;

/// Cliques of `K_n` of order at most `s` covering every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCover {
    pub n: usize,
    pub s: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl CliqueCover {
    pub fn validate(&self) -> bool {
        if self.blocks.iter().any(|b| b.len() > self.s || b.iter().any(|&v| v >= self.n)) {
            return false;
        }
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.blocks.iter().any(|b| b.contains(&i) && b.contains(&j))))
    }
}

/// `value` is the size of `cover`; `lower` is the best proven lower bound.
/// They agree exactly when `exact` holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCoverResult {
    pub value: usize,
    pub lower: usize,
    pub cover: CliqueCover,
    pub exact: bool,
}

/// The counting bound `ceil(n(n-1) / (k(k-1)))` for covering `K_n` by `K_k`,
/// and whether a Steiner system `S(2, k, n)` exists. `k` must be 3 or 4.
pub fn steiner_bounds(n: usize, k: usize) -> (usize, bool) {
    assert!(k == 3 || k == 4, "Steiner residue test is implemented for k = 3, 4");
    let lower = (n * n.saturating_sub(1)).div_ceil(k * (k - 1));
    let exists = match k {
        3 => matches!(n % 6, 1 | 3),
        _ => matches!(n % 12, 1 | 4),
    };
    (lower, exists)
}

fn subsets(n: usize, s: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < s - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, s, &mut Vec::new(), &mut out);
    out
}

struct Search {
    n: usize,
    s: usize,
    ends: Vec<(usize, usize)>,
    masks: Vec<u128>,
    by_edge: Vec<Vec<usize>>,
    all: u128,
    failed: HashMap<u128, usize>,
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn vertex_bound(&self, covered: u128) -> (usize, usize) {
        let mut deg = vec![0usize; self.n];
        let mut rest = self.all & !covered;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            deg[self.ends[e].0] += 1;
            deg[self.ends[e].1] += 1;
        }
        let need: Vec<usize> = deg.iter().map(|d| d.div_ceil(self.s - 1)).collect();
        (need.iter().sum::<usize>().div_ceil(self.s), need.into_iter().max().unwrap_or(0))
    }

    fn run(&mut self, covered: u128, left: usize) -> Option<bool> {
        if covered == self.all {
            return Some(true);
        }
        if left == 0 {
            return Some(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if self.failed.get(&covered).is_some_and(|&r| r >= left) {
            return Some(false);
        }
        let (sum_bound, max_bound) = self.vertex_bound(covered);
        if sum_bound > left || max_bound > left {
            return Some(false);
        }
        let e = (self.all & !covered).trailing_zeros() as usize;
        for i in 0..self.by_edge[e].len() {
            let b = self.by_edge[e][i];
            self.chosen.push(b);
            match self.run(covered | self.masks[b], left - 1)? {
                true => return Some(true),
                false => {
                    self.chosen.pop();
                }
            }
        }
        let r = self.failed.entry(covered).or_insert(0);
        *r = (*r).max(left);
        Some(false)
    }
}

fn greedy(masks: &[u128], all: u128) -> Vec<usize> {
    let mut covered = 0u128;
    let mut out = Vec::new();
    while covered != all {
        let b = (0..masks.len()).max_by_key(|&b| ((masks[b] & !covered).count_ones(), std::cmp::Reverse(b))).unwrap();
        covered |= masks[b];
        out.push(b);
    }
    out
}

/// Minimum number of cliques of order at most `s` covering the edges of `K_n`.
///
/// Iterative deepening over the target size, starting at the bound
/// `ceil(sum_v ceil((n-1)/(s-1)) / s)`. The first block is fixed to
/// `{0, ..., s-1}` (K_n is vertex-transitive) and each node branches on the
/// blocks through the lowest uncovered edge.
pub fn clique_cover_exact(n: usize, s: usize, budget: &Budget) -> CliqueCoverResult {
    assert!(s >= 2, "blocks need at least two vertices");
    assert!(n <= 16, "clique covers are searched for n <= 16");
    if n < 2 {
        let cover = CliqueCover { n, s, blocks: vec![] };
        return CliqueCoverResult { value: 0, lower: 0, cover, exact: true };
    }
    if n <= s {
        let cover = CliqueCover { n, s, blocks: vec![(0..n).collect()] };
        return CliqueCoverResult { value: 1, lower: 1, cover, exact: true };
    }
    let (mut search, blocks) = setup(n, s, budget);
    let incumbent = greedy(&search.masks, search.all);
    let mut lower = search.vertex_bound(0).0.max(steiner_lower(n, s));
    let to_cover = |ids: &[usize]| CliqueCover { n, s, blocks: ids.iter().map(|&b| blocks[b].clone()).collect() };
    while lower < incumbent.len() {
        search.chosen = vec![0];
        search.failed.clear();
        match search.run(search.masks[0], lower - 1) {
            Some(true) => {
                let cover = to_cover(&search.chosen);
                return CliqueCoverResult { value: lower, lower, cover, exact: true };
            }
            Some(false) => lower += 1,
            None => {
                let cover = to_cover(&incumbent);
                return CliqueCoverResult { value: incumbent.len(), lower, cover, exact: false };
            }
        }
    }
    let cover = to_cover(&incumbent);
    CliqueCoverResult { value: incumbent.len(), lower, cover, exact: true }
}

/// Whether `K_n` has an edge cover by at most `k` cliques of order at most
/// `s`: `Some(Some(cover))` if one is found, `Some(None)` once the search
/// has ruled out every cover of that size, `None` if the budget ran out.
pub fn clique_cover_within(n: usize, s: usize, k: usize, budget: &Budget) -> Option<Option<CliqueCover>> {
    assert!(s >= 2 && n <= 16);
    if n < 2 {
        return Some(Some(CliqueCover { n, s, blocks: vec![] }));
    }
    if n <= s {
        return Some((k >= 1).then(|| CliqueCover { n, s, blocks: vec![(0..n).collect()] }));
    }
    if k == 0 {
        return Some(None);
    }
    let (mut search, blocks) = setup(n, s, budget);
    let found = search.run(search.masks[0], k - 1)?;
    Some(found.then(|| CliqueCover { n, s, blocks: search.chosen.iter().map(|&b| blocks[b].clone()).collect() }))
}

fn setup(n: usize, s: usize, budget: &Budget) -> (Search, Vec<Vec<usize>>) {
    let mut edge_of = vec![vec![usize::MAX; n]; n];
    let mut ends = Vec::new();
    for (i, j) in (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))) {
        edge_of[i][j] = ends.len();
        edge_of[j][i] = ends.len();
        ends.push((i, j));
    }
    let blocks = subsets(n, s);
    let masks: Vec<u128> = blocks
        .iter()
        .map(|b| {
            let mut m = 0u128;
            for (x, &i) in b.iter().enumerate() {
                for &j in &b[x + 1..] {
                    m |= 1u128 << edge_of[i][j];
                }
            }
            m
        })
        .collect();
    let mut by_edge = vec![Vec::new(); ends.len()];
    for (b, &m) in masks.iter().enumerate() {
        let mut r = m;
        while r != 0 {
            by_edge[r.trailing_zeros() as usize].push(b);
            r &= r - 1;
        }
    }
    let all = if ends.len() == 128 { u128::MAX } else { (1u128 << ends.len()) - 1 };
    let search = Search {
        n,
        s,
        ends,
        masks,
        by_edge,
        all,
        failed: HashMap::new(),
        chosen: vec![0],
        nodes: 0,
        budget: budget.max_nodes,
    };
    (search, blocks)
}

fn steiner_lower(n: usize, s: usize) -> usize {
    (n * (n - 1)).div_ceil(s * (s - 1))
}
