use affcover_core::Graph;

use crate::partition::{Certifies, Partition, PartitionResult};
use crate::{Budget, CHROMATIC_MAX_N};

/// First-fit coloring in index order.
pub fn greedy_coloring(g: &Graph) -> Partition {
    let mut labels = vec![usize::MAX; g.n()];
    for v in 0..g.n() {
        let mut c = 0;
        while g.neighbors(v).iter().any(|&w| labels[w] == c) {
            c += 1;
        }
        labels[v] = c;
    }
    Partition::from_labels(&labels, Certifies::ProperColoring)
}

fn greedy_clique(adj: &[u64]) -> usize {
    let n = adj.len();
    let mut best = usize::from(n > 0);
    for s in 0..n {
        let mut cand = adj[s];
        let mut size = 1;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= adj[v];
            size += 1;
        }
        best = best.max(size);
    }
    best
}

struct Search<'a> {
    adj: &'a [u64],
    k: usize,
    labels: Vec<usize>,
    class: Vec<u64>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// `Some(true)` when a k-coloring exists, `None` on budget exhaustion.
    fn run(&mut self, v: usize, used: usize) -> Option<bool> {
        let n = self.adj.len();
        if v == n {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        for c in 0..(used + 1).min(self.k) {
            if self.class[c] & self.adj[v] != 0 {
                continue;
            }
            self.class[c] |= 1 << v;
            self.labels[v] = c;
            let used2 = used.max(c + 1);
            let dead = used2 == self.k && (v + 1..n).any(|w| (0..self.k).all(|d| self.class[d] & self.adj[w] != 0));
            if !dead {
                match self.run(v + 1, used2) {
                    Some(false) => {}
                    other => {
                        if other.is_none() {
                            self.class[c] &= !(1 << v);
                        }
                        return other;
                    }
                }
            }
            self.class[c] &= !(1 << v);
        }
        Some(false)
    }
}

/// Exact chromatic number with the lexicographically first optimal coloring
/// (vertices in index order, lowest color first).
pub fn chromatic_number(g: &Graph, budget: &Budget) -> PartitionResult {
    let greedy = greedy_coloring(g);
    let fallback = PartitionResult { value: greedy.len(), partition: greedy.clone(), exact: false };
    if !budget.allows(g.n(), CHROMATIC_MAX_N) || g.n() > 64 {
        return fallback;
    }
    if g.n() == 0 {
        return PartitionResult { value: 0, partition: greedy, exact: true };
    }
    let adj = g.adjacency_masks();
    let mut nodes = 0;
    for k in greedy_clique(&adj)..=greedy.len() {
        let mut s = Search { adj: &adj, k, labels: vec![0; g.n()], class: vec![0; k], nodes, budget: budget.max_nodes };
        match s.run(0, 0) {
            Some(true) => {
                let partition = Partition::from_labels(&s.labels, Certifies::ProperColoring);
                return PartitionResult { value: k, partition, exact: true };
            }
            Some(false) => nodes = s.nodes,
            None => return fallback,
        }
    }
    unreachable!("the greedy coloring bounds the search")
}
