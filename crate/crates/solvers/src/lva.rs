use affcover_core::Graph;

use crate::coloring::chromatic_number;
use crate::partition::{Certifies, Partition, PartitionResult};
use crate::{Budget, LVA_MAX_N};

const NONE: usize = usize::MAX;

struct Search<'a> {
    g: &'a Graph,
    r: usize,
    labels: Vec<usize>,
    deg: Vec<u8>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Whether `a` and `b`, both path ends in class `c`, lie on the same path.
    fn same_path(&self, a: usize, b: usize, c: usize) -> bool {
        let (mut prev, mut cur) = (NONE, a);
        loop {
            if cur == b {
                return true;
            }
            let next = self.g.neighbors(cur).iter().copied().find(|&w| w != prev && self.labels[w] == c);
            match next {
                Some(w) => {
                    prev = cur;
                    cur = w;
                }
                None => return false,
            }
        }
    }

    fn fits(&self, v: usize, c: usize) -> Option<Vec<usize>> {
        let inside: Vec<usize> = self.g.neighbors(v).iter().copied().filter(|&w| self.labels[w] == c).collect();
        if inside.len() > 2 || inside.iter().any(|&w| self.deg[w] >= 2) {
            return None;
        }
        if inside.len() == 2 && self.same_path(inside[0], inside[1], c) {
            return None;
        }
        Some(inside)
    }

    fn run(&mut self, v: usize, used: usize) -> Option<bool> {
        if v == self.g.n() {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        for c in 0..(used + 1).min(self.r) {
            let Some(inside) = self.fits(v, c) else { continue };
            self.labels[v] = c;
            self.deg[v] = inside.len() as u8;
            for &w in &inside {
                self.deg[w] += 1;
            }
            let res = self.run(v + 1, used.max(c + 1));
            if res != Some(false) {
                return res;
            }
            for &w in &inside {
                self.deg[w] -= 1;
            }
            self.labels[v] = NONE;
            self.deg[v] = 0;
        }
        Some(false)
    }
}

/// Minimum number of classes in a vertex partition into induced linear
/// forests. Above budget, the chromatic partition is returned instead
/// (independent sets are linear forests) with `exact = false`.
pub fn lva_exact(g: &Graph, budget: &Budget) -> PartitionResult {
    let fallback = || {
        let chi = chromatic_number(g, budget);
        let partition = Partition { classes: chi.partition.classes, certifies: Certifies::Lva };
        PartitionResult { value: partition.len(), partition, exact: false }
    };
    if !budget.allows(g.n(), LVA_MAX_N) {
        return fallback();
    }
    if g.n() == 0 {
        return PartitionResult {
            value: 0,
            partition: Partition { classes: vec![], certifies: Certifies::Lva },
            exact: true,
        };
    }
    let mut nodes = 0;
    for r in 1..=g.n() {
        let mut s = Search { g, r, labels: vec![NONE; g.n()], deg: vec![0; g.n()], nodes, budget: budget.max_nodes };
        match s.run(0, 0) {
            Some(true) => {
                let partition = Partition::from_labels(&s.labels, Certifies::Lva);
                return PartitionResult { value: r, partition, exact: true };
            }
            Some(false) => nodes = s.nodes,
            None => return fallback(),
        }
    }
    unreachable!("singletons are linear forests")
}
