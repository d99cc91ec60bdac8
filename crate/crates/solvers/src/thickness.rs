use affcover_core::Graph;
use affcover_planar::is_planar;

use crate::partition::{Certifies, Partition, PartitionResult};
use crate::{Budget, VT_MAX_N};

struct Search<'a> {
    g: &'a Graph,
    r: usize,
    classes: Vec<Vec<usize>>,
    edges_in: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn run(&mut self, v: usize, used: usize) -> Option<bool> {
        if v == self.g.n() {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        for c in 0..(used + 1).min(self.r) {
            let add = self.g.neighbors(v).iter().filter(|w| self.classes[c].contains(w)).count();
            let size = self.classes[c].len() + 1;
            let m = self.edges_in[c] + add;
            if size >= 3 && m > 3 * size - 6 {
                continue;
            }
            self.classes[c].push(v);
            if size >= 5 && add >= 2 && !is_planar(&self.g.induced(&self.classes[c])) {
                self.classes[c].pop();
                continue;
            }
            self.edges_in[c] = m;
            let res = self.run(v + 1, used.max(c + 1));
            if res != Some(false) {
                return res;
            }
            self.edges_in[c] -= add;
            self.classes[c].pop();
        }
        Some(false)
    }
}

/// Blocks of at most four consecutive vertices; each induces a planar graph.
fn blocks_of_four(n: usize) -> Partition {
    let labels: Vec<usize> = (0..n).map(|v| v / 4).collect();
    Partition::from_labels(&labels, Certifies::VertexThickness)
}

/// Minimum number of classes in a vertex partition into induced planar
/// subgraphs. Above budget, the `ceil(n/4)` blocks of four are returned with
/// `exact = false`.
pub fn vertex_thickness_exact(g: &Graph, budget: &Budget) -> PartitionResult {
    let fallback = || {
        let partition = blocks_of_four(g.n());
        PartitionResult { value: partition.len(), partition, exact: false }
    };
    if !budget.allows(g.n(), VT_MAX_N) {
        return fallback();
    }
    if g.n() == 0 {
        let partition = Partition { classes: vec![], certifies: Certifies::VertexThickness };
        return PartitionResult { value: 0, partition, exact: true };
    }
    let mut nodes = 0;
    for r in 1..=g.n().div_ceil(4) {
        let mut s =
            Search { g, r, classes: vec![Vec::new(); r], edges_in: vec![0; r], nodes, budget: budget.max_nodes };
        match s.run(0, 0) {
            Some(true) => {
                let mut labels = vec![0; g.n()];
                for (i, c) in s.classes.iter().enumerate() {
                    for &v in c {
                        labels[v] = i;
                    }
                }
                let partition = Partition::from_labels(&labels, Certifies::VertexThickness);
                return PartitionResult { value: r, partition, exact: true };
            }
            Some(false) => nodes = s.nodes,
            None => return fallback(),
        }
    }
    unreachable!("blocks of four vertices are planar")
}
