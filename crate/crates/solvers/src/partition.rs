use affcover_core::{is_linear_forest, Graph};
use affcover_planar::is_planar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Certifies {
    /// Every class induces a linear forest.
    Lva,
    /// Every class induces a planar graph.
    VertexThickness,
    /// Every class is independent.
    ProperColoring,
}

/// An ordered vertex partition whose classes satisfy the predicate named by `certifies`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub classes: Vec<Vec<usize>>,
    pub certifies: Certifies,
}

impl Partition {
    /// Builds the partition from a class label per vertex.
    pub fn from_labels(labels: &[usize], certifies: Certifies) -> Self {
        let k = labels.iter().max().map_or(0, |m| m + 1);
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in labels.iter().enumerate() {
            classes[c].push(v);
        }
        classes.retain(|c| !c.is_empty());
        Partition { classes, certifies }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class index of every vertex.
    pub fn labels(&self, n: usize) -> Vec<usize> {
        let mut l = vec![usize::MAX; n];
        for (i, c) in self.classes.iter().enumerate() {
            for &v in c {
                l[v] = i;
            }
        }
        l
    }

    /// Re-checks disjointness, coverage and the certified predicate.
    pub fn validate(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for c in &self.classes {
            for &v in c {
                if v >= g.n() || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return false;
        }
        self.classes.iter().all(|c| match self.certifies {
            Certifies::Lva => is_linear_forest(g, c),
            Certifies::VertexThickness => is_planar(&g.induced(c)),
            Certifies::ProperColoring => g.induced(c).m() == 0,
        })
    }
}

/// A partition-valued solver outcome. When `exact` is false, `value` is an
/// upper bound witnessed by `partition`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionResult {
    pub value: usize,
    pub partition: Partition,
    pub exact: bool,
}
