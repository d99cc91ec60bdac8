//! Exact minimum set cover by branch and bound.

use fixedbitset::FixedBitSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverResult {
    /// Indices into the input family, ascending.
    pub chosen: Vec<usize>,
    /// False when the node budget ran out; `chosen` is then the best cover found.
    pub exact: bool,
}

/// Smallest subfamily of `sets` covering `0..universe`, or `None` if the
/// union misses an element. Ties are broken deterministically.
pub fn min_set_cover(universe: usize, sets: &[FixedBitSet], max_nodes: u64) -> Option<SetCoverResult> {
    let mut all = FixedBitSet::with_capacity(universe);
    for s in sets {
        all.union_with(s);
    }
    if all.count_ones(..universe) < universe {
        return None;
    }
    if universe == 0 {
        return Some(SetCoverResult { chosen: Vec::new(), exact: true });
    }
    let sets: Vec<FixedBitSet> = sets
        .iter()
        .map(|s| {
            let mut t = s.clone();
            t.grow(universe);
            t.set_range(universe.., false);
            t
        })
        .collect();
    let cands: Vec<usize> = (0..sets.len())
        .filter(|&i| {
            let a = &sets[i];
            a.count_ones(..) > 0
                && !(0..sets.len()).any(|j| j != i && a.is_subset(&sets[j]) && (!sets[j].is_subset(a) || j < i))
        })
        .collect();
    let containing: Vec<Vec<usize>> =
        (0..universe).map(|e| cands.iter().copied().filter(|&c| sets[c].contains(e)).collect()).collect();

    let greedy = greedy(universe, &sets, &cands);
    let mut s = Search {
        sets: &sets,
        cands: &cands,
        containing: &containing,
        best: greedy,
        nodes: 0,
        max_nodes,
        aborted: false,
    };
    let mut uncovered = FixedBitSet::with_capacity(universe);
    uncovered.insert_range(..);
    let mut path = Vec::new();
    s.dfs(&uncovered, &mut path);
    let mut chosen = s.best;
    chosen.sort_unstable();
    Some(SetCoverResult { chosen, exact: !s.aborted })
}

fn greedy(universe: usize, sets: &[FixedBitSet], cands: &[usize]) -> Vec<usize> {
    let mut uncovered = FixedBitSet::with_capacity(universe);
    uncovered.insert_range(..);
    let mut out = Vec::new();
    while uncovered.count_ones(..) > 0 {
        let &best =
            cands.iter().max_by_key(|&&c| (sets[c].intersection(&uncovered).count(), std::cmp::Reverse(c))).unwrap();
        uncovered.difference_with(&sets[best]);
        out.push(best);
    }
    out
}

struct Search<'a> {
    sets: &'a [FixedBitSet],
    cands: &'a [usize],
    containing: &'a [Vec<usize>],
    best: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
    aborted: bool,
}

impl Search<'_> {
    fn dfs(&mut self, uncovered: &FixedBitSet, path: &mut Vec<usize>) {
        let left = uncovered.count_ones(..);
        if left == 0 {
            if path.len() < self.best.len() {
                self.best = path.clone();
            }
            return;
        }
        if self.aborted || path.len() + 1 >= self.best.len() {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.aborted = true;
            return;
        }
        let widest = self.cands.iter().map(|&c| self.sets[c].intersection(uncovered).count()).max().unwrap_or(0);
        if widest == 0 || path.len() + left.div_ceil(widest) >= self.best.len() {
            return;
        }
        let e = uncovered.ones().min_by_key(|&e| (self.containing[e].len(), e)).expect("nonempty");
        let mut options: Vec<(usize, usize)> =
            self.containing[e].iter().map(|&c| (self.sets[c].intersection(uncovered).count(), c)).collect();
        options.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, c) in options {
            let mut next = uncovered.clone();
            next.difference_with(&self.sets[c]);
            path.push(c);
            self.dfs(&next, path);
            path.pop();
            if self.aborted {
                return;
            }
        }
    }
}
