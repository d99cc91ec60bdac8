//! Exact branch-and-bound solvers for the combinatorial quantities behind
//! the cover numbers.
//!
//! Every solver runs under a [`Budget`]. When the budget is exceeded the
//! result still carries a valid witness, but `exact` is false and the value
//! is only an upper bound (or, for treewidth, an interval).

mod bisection;
mod clique_cover;
mod coloring;
mod lva;
mod partition;
mod sweep;
mod thickness;
mod treewidth;

pub use bisection::{bisection_width_exact, BisectionResult};
pub use clique_cover::{clique_cover_exact, clique_cover_within, steiner_bounds, CliqueCover, CliqueCoverResult};
pub use coloring::{chromatic_number, greedy_coloring};
pub use lva::lva_exact;
pub use partition::{Certifies, Partition, PartitionResult};
pub use sweep::{nine_lva_sweep, triangulations, SweepRow};
pub use thickness::vertex_thickness_exact;
pub use treewidth::{treewidth_exact, TreewidthResult};

/// Limits for a solver run. `max_n` overrides the solver's default vertex
/// limit; `max_nodes` caps the number of search nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_n: Option<usize>,
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_n: None, max_nodes: 50_000_000 }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_n: None, max_nodes }
    }

    pub(crate) fn allows(&self, n: usize, default_max: usize) -> bool {
        n <= self.max_n.unwrap_or(default_max)
    }
}

pub const CHROMATIC_MAX_N: usize = 24;
pub const LVA_MAX_N: usize = 20;
pub const VT_MAX_N: usize = 16;
pub const TREEWIDTH_MAX_N: usize = 18;
pub const BISECTION_MAX_N: usize = 20;
