//! Explicit drawings that certify upper bounds on line and plane cover
//! numbers. Every constructor re-verifies its drawing and validates its
//! witness before returning.

mod bipartite;
mod complete;
mod multipartite;
mod pi23;
mod prism;
mod result;
mod tree;
mod two_lines;

pub use bipartite::{k2q_optimal, kpq_plane_book, parallel_kpq_lines};
pub use complete::{kn_small_plane_cover, moment_curve_kn, KN_PLANE_COVER_UPPER};
pub use multipartite::{pach_multipartite, pi13_drawing, smallest_prime_at_least};
pub use pi23::{pi23_drawing, PI23_RETRY_CAP};
pub use prism::{prism_stack_3d, PrismBase};
pub use result::{ConstructError, ConstructionResult, Result};
pub use tree::{binary_tree_grid, binary_tree_m};
pub use two_lines::{linear_forest_one_line, nested_squares_two_lines, spiral_two_lines};
