use affcover_core::families::complete_binary_tree;
use affcover_drawing::Drawing;

use crate::ConstructionResult;
use crate::Result;

/// Grid size parameter: the tree of height `h >= 2` fits an
/// `m(h) x (m(h)+1)` grid, with `m(2) = 2`, `m(3) = 4`, `m(h+2) = 2m(h) + 4`.
pub fn binary_tree_m(h: usize) -> usize {
    match h {
        0 => 0,
        1 => 1,
        2 => 2,
        3 => 4,
        _ => 2 * binary_tree_m(h - 2) + 4,
    }
}

/// Heap-ordered positions, `y` growing downward, root at the origin.
fn layout(h: usize) -> Vec<(i64, i64)> {
    match h {
        0 => vec![(0, 0)],
        1 => vec![(0, 0), (1, 0), (0, 1)],
        2 => vec![(0, 0), (1, 0), (0, 2), (2, 0), (1, 1), (1, 2), (0, 3)],
        3 => vec![
            (0, 0),
            (0, 2),
            (2, 0),
            (0, 4),
            (1, 2),
            (2, 2),
            (3, 0),
            (0, 5),
            (1, 4),
            (1, 1),
            (1, 3),
            (2, 3),
            (3, 2),
            (3, 1),
            (4, 0),
        ],
        _ => {
            let m = binary_tree_m(h - 2) as i64;
            let sub = layout(h - 2);
            let mut pos = vec![(0, 0); (1 << (h + 1)) - 1];
            pos[1] = (1, 0);
            pos[2] = (0, m + 3);
            let corners = [(m + 2, 0), (1, 1), (m + 1, m + 3), (0, m + 4)];
            for (g, (cx, cy)) in (3..7).zip(corners) {
                for (l, &(x, y)) in sub.iter().enumerate() {
                    let depth = usize::BITS - 1 - (l + 1).leading_zeros();
                    let big = ((g + 1) << depth) + (l + 1 - (1 << depth)) - 1;
                    pos[big] = (cx + x, cy + y);
                }
            }
            pos
        }
    }
}

/// Grid drawing of the complete binary tree of height `h` whose edges lie on
/// at most `2m(h) + 1` lines for `h >= 2`. Each grandchild of the root gets
/// its own block for a recursively drawn subtree of height `h - 2`.
pub fn binary_tree_grid(h: usize) -> Result<ConstructionResult> {
    let pts: Vec<Vec<i64>> = layout(h).into_iter().map(|(x, y)| vec![x, y]).collect();
    let claimed = match h {
        0 => 0,
        1 => 2,
        _ => 2 * binary_tree_m(h) + 1,
    };
    let d =
        Drawing::from_ints(complete_binary_tree(h), &pts, format!("binary_tree_grid h={h} m={}", binary_tree_m(h)))?;
    ConstructionResult::edge_lines(d, claimed)
}
