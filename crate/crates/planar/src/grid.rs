//! Straight-line grid drawings by the shift method.
//!
//! The embedding is first made connected and then fully triangulated by
//! inserting chords into faces; these fill edges only steer the layout and
//! are not part of the result. A canonical ordering is peeled off the outer
//! triangle and the shift method places vertex k above its contour
//! neighbours, giving coordinates in `[0, 2n-4] x [0, n-2]`.

use std::collections::HashSet;

use affcover_core::Graph;

use crate::embedding::{planarity_test, pred, trace_faces};
use crate::{PlanarError, Result};

/// Width and height of the grid used by [`grid_drawing`] on `n` vertices.
pub fn grid_extent(n: usize) -> (i64, i64) {
    match n {
        0 | 1 => (0, 0),
        2 => (1, 0),
        3 => (2, 1),
        _ => (2 * n as i64 - 4, n as i64 - 2),
    }
}

/// Integer coordinates of a crossing-free straight-line drawing of `g`.
pub fn grid_drawing(g: &Graph) -> Result<Vec<[i64; 2]>> {
    let n = g.n();
    let mut fill = Vec::new();
    let comps = g.components();
    for c in &comps[1.min(comps.len())..] {
        fill.push((comps[0][0], c[0]));
    }
    let host =
        Graph::from_edges(n, g.edges().iter().copied().chain(fill)).expect("joining components keeps the graph simple");
    let emb = planarity_test(&host).ok_or(PlanarError::NonPlanar)?;
    match n {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![[0, 0]]),
        2 => return Ok(vec![[0, 0], [1, 0]]),
        3 => return Ok(vec![[0, 0], [2, 0], [1, 1]]),
        _ => {}
    }
    let rot = triangulate(emb.rotations().to_vec(), &host);
    let (order, contour_nbrs) = canonical_order(&rot);
    Ok(shift(n, &order, &contour_nbrs))
}

fn triangulate(mut rot: Vec<Vec<usize>>, g: &Graph) -> Vec<Vec<usize>> {
    let mut present: HashSet<(usize, usize)> = g.edges().iter().copied().collect();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    loop {
        let faces = trace_faces(&rot);
        let Some(face) = faces.into_iter().find(|f| f.len() > 3) else {
            break;
        };
        let l = face.len();
        let (i, j) = (0..l)
            .flat_map(|i| (i + 1..l).map(move |j| (i, j)))
            .find(|&(i, j)| face[i] != face[j] && !present.contains(&key(face[i], face[j])))
            .expect("a face of length > 3 has a non-adjacent pair");
        let (x, y) = (face[i], face[j]);
        let before_x = face[(i + l - 1) % l];
        let before_y = face[(j + l - 1) % l];
        let px = rot[x].iter().position(|&w| w == before_x).unwrap();
        rot[x].insert(px + 1, y);
        let py = rot[y].iter().position(|&w| w == before_y).unwrap();
        rot[y].insert(py + 1, x);
        present.insert(key(x, y));
    }
    debug_assert_eq!(present.len(), 3 * rot.len() - 6);
    rot
}

/// Canonical ordering of a triangulation, with each vertex's neighbours on
/// the contour it is placed over (listed from the `v1` side to the `v2` side).
fn canonical_order(rot: &[Vec<usize>]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let n = rot.len();
    let outer = trace_faces(rot).into_iter().next().expect("a triangulation has faces");
    let mut contour = vec![outer[0], outer[1], outer[2]];
    let mut present = vec![true; n];
    let mut on_contour = vec![false; n];
    for &v in &contour {
        on_contour[v] = true;
    }
    let mut nbrs = vec![Vec::new(); n];
    let mut removed = Vec::new();
    while removed.len() + 3 < n {
        let i = (1..contour.len() - 1)
            .find(|&i| {
                let v = contour[i];
                rot[v].iter().all(|&w| !present[w] || !on_contour[w] || w == contour[i - 1] || w == contour[i + 1])
            })
            .expect("some contour vertex has no chord");
        let v = contour[i];
        let (left, right) = (contour[i - 1], contour[i + 1]);
        let mut arc = Vec::new();
        let mut x = pred(rot, v, left);
        while x != right {
            debug_assert!(present[x]);
            arc.push(x);
            x = pred(rot, v, x);
        }
        let mut cn = vec![left];
        cn.extend(&arc);
        cn.push(right);
        nbrs[v] = cn;
        present[v] = false;
        on_contour[v] = false;
        for &a in &arc {
            on_contour[a] = true;
        }
        contour.splice(i..=i, arc);
        removed.push(v);
    }
    let mut order = vec![contour[0], contour[2], contour[1]];
    order.extend(removed.into_iter().rev());
    (order, nbrs)
}

fn shift(n: usize, order: &[usize], nbrs: &[Vec<usize>]) -> Vec<[i64; 2]> {
    let mut dx = vec![0i64; n];
    let mut y = vec![0i64; n];
    let mut left: Vec<Option<usize>> = vec![None; n];
    let mut right: Vec<Option<usize>> = vec![None; n];
    let (v1, v2, v3) = (order[0], order[1], order[2]);
    dx[v2] = 1;
    dx[v3] = 1;
    y[v3] = 1;
    right[v1] = Some(v3);
    right[v3] = Some(v2);
    for &vk in &order[3..] {
        let c = &nbrs[vk];
        let (wp, wp1, wq, wq1) = (c[0], c[1], c[c.len() - 1], c[c.len() - 2]);
        let multi = c.len() > 2;
        dx[wp1] += 1;
        dx[wq] += 1;
        let span: i64 = c[1..].iter().map(|&x| dx[x]).sum();
        dx[vk] = (-y[wp] + span + y[wq]) / 2;
        y[vk] = (y[wp] + span + y[wq]) / 2;
        dx[wq] = span - dx[vk];
        if multi {
            dx[wp1] -= dx[vk];
        }
        right[wp] = Some(vk);
        right[vk] = Some(wq);
        if multi {
            left[vk] = Some(wp1);
            right[wq1] = None;
        } else {
            left[vk] = None;
        }
    }
    let mut pos = vec![[0i64; 2]; n];
    pos[v1] = [0, y[v1]];
    let mut stack = vec![v1];
    while let Some(p) = stack.pop() {
        for child in [left[p], right[p]].into_iter().flatten() {
            pos[child] = [pos[p][0] + dx[child], y[child]];
            stack.push(child);
        }
    }
    pos
}
