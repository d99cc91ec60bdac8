use std::collections::{HashSet, VecDeque};

use affcover_core::Graph;

/// A combinatorial plane embedding.
///
/// `rotation[v]` lists the neighbours of `v` in cyclic order. Faces are
/// traced by the rule that the successor of the dart `u -> v` is
/// `v -> w`, where `w` follows `u` in `rotation[v]`; each face is stored as
/// the vertex sequence of its closed walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneEmbedding {
    rotation: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
    outer_face: usize,
}

impl PlaneEmbedding {
    /// Builds an embedding from a rotation system, tracing its faces. The
    /// outer face is the longest one (lowest index on ties).
    pub fn from_rotation(rotation: Vec<Vec<usize>>) -> Self {
        let faces = trace_faces(&rotation);
        let outer_face =
            faces.iter().enumerate().max_by(|a, b| a.1.len().cmp(&b.1.len()).then(b.0.cmp(&a.0))).map_or(0, |(i, _)| i);
        PlaneEmbedding { rotation, faces, outer_face }
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn outer_face(&self) -> usize {
        self.outer_face
    }

    /// The directed edges of face `i`, in walk order.
    pub fn face_edges(&self, i: usize) -> Vec<(usize, usize)> {
        let f = &self.faces[i];
        (0..f.len()).map(|k| (f[k], f[(k + 1) % f.len()])).collect()
    }

    /// Checks that the rotation matches `g`, that every dart lies on exactly
    /// one face and that Euler's formula holds on every component.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.n() != g.n() {
            return false;
        }
        for v in 0..g.n() {
            let mut r = self.rotation[v].clone();
            r.sort_unstable();
            if r != g.neighbors(v) {
                return false;
            }
        }
        let mut darts = HashSet::new();
        for i in 0..self.faces.len() {
            for d in self.face_edges(i) {
                if !g.has_edge(d.0, d.1) || !darts.insert(d) {
                    return false;
                }
            }
        }
        if darts.len() != 2 * g.m() {
            return false;
        }
        let comps = g.components();
        let mut comp_of = vec![0; g.n()];
        for (c, vs) in comps.iter().enumerate() {
            for &v in vs {
                comp_of[v] = c;
            }
        }
        let mut faces_in = vec![0usize; comps.len()];
        for f in &self.faces {
            faces_in[comp_of[f[0]]] += 1;
        }
        comps.iter().enumerate().all(|(c, vs)| {
            let m = vs.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
            let f = if m == 0 { 1 } else { faces_in[c] };
            vs.len() + f == m + 2
        })
    }
}

pub(crate) fn succ(rot: &[Vec<usize>], v: usize, u: usize) -> usize {
    let r = &rot[v];
    let i = r.iter().position(|&x| x == u).expect("dart in rotation");
    r[(i + 1) % r.len()]
}

pub(crate) fn pred(rot: &[Vec<usize>], v: usize, u: usize) -> usize {
    let r = &rot[v];
    let i = r.iter().position(|&x| x == u).expect("dart in rotation");
    r[(i + r.len() - 1) % r.len()]
}

pub(crate) fn trace_faces(rot: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen: Vec<Vec<bool>> = rot.iter().map(|r| vec![false; r.len()]).collect();
    let mut faces = Vec::new();
    for v in 0..rot.len() {
        for i in 0..rot[v].len() {
            if seen[v][i] {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (v, rot[v][i]);
            loop {
                let j = rot[a].iter().position(|&x| x == b).unwrap();
                if seen[a][j] {
                    break;
                }
                seen[a][j] = true;
                face.push(a);
                let c = succ(rot, b, a);
                a = b;
                b = c;
            }
            faces.push(face);
        }
    }
    faces
}

pub fn is_planar(g: &Graph) -> bool {
    planarity_test(g).is_some()
}

/// Returns a plane embedding of `g`, or `None` when `g` is not planar.
pub fn planarity_test(g: &Graph) -> Option<PlaneEmbedding> {
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return None;
    }
    let mut rotation = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        let rot = embed_block(&block)?;
        for (v, r) in rot {
            rotation[v].extend(r);
        }
    }
    let emb = PlaneEmbedding::from_rotation(rotation);
    debug_assert!(emb.is_valid_for(g));
    Some(emb)
}

/// Edge sets of the biconnected blocks, found by an iterative Tarjan search.
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut estack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    for s in 0..n {
        if disc[s] != usize::MAX {
            continue;
        }
        disc[s] = timer;
        low[s] = timer;
        timer += 1;
        let mut stack: Vec<(usize, usize, usize)> = vec![(s, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, p) = (top.0, top.1);
            if top.2 < g.degree(v) {
                let w = g.neighbors(v)[top.2];
                top.2 += 1;
                if disc[w] == usize::MAX {
                    estack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != p && disc[w] < disc[v] {
                    estack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = estack.pop() {
                            block.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

enum Fragment {
    Edge(usize, usize),
    Bridge { vertices: Vec<usize>, attachments: Vec<usize> },
}

/// Embeds one biconnected block by path addition, returning the rotation at
/// each of its vertices (global labels).
fn embed_block(edges: &[(usize, usize)]) -> Option<Vec<(usize, Vec<usize>)>> {
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    if edges.len() == 1 {
        let (a, b) = edges[0];
        return Some(vec![(a, vec![b]), (b, vec![a])]);
    }
    let k = verts.len();
    let local = |v: usize| verts.binary_search(&v).unwrap();
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in edges {
        let (a, b) = (local(a), local(b));
        adj[a].push(b);
        adj[b].push(a);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    let key = |a: usize, b: usize| (a.min(b), a.max(b));

    // Initial cycle: the edge 0-w closed by a shortest path from w back to 0.
    let w0 = adj[0][0];
    let mut parent = vec![usize::MAX; k];
    parent[w0] = w0;
    let mut queue = VecDeque::from([w0]);
    while let Some(v) = queue.pop_front() {
        for &x in &adj[v] {
            if parent[x] == usize::MAX && !(v == w0 && x == 0) {
                parent[x] = v;
                queue.push_back(x);
            }
        }
    }
    let mut cycle = vec![0];
    let mut cur = parent[0];
    while cur != w0 {
        cycle.push(cur);
        cur = parent[cur];
    }
    cycle.push(w0);

    let mut emb_v = vec![false; k];
    let mut emb_e: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..cycle.len() {
        emb_v[cycle[i]] = true;
        emb_e.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];

    while emb_e.len() < edges.len() {
        let mut frags = Vec::new();
        for a in 0..k {
            for &b in &adj[a] {
                if a < b && emb_v[a] && emb_v[b] && !emb_e.contains(&(a, b)) {
                    frags.push(Fragment::Edge(a, b));
                }
            }
        }
        let mut seen = vec![false; k];
        for s in 0..k {
            if emb_v[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut vertices = vec![s];
            let mut att = Vec::new();
            let mut i = 0;
            while i < vertices.len() {
                let v = vertices[i];
                i += 1;
                for &x in &adj[v] {
                    if emb_v[x] {
                        att.push(x);
                    } else if !seen[x] {
                        seen[x] = true;
                        vertices.push(x);
                    }
                }
            }
            att.sort_unstable();
            att.dedup();
            frags.push(Fragment::Bridge { vertices, attachments: att });
        }

        let in_face: Vec<Vec<bool>> = faces
            .iter()
            .map(|f| {
                let mut m = vec![false; k];
                for &v in f {
                    m[v] = true;
                }
                m
            })
            .collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in frags.iter().enumerate() {
            let att: &[usize] = match frag {
                Fragment::Edge(a, b) => &[*a, *b],
                Fragment::Bridge { attachments, .. } => attachments,
            };
            let ok: Vec<usize> = (0..faces.len()).filter(|&f| att.iter().all(|&v| in_face[f][v])).collect();
            match ok.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, ok[0]));
                    break;
                }
                _ if choice.is_none() => choice = Some((fi, ok[0])),
                _ => {}
            }
        }
        let (fi, face) = choice.expect("an unembedded edge remains");
        let path = match &frags[fi] {
            Fragment::Edge(a, b) => vec![*a, *b],
            Fragment::Bridge { vertices, attachments } => bridge_path(&adj, &emb_v, vertices, attachments),
        };
        for w in path.windows(2) {
            emb_e.insert(key(w[0], w[1]));
        }
        for &v in &path {
            emb_v[v] = true;
        }
        let f = faces.swap_remove(face);
        let (f1, f2) = split_face(&f, &path);
        faces.push(f1);
        faces.push(f2);
    }

    let mut succ_map = vec![Vec::new(); k];
    for f in &faces {
        let l = f.len();
        for i in 0..l {
            succ_map[f[(i + 1) % l]].push((f[i], f[(i + 2) % l]));
        }
    }
    let mut out = Vec::with_capacity(k);
    for v in 0..k {
        let next = |u: usize| succ_map[v].iter().find(|p| p.0 == u).map(|p| p.1).expect("dart on a face");
        let mut rot = vec![adj[v][0]];
        let mut u = next(adj[v][0]);
        while u != adj[v][0] {
            rot.push(u);
            u = next(u);
        }
        debug_assert_eq!(rot.len(), adj[v].len());
        out.push((verts[v], rot.into_iter().map(|x| verts[x]).collect()));
    }
    Some(out)
}

/// A path through a bridge between two distinct attachment vertices.
fn bridge_path(adj: &[Vec<usize>], emb_v: &[bool], vertices: &[usize], att: &[usize]) -> Vec<usize> {
    let a = att[0];
    let start = *adj[a].iter().find(|&&x| vertices.contains(&x)).expect("attachment touches its bridge");
    let k = adj.len();
    let mut parent = vec![usize::MAX; k];
    parent[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        if let Some(&b) = adj[v].iter().find(|&&x| emb_v[x] && x != a) {
            let mut inner = vec![v];
            let mut c = v;
            while c != start {
                c = parent[c];
                inner.push(c);
            }
            inner.reverse();
            let mut path = vec![a];
            path.extend(inner);
            path.push(b);
            return path;
        }
        for &x in &adj[v] {
            if !emb_v[x] && parent[x] == usize::MAX {
                parent[x] = v;
                queue.push_back(x);
            }
        }
    }
    unreachable!("a bridge of a biconnected graph has two attachments")
}

/// Splits face `f` along `path`, whose two ends lie on `f`.
fn split_face(f: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let l = f.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let ia = f.iter().position(|&x| x == a).unwrap();
    let ib = f.iter().position(|&x| x == b).unwrap();
    let inner = &path[1..path.len() - 1];
    let mut f1 = Vec::new();
    let mut i = ia;
    loop {
        f1.push(f[i]);
        if i == ib {
            break;
        }
        i = (i + 1) % l;
    }
    f1.extend(inner.iter().rev());
    let mut f2 = Vec::new();
    let mut i = ib;
    loop {
        f2.push(f[i]);
        if i == ia {
            break;
        }
        i = (i + 1) % l;
    }
    f2.extend(inner.iter());
    (f1, f2)
}
