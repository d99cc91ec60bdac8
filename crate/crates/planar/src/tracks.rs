use std::collections::VecDeque;

use affcover_core::Graph;

use crate::{PlanarError, Result};

/// Vertices placed on numbered tracks, with a left-to-right order inside
/// each track.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackAssignment {
    track_of: Vec<usize>,
    rank: Vec<usize>,
}

impl TrackAssignment {
    /// From the vertex lists of tracks `0, 1, ...`, each in left-to-right order.
    pub fn from_tracks(n: usize, tracks: &[Vec<usize>]) -> Result<Self> {
        let mut track_of = vec![usize::MAX; n];
        let mut rank = vec![0; n];
        for (t, vs) in tracks.iter().enumerate() {
            for (r, &v) in vs.iter().enumerate() {
                if v >= n || track_of[v] != usize::MAX {
                    return Err(PlanarError::InvalidTracks(format!("vertex {v} missing from range or repeated")));
                }
                track_of[v] = t;
                rank[v] = r;
            }
        }
        if let Some(v) = track_of.iter().position(|&t| t == usize::MAX) {
            return Err(PlanarError::InvalidTracks(format!("vertex {v} has no track")));
        }
        Ok(TrackAssignment { track_of, rank })
    }

    pub fn track_of(&self, v: usize) -> usize {
        self.track_of[v]
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn num_tracks(&self) -> usize {
        self.track_of.iter().max().map_or(0, |t| t + 1)
    }

    /// Vertex lists per track, in rank order.
    pub fn tracks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_tracks()];
        for v in 0..self.track_of.len() {
            out[self.track_of[v]].push(v);
        }
        for t in &mut out {
            t.sort_by_key(|&v| self.rank[v]);
        }
        out
    }

    /// Checks the track-drawing conditions: every edge stays on a track
    /// (joining rank-adjacent vertices) or joins consecutive tracks, and no
    /// two edges between the same pair of tracks cross.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.track_of.len() != g.n() {
            return Err(PlanarError::InvalidTracks("vertex count differs from the graph".into()));
        }
        let mut between: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.num_tracks()];
        for &(u, v) in g.edges() {
            let (tu, tv) = (self.track_of[u], self.track_of[v]);
            if tu == tv {
                if self.rank[u].abs_diff(self.rank[v]) != 1 {
                    return Err(PlanarError::InvalidTracks(format!("edge {u}-{v} skips a vertex on its track")));
                }
            } else if tu.abs_diff(tv) == 1 {
                let (lo, hi) = if tu < tv { (u, v) } else { (v, u) };
                between[tu.min(tv)].push((self.rank[lo], self.rank[hi]));
            } else {
                return Err(PlanarError::InvalidTracks(format!("edge {u}-{v} spans non-adjacent tracks")));
            }
        }
        for es in &between {
            for (i, a) in es.iter().enumerate() {
                for b in &es[i + 1..] {
                    if (a.0 < b.0 && a.1 > b.1) || (a.0 > b.0 && a.1 < b.1) {
                        return Err(PlanarError::InvalidTracks("two edges between the same tracks cross".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Tracks by BFS distance from `root`; inside a track, vertices keep BFS
/// discovery order, so children of earlier parents come first.
pub fn tree_tracks(g: &Graph, root: usize) -> Result<TrackAssignment> {
    if !g.is_tree() || root >= g.n() {
        return Err(PlanarError::NotATree);
    }
    let mut dist = vec![usize::MAX; g.n()];
    dist[root] = 0;
    let mut tracks: Vec<Vec<usize>> = vec![vec![root]];
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                if tracks.len() <= dist[w] {
                    tracks.push(Vec::new());
                }
                tracks[dist[w]].push(w);
                queue.push_back(w);
            }
        }
    }
    TrackAssignment::from_tracks(g.n(), &tracks)
}
