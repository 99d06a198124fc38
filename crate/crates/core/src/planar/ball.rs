use std::collections::VecDeque;

use super::{EmbeddedGraph, FaceSet, VertexId};

pub const UNREACHED: u32 = u32::MAX;

/// Breadth-first distances from `w0` to every vertex (`UNREACHED` if none).
pub fn bfs_distances(g: &EmbeddedGraph, w0: VertexId) -> Vec<u32> {
    let mut dist = vec![UNREACHED; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[w0.index()] = 0;
    queue.push_back(w0);
    while let Some(v) = queue.pop_front() {
        let d = dist[v.index()];
        for w in g.neighbors(v) {
            if dist[w.index()] == UNREACHED {
                dist[w.index()] = d + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// The combinatorial ball `B(w0, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ball {
    pub center: VertexId,
    pub radius: u32,
    /// Members with their distance, ordered by distance then index.
    pub members: Vec<(VertexId, u32)>,
    /// Set when the ball contains a truncation-boundary vertex.
    pub clipped: bool,
}

impl Ball {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn combinatorial_ball(g: &EmbeddedGraph, w0: VertexId, r: u32) -> Ball {
    let mut dist = vec![UNREACHED; g.vertex_count()];
    let mut queue = VecDeque::new();
    let mut members = vec![(w0, 0)];
    let mut clipped = g.is_boundary_vertex(w0);
    dist[w0.index()] = 0;
    queue.push_back(w0);
    while let Some(v) = queue.pop_front() {
        let d = dist[v.index()];
        if d == r {
            continue;
        }
        for w in g.neighbors(v) {
            if dist[w.index()] == UNREACHED {
                dist[w.index()] = d + 1;
                members.push((w, d + 1));
                clipped |= g.is_boundary_vertex(w);
                queue.push_back(w);
            }
        }
    }
    members.sort_by_key(|&(v, d)| (d, v));
    Ball {
        center: w0,
        radius: r,
        members,
        clipped,
    }
}

/// Largest `r` such that `B(w0, r + 1)` contains no boundary vertex and
/// every vertex of `B(w0, r)` has only uncontaminated faces. `None` when even
/// `r = 0` fails.
///
/// For a graph without truncation marks the ball eventually covers the
/// component and the eccentricity of `w0` is returned.
pub fn trusted_radius(g: &EmbeddedGraph, faces: &FaceSet, dist: &[u32]) -> Option<u32> {
    let mut first_bad_boundary = UNREACHED;
    let mut first_bad_face = UNREACHED;
    let mut ecc = 0;
    for v in g.vertex_ids() {
        let d = dist[v.index()];
        if d == UNREACHED {
            continue;
        }
        ecc = ecc.max(d);
        if g.is_boundary_vertex(v) {
            first_bad_boundary = first_bad_boundary.min(d);
        }
        if !faces.vertex_is_interior(g, v) {
            first_bad_face = first_bad_face.min(d);
        }
    }
    let by_boundary = if first_bad_boundary == UNREACHED {
        ecc as i64
    } else {
        first_bad_boundary as i64 - 2
    };
    let by_face = if first_bad_face == UNREACHED {
        ecc as i64
    } else {
        first_bad_face as i64 - 1
    };
    let r = by_boundary.min(by_face);
    (r >= 0).then_some(r as u32)
}
