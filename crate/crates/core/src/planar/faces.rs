use serde::{Deserialize, Serialize};

use super::{EmbeddedGraph, HalfEdgeId, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FaceId(pub u32);

impl FaceId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Display for FaceId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "f{}", self.0)
    }
}

/// Half the number of boundary edges of a face; `Infinite` marks a
/// logarithmic region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HalfDegree {
    Finite(u32),
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceRecord {
    /// Half-edges in traversal order; the face lies to their left.
    pub boundary: Vec<HalfEdgeId>,
    pub half_degree: HalfDegree,
    pub touches_truncation_boundary: bool,
    pub label: Option<u8>,
}

impl FaceRecord {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn is_interior(&self) -> bool {
        !self.touches_truncation_boundary
    }
}

/// All faces of a graph together with the half-edge → face map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    pub records: Vec<FaceRecord>,
    face_of: Vec<FaceId>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    #[inline]
    pub fn face_of(&self, h: HalfEdgeId) -> FaceId {
        self.face_of[h.index()]
    }

    pub fn get(&self, f: FaceId) -> &FaceRecord {
        &self.records[f.index()]
    }

    pub fn ids(&self) -> impl Iterator<Item = FaceId> {
        (0..self.records.len() as u32).map(FaceId)
    }

    /// Faces met at the corners of `v`, in rotation order. A face meeting
    /// `v` at several corners appears once per corner.
    pub fn corners<'a>(&'a self, g: &'a EmbeddedGraph, v: VertexId) -> impl Iterator<Item = FaceId> + 'a {
        g.rotation(v).iter().map(move |&h| self.face_of(h))
    }

    /// True when every face at `v` is free of truncation contamination.
    pub fn vertex_is_interior(&self, g: &EmbeddedGraph, v: VertexId) -> bool {
        self.corners(g, v).all(|f| self.records[f.index()].is_interior())
    }
}

/// Traces every face of `g` by following [`EmbeddedGraph::face_next`].
///
/// The graph has already been validated on construction, so tracing cannot
/// fail; a traversal that does not close would indicate a broken rotation
/// and is guarded by the step bound.
pub fn trace_faces(g: &EmbeddedGraph) -> FaceSet {
    let nh = g.half_edge_count();
    let mut face_of = vec![FaceId(u32::MAX); nh];
    let mut records = Vec::new();
    for start in g.half_edge_ids() {
        if face_of[start.index()].0 != u32::MAX {
            continue;
        }
        let fid = FaceId(records.len() as u32);
        let mut boundary = Vec::new();
        let mut touches = false;
        let mut h = start;
        loop {
            face_of[h.index()] = fid;
            boundary.push(h);
            touches |= g.is_boundary_half_edge(h);
            h = g.face_next(h);
            if h == start {
                break;
            }
            assert!(boundary.len() <= nh, "face traversal did not close");
        }
        let half = boundary.len() / 2;
        records.push(FaceRecord {
            half_degree: HalfDegree::Finite(half as u32),
            boundary,
            touches_truncation_boundary: touches,
            label: None,
        });
    }
    FaceSet { records, face_of }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::fixtures;

    #[test]
    fn digon_has_two_faces() {
        let g = fixtures::digon();
        let faces = trace_faces(&g);
        assert_eq!(faces.len(), 2);
        for f in &faces.records {
            assert_eq!(f.len(), 2);
            assert_eq!(f.half_degree, HalfDegree::Finite(1));
        }
    }

    #[test]
    fn square_euler() {
        let g = fixtures::cycle(4);
        let faces = trace_faces(&g);
        assert_eq!(faces.len(), 2);
        assert!(faces.records.iter().all(|f| f.len() == 4));
        let chi = g.vertex_count() as i64 - g.edge_count() as i64 + faces.len() as i64;
        assert_eq!(chi, 2);
    }

    #[test]
    fn faces_partition_half_edges() {
        let g = fixtures::grid(5, 4);
        let faces = trace_faces(&g);
        let total: usize = faces.records.iter().map(|f| f.len()).sum();
        assert_eq!(total, g.half_edge_count());
        for h in g.half_edge_ids() {
            let f = faces.face_of(h);
            assert!(faces.get(f).boundary.contains(&h));
        }
    }
}
