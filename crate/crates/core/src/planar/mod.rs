//! Finite embedded planar multigraphs described by rotation systems.
//!
//! A graph is a set of half-edges, each with an origin vertex and a twin,
//! plus a counter-clockwise cyclic order of outgoing half-edges at every
//! vertex. Multi-edges and loops are ordinary here: the rotation system is
//! the source of truth, never an adjacency set.

mod ball;
mod builder;
mod faces;
pub mod fixtures;
mod io;

pub use ball::{bfs_distances, combinatorial_ball, trusted_radius, Ball, UNREACHED};
pub use builder::GraphBuilder;
pub use faces::{trace_faces, FaceId, FaceRecord, FaceSet, HalfDegree};
pub use io::{to_dot, GraphDump};

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::GraphError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfEdgeId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl HalfEdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for HalfEdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h{}", self.0)
    }
}

/// Vertex marking of a Speiser graph: `×` or `○`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Cross,
    Circle,
}

impl Parity {
    pub fn from_bit(bit: usize) -> Self {
        if bit.is_multiple_of(2) {
            Parity::Cross
        } else {
            Parity::Circle
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Cross => Parity::Circle,
            Parity::Circle => Parity::Cross,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub parity: Parity,
    /// Outgoing half-edges in counter-clockwise order.
    pub rotation: Vec<HalfEdgeId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfEdge {
    pub origin: VertexId,
    pub twin: HalfEdgeId,
}

/// An immutable, structurally validated embedded graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    vertices: Vec<Vertex>,
    half_edges: Vec<HalfEdge>,
    /// Position of each half-edge inside its origin's rotation.
    rot_pos: Vec<u32>,
    boundary: Vec<bool>,
}

impl EmbeddedGraph {
    /// Validates the structural invariants and freezes the graph.
    pub fn from_parts(
        vertices: Vec<Vertex>,
        half_edges: Vec<HalfEdge>,
        boundary_marks: &[HalfEdgeId],
    ) -> Result<Self, GraphError> {
        let nh = half_edges.len();
        let nv = vertices.len();
        for (i, he) in half_edges.iter().enumerate() {
            let t = he.twin.index();
            if t >= nh {
                return Err(GraphError::DanglingTwin { half_edge: i as u32 });
            }
            if t == i || half_edges[t].twin.index() != i {
                return Err(GraphError::TwinNotInvolution { half_edge: i as u32 });
            }
            if he.origin.index() >= nv {
                return Err(GraphError::DanglingOrigin { half_edge: i as u32 });
            }
        }
        let mut rot_pos = vec![u32::MAX; nh];
        for (vi, v) in vertices.iter().enumerate() {
            for (pos, &h) in v.rotation.iter().enumerate() {
                let hi = h.index();
                if hi >= nh {
                    return Err(GraphError::DanglingRotation { vertex: vi as u32 });
                }
                if rot_pos[hi] != u32::MAX {
                    return Err(GraphError::DuplicateInRotation { half_edge: hi as u32 });
                }
                if half_edges[hi].origin.index() != vi {
                    return Err(GraphError::WrongOrigin {
                        half_edge: hi as u32,
                        vertex: vi as u32,
                    });
                }
                rot_pos[hi] = pos as u32;
            }
        }
        if let Some(missing) = rot_pos.iter().position(|&p| p == u32::MAX) {
            return Err(GraphError::MissingFromRotation {
                half_edge: missing as u32,
            });
        }
        let mut boundary = vec![false; nh];
        for &h in boundary_marks {
            if h.index() >= nh {
                return Err(GraphError::DanglingBoundaryMark { half_edge: h.0 });
            }
            boundary[h.index()] = true;
        }
        Ok(Self {
            vertices,
            half_edges,
            rot_pos,
            boundary,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn half_edge_count(&self) -> usize {
        self.half_edges.len()
    }

    pub fn edge_count(&self) -> usize {
        self.half_edges.len() / 2
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn half_edge_ids(&self) -> impl Iterator<Item = HalfEdgeId> + '_ {
        (0..self.half_edges.len() as u32).map(HalfEdgeId)
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.index()]
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn half_edges(&self) -> &[HalfEdge] {
        &self.half_edges
    }

    pub fn parity(&self, v: VertexId) -> Parity {
        self.vertices[v.index()].parity
    }

    pub fn rotation(&self, v: VertexId) -> &[HalfEdgeId] {
        &self.vertices[v.index()].rotation
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.vertices[v.index()].rotation.len()
    }

    #[inline]
    pub fn origin(&self, h: HalfEdgeId) -> VertexId {
        self.half_edges[h.index()].origin
    }

    #[inline]
    pub fn twin(&self, h: HalfEdgeId) -> HalfEdgeId {
        self.half_edges[h.index()].twin
    }

    /// Endpoint of `h`, i.e. the origin of its twin.
    #[inline]
    pub fn target(&self, h: HalfEdgeId) -> VertexId {
        self.origin(self.twin(h))
    }

    /// Next half-edge along the face to the left of `h`.
    #[inline]
    pub fn face_next(&self, h: HalfEdgeId) -> HalfEdgeId {
        let t = self.twin(h);
        let v = self.origin(t);
        let rot = &self.vertices[v.index()].rotation;
        let p = self.rot_pos[t.index()] as usize;
        rot[(p + rot.len() - 1) % rot.len()]
    }

    pub fn rotation_position(&self, h: HalfEdgeId) -> usize {
        self.rot_pos[h.index()] as usize
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.rotation(v).iter().map(move |&h| self.target(h))
    }

    pub fn is_boundary_half_edge(&self, h: HalfEdgeId) -> bool {
        self.boundary[h.index()]
    }

    pub fn boundary_marks(&self) -> Vec<HalfEdgeId> {
        self.half_edge_ids().filter(|&h| self.boundary[h.index()]).collect()
    }

    /// A vertex touching a marked half-edge (in either direction).
    pub fn is_boundary_vertex(&self, v: VertexId) -> bool {
        self.rotation(v)
            .iter()
            .any(|&h| self.boundary[h.index()] || self.boundary[self.twin(h).index()])
    }

    /// Number of connected components (isolated vertices count).
    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(VertexId(s as u32));
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w.index()] {
                        seen[w.index()] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }
}
