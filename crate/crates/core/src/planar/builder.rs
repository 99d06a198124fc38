use super::{EmbeddedGraph, HalfEdge, HalfEdgeId, Parity, Vertex, VertexId};
use crate::error::GraphError;

/// Incremental construction of an [`EmbeddedGraph`].
///
/// Half-edges are appended to their origin's rotation in insertion order;
/// callers that need a specific cyclic order call [`GraphBuilder::set_rotation`].
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    vertices: Vec<Vertex>,
    half_edges: Vec<HalfEdge>,
    boundary: Vec<HalfEdgeId>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(vertices: usize, edges: usize) -> Self {
        Self {
            vertices: Vec::with_capacity(vertices),
            half_edges: Vec::with_capacity(2 * edges),
            boundary: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self, parity: Parity) -> VertexId {
        self.vertices.push(Vertex {
            parity,
            rotation: Vec::new(),
        });
        VertexId(self.vertices.len() as u32 - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn parity(&self, v: VertexId) -> Parity {
        self.vertices[v.index()].parity
    }

    /// Adds an edge and returns `(u -> v, v -> u)`.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> (HalfEdgeId, HalfEdgeId) {
        let a = HalfEdgeId(self.half_edges.len() as u32);
        let b = HalfEdgeId(a.0 + 1);
        self.half_edges.push(HalfEdge { origin: u, twin: b });
        self.half_edges.push(HalfEdge { origin: v, twin: a });
        self.vertices[u.index()].rotation.push(a);
        self.vertices[v.index()].rotation.push(b);
        (a, b)
    }

    pub fn set_rotation(&mut self, v: VertexId, rotation: Vec<HalfEdgeId>) {
        self.vertices[v.index()].rotation = rotation;
    }

    /// Marks `h` as lying on a face that exists only because of truncation.
    pub fn mark_boundary(&mut self, h: HalfEdgeId) {
        self.boundary.push(h);
    }

    pub fn build(self) -> Result<EmbeddedGraph, GraphError> {
        EmbeddedGraph::from_parts(self.vertices, self.half_edges, &self.boundary)
    }
}
