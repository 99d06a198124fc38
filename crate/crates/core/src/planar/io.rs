use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{trace_faces, EmbeddedGraph, FaceRecord, HalfEdge, HalfEdgeId, Parity, Vertex};
use crate::error::GraphError;

pub const DUMP_FORMAT: &str = "speiser-graph/1";

/// JSON-serializable snapshot of a graph and its traced faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDump {
    pub format: String,
    pub vertices: Vec<Vertex>,
    pub half_edges: Vec<HalfEdge>,
    pub boundary_marks: Vec<HalfEdgeId>,
    pub faces: Vec<FaceRecord>,
}

impl GraphDump {
    pub fn from_graph(g: &EmbeddedGraph) -> Self {
        Self::with_faces(g, trace_faces(g).records)
    }

    /// Dump with caller-supplied face records (e.g. after labeling).
    pub fn with_faces(g: &EmbeddedGraph, faces: Vec<FaceRecord>) -> Self {
        Self {
            format: DUMP_FORMAT.to_string(),
            vertices: g.vertices().to_vec(),
            half_edges: g.half_edges().to_vec(),
            boundary_marks: g.boundary_marks(),
            faces,
        }
    }

    /// Rebuilds the graph. Faces in the dump are checked against a fresh
    /// trace (labels are not part of the check).
    pub fn into_graph(self) -> Result<EmbeddedGraph, GraphError> {
        if self.format != DUMP_FORMAT {
            return Err(GraphError::Dump(format!("unknown format {}", self.format)));
        }
        let g = EmbeddedGraph::from_parts(self.vertices, self.half_edges, &self.boundary_marks)?;
        let traced = trace_faces(&g);
        let same = traced.records.len() == self.faces.len()
            && traced
                .records
                .iter()
                .zip(&self.faces)
                .all(|(a, b)| a.boundary == b.boundary && a.half_degree == b.half_degree);
        if !same {
            return Err(GraphError::Dump("face records disagree with rotation".into()));
        }
        Ok(g)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("dump serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, GraphError> {
        serde_json::from_str(s).map_err(|e| GraphError::Dump(e.to_string()))
    }
}

/// Graphviz rendering: one node per vertex, one edge per twin pair.
pub fn to_dot(g: &EmbeddedGraph) -> String {
    let mut out = String::from("graph speiser {\n");
    for v in g.vertex_ids() {
        let p = match g.parity(v) {
            Parity::Cross => "cross",
            Parity::Circle => "circle",
        };
        let shape = match g.parity(v) {
            Parity::Cross => "box",
            Parity::Circle => "circle",
        };
        let _ = writeln!(out, "  {} [parity={p}, shape={shape}];", v.0);
    }
    for h in g.half_edge_ids() {
        let t = g.twin(h);
        if h < t {
            let _ = writeln!(out, "  {} -- {};", g.origin(h).0, g.origin(t).0);
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::fixtures;

    #[test]
    fn json_round_trip() {
        let g = fixtures::grid(4, 3);
        let dump = GraphDump::from_graph(&g);
        let text = dump.to_json();
        let back = GraphDump::from_json(&text).unwrap();
        assert_eq!(back, dump);
        let g2 = back.into_graph().unwrap();
        assert_eq!(g2, g);
        assert_eq!(GraphDump::from_graph(&g2).to_json(), text);
    }

    #[test]
    fn rejects_tampered_rotation() {
        let g = fixtures::cycle(4);
        let mut dump = GraphDump::from_graph(&g);
        dump.vertices[0].rotation.pop();
        let err = dump.into_graph().unwrap_err();
        assert!(matches!(err, GraphError::MissingFromRotation { .. }));
    }

    #[test]
    fn dot_has_one_line_per_edge() {
        let g = fixtures::digon();
        let dot = to_dot(&g);
        assert_eq!(dot.matches(" -- ").count(), 2);
        assert!(dot.contains("parity=cross"));
    }
}
