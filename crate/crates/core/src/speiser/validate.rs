use serde::Serialize;

use crate::planar::{EmbeddedGraph, FaceSet, HalfEdgeId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Disconnected {
        components: usize,
    },
    Degree {
        vertex: VertexId,
        degree: usize,
    },
    Parity {
        half_edge: HalfEdgeId,
        from: VertexId,
        to: VertexId,
    },
    FaceSize {
        face: u32,
        size: usize,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub degree: usize,
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Truncated Speiser conditions: connected, every non-boundary vertex of
/// degree `q`, and every edge joining a cross to a circle.
pub fn validate_speiser(g: &EmbeddedGraph, q: usize) -> ValidityReport {
    let mut violations = Vec::new();
    let components = g.component_count();
    if components != 1 {
        violations.push(Violation::Disconnected { components });
    }
    for v in g.vertex_ids() {
        if !g.is_boundary_vertex(v) && g.degree(v) != q {
            violations.push(Violation::Degree {
                vertex: v,
                degree: g.degree(v),
            });
        }
    }
    for h in g.half_edge_ids() {
        let t = g.twin(h);
        if h > t {
            continue;
        }
        let (a, b) = (g.origin(h), g.origin(t));
        if g.parity(a) == g.parity(b) {
            violations.push(Violation::Parity {
                half_edge: h,
                from: a,
                to: b,
            });
        }
    }
    ValidityReport { degree: q, violations }
}

/// Flags every uncontaminated face whose edge count is not in `allowed`.
pub fn check_face_sizes(faces: &FaceSet, allowed: &[usize]) -> Vec<Violation> {
    faces
        .ids()
        .filter_map(|f| {
            let rec = faces.get(f);
            (rec.is_interior() && !allowed.contains(&rec.len())).then_some(Violation::FaceSize {
                face: f.0,
                size: rec.len(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::fixtures;

    #[test]
    fn square_is_valid_for_q2() {
        assert!(validate_speiser(&fixtures::cycle(4), 2).is_valid());
    }

    #[test]
    fn diagonal_breaks_bipartiteness() {
        let g = fixtures::grid_with_diagonal(6, 6, 2, 2);
        let report = validate_speiser(&g, 4);
        let parity: Vec<_> = report
            .violations
            .iter()
            .filter(|v| matches!(v, Violation::Parity { .. }))
            .collect();
        assert_eq!(parity.len(), 1);
        match parity[0] {
            Violation::Parity { from, to, .. } => {
                assert_eq!(*from, fixtures::grid_vertex(6, 2, 2));
                assert_eq!(*to, fixtures::grid_vertex(6, 3, 3));
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn plain_grid_is_valid() {
        assert!(validate_speiser(&fixtures::grid(6, 6), 4).is_valid());
    }
}
