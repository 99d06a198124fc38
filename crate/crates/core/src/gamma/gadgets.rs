use serde::Serialize;

use super::layout::{inner_offsets, leaf_interior, pants_rungs, Layout, Side};
use crate::error::BuildError;
use crate::planar::{trace_faces, EmbeddedGraph, FaceSet, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GadgetKind {
    Leaf { s: usize },
    Pants,
}

/// A standalone piece `S(v)` with its boundary circles left open: every
/// boundary-circle vertex has degree 3 and each hole is a marked face.
#[derive(Debug, Clone)]
pub struct GadgetPiece {
    pub kind: GadgetKind,
    pub graph: EmbeddedGraph,
    pub faces: FaceSet,
    pub outer: Vec<VertexId>,
    pub inner: Vec<Vec<VertexId>>,
    /// Concentric circles of a leaf, outermost first (empty for pants).
    pub concentric: Vec<Vec<VertexId>>,
}

pub(crate) fn check_boundary_length(l: usize) -> Result<(), BuildError> {
    if l < 4 || !l.is_multiple_of(2) {
        return Err(BuildError::BadBoundaryLength(l));
    }
    Ok(())
}

/// Disk with `s` concentric circles inside its boundary circle of length `l`.
pub fn leaf_gadget(s: usize, l: usize) -> Result<GadgetPiece, BuildError> {
    check_boundary_length(l)?;
    if s < 1 {
        return Err(BuildError::BadCircleCount(s));
    }
    let mut layout = Layout::new();
    let circles: Vec<Vec<VertexId>> = (0..=s).map(|i| layout.circle(l, i)).collect();
    leaf_interior(&mut layout, &circles).map_err(|_| BuildError::ParityMismatch { child: 0, parent: 0 })?;
    layout.mark_hole(&circles[0], Side::Outside);
    let graph = layout.finish()?;
    let faces = trace_faces(&graph);
    Ok(GadgetPiece {
        kind: GadgetKind::Leaf { s },
        graph,
        faces,
        outer: circles[0].clone(),
        inner: Vec::new(),
        concentric: circles[1..].to_vec(),
    })
}

/// Sphere with three holes: outer circle and two inner circles of length `l`,
/// joined by three ladders of `l/2` rungs.
pub fn pants_gadget(l: usize) -> Result<GadgetPiece, BuildError> {
    check_boundary_length(l)?;
    let mut layout = Layout::new();
    let o = layout.circle(l, 0);
    let [a, b] = inner_offsets(0, l);
    let i1 = layout.circle(l, a);
    let i2 = layout.circle(l, b);
    pants_rungs(&mut layout, &o, &i1, &i2).map_err(|_| BuildError::ParityMismatch { child: 0, parent: 0 })?;
    layout.mark_hole(&o, Side::Outside);
    layout.mark_hole(&i1, Side::Inside);
    layout.mark_hole(&i2, Side::Inside);
    let graph = layout.finish()?;
    let faces = trace_faces(&graph);
    Ok(GadgetPiece {
        kind: GadgetKind::Pants,
        graph,
        faces,
        outer: o,
        inner: vec![i1, i2],
        concentric: Vec::new(),
    })
}

impl GadgetPiece {
    pub fn boundary_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.outer.iter().chain(self.inner.iter().flatten()).copied()
    }

    /// Face-size census over non-hole faces: `(size, count)` sorted by size.
    pub fn face_census(&self) -> Vec<(usize, usize)> {
        let mut census = std::collections::BTreeMap::new();
        for f in &self.faces.records {
            if f.is_interior() {
                *census.entry(f.len()).or_insert(0) += 1;
            }
        }
        census.into_iter().collect()
    }

    /// `V - E + F` with hole faces excluded: 1 for a disk, -1 for pants.
    pub fn euler_characteristic(&self) -> i64 {
        let f = self.faces.records.iter().filter(|f| f.is_interior()).count();
        self.graph.vertex_count() as i64 - self.graph.edge_count() as i64 + f as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::speiser::validate_speiser;

    #[test]
    fn leaf_counts() {
        for l in [4, 6, 8, 12] {
            let g = leaf_gadget(1, l).unwrap();
            assert_eq!(g.graph.vertex_count(), 2 * l);
            let census = g.face_census();
            assert_eq!(census[0], (2, 2), "L = {l}");
            assert!(census.iter().all(|&(size, _)| size == 2 || size == 4));
            assert_eq!(g.euler_characteristic(), 1);
        }
    }

    #[test]
    fn leaf_degrees() {
        let g = leaf_gadget(3, 8).unwrap();
        for v in g.graph.vertex_ids() {
            let want = if g.outer.contains(&v) { 3 } else { 4 };
            assert_eq!(g.graph.degree(v), want);
        }
        assert!(validate_speiser(&g.graph, 4).is_valid());
    }

    #[test]
    fn pants_census() {
        for l in [4, 8, 10] {
            let p = pants_gadget(l).unwrap();
            let census = p.face_census();
            assert_eq!(census, vec![(4, 3 * (l / 2 - 1)), (6, 2)]);
            assert_eq!(p.euler_characteristic(), -1);
            assert!(p.graph.vertex_ids().all(|v| p.graph.degree(v) == 3));
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(leaf_gadget(1, 7), Err(BuildError::BadBoundaryLength(7))));
        assert!(matches!(leaf_gadget(0, 8), Err(BuildError::BadCircleCount(0))));
        assert!(matches!(pants_gadget(2), Err(BuildError::BadBoundaryLength(2))));
    }
}
