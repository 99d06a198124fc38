use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::SpeiserError;
use crate::planar::{EmbeddedGraph, FaceSet, HalfDegree, VertexId};

/// Exact excess `E(v)`; `2π·E(v)` is the curvature carried by `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Excess(pub Rational64);

impl Excess {
    pub fn value(self) -> Rational64 {
        self.0
    }

    pub fn is_positive(self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(self) -> bool {
        self.0.is_negative()
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for Excess {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Excess {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

/// The deficit `1 - 1/k` of a face with half-degree `k` (`1` for `k = ∞`).
pub fn deficit(k: HalfDegree) -> Rational64 {
    match k {
        HalfDegree::Finite(k) => Rational64::one() - Rational64::new(1, k as i64),
        HalfDegree::Infinite => Rational64::one(),
    }
}

/// `2 - Σ (1 - 1/k_f)` over the given corner faces.
pub fn excess_from_half_degrees<I>(corners: I) -> Excess
where
    I: IntoIterator<Item = HalfDegree>,
{
    let two = Rational64::from_integer(2);
    Excess(corners.into_iter().fold(two, |acc, k| acc - deficit(k)))
}

/// Excess of `v`, counting each corner of `v` separately.
pub fn excess(g: &EmbeddedGraph, faces: &FaceSet, v: VertexId) -> Result<Excess, SpeiserError> {
    let mut ks = Vec::with_capacity(g.degree(v));
    for f in faces.corners(g, v) {
        let rec = faces.get(f);
        if rec.touches_truncation_boundary {
            return Err(SpeiserError::UntrustedVertex { vertex: v, face: f });
        }
        ks.push(rec.half_degree);
    }
    Ok(excess_from_half_degrees(ks))
}

/// Excess of every vertex; `None` where some incident face is contaminated.
pub fn excess_table(g: &EmbeddedGraph, faces: &FaceSet) -> Vec<Option<Excess>> {
    g.vertex_ids().map(|v| excess(g, faces, v).ok()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::{fixtures, trace_faces};

    fn e(ks: &[u32]) -> Rational64 {
        excess_from_half_degrees(ks.iter().map(|&k| HalfDegree::Finite(k))).0
    }

    /// Hand-evaluated (face sizes → excess) pairs.
    const TABLE: &[(&[u32], (i64, i64))] = &[
        (&[4, 4, 4, 4], (0, 1)),
        (&[2, 4, 4, 4], (1, 2)),
        (&[6, 6, 4, 4], (-1, 3)),
        (&[6, 4, 4, 4], (-1, 6)),
        (&[2, 6, 6, 6], (0, 1)),
        (&[2, 6, 4, 4], (1, 3)),
        (&[2, 2, 4, 4], (1, 1)),
        (&[6, 6, 6, 6], (-2, 3)),
    ];

    #[test]
    fn excess_table_matches_hand_values() {
        for (sizes, (num, den)) in TABLE {
            let ks: Vec<u32> = sizes.iter().map(|s| s / 2).collect();
            assert_eq!(e(&ks), Rational64::new(*num, *den), "sizes {sizes:?}");
        }
    }

    #[test]
    fn logarithmic_face_contributes_one() {
        let v = excess_from_half_degrees([HalfDegree::Infinite, HalfDegree::Finite(2)]);
        assert_eq!(v.0, Rational64::new(1, 2));
    }

    #[test]
    fn grid_interior_is_flat() {
        let g = fixtures::grid(5, 5);
        let faces = trace_faces(&g);
        let c = fixtures::grid_vertex(5, 2, 2);
        assert!(excess(&g, &faces, c).unwrap().is_zero());
        let corner = fixtures::grid_vertex(5, 0, 0);
        assert!(matches!(
            excess(&g, &faces, corner),
            Err(SpeiserError::UntrustedVertex { .. })
        ));
    }

    #[test]
    fn digon_vertices() {
        // two faces of half-degree 1 at each vertex: 2 - 0 - 0
        let g = fixtures::digon();
        let faces = trace_faces(&g);
        assert_eq!(excess(&g, &faces, VertexId(0)).unwrap().0, Rational64::from_integer(2));
    }
}
