use serde::Serialize;

use super::Gamma;
use crate::planar::VertexId;
use crate::speiser::{check_face_sizes, label_faces, validate_speiser, LabelConflict, Violation};
use crate::tree::TreeVertex;

/// Face sizes allowed in the assembled graph.
pub const FACE_SIZES: [usize; 3] = [2, 4, 6];

#[derive(Debug, Clone, Serialize)]
pub struct ContractReport {
    pub violations: Vec<Violation>,
    pub labeling_conflict: Option<LabelConflict>,
    pub unlabeled_faces: usize,
    /// Leaves whose piece does not hold exactly two 2-gons.
    pub bad_leaves: Vec<TreeVertex>,
}

impl ContractReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
            && self.labeling_conflict.is_none()
            && self.unlabeled_faces == 0
            && self.bad_leaves.is_empty()
    }
}

/// 4-regular, bipartite, connected, faces in {2, 4, 6}, labelable with q = 4.
pub fn contract_report(gamma: &Gamma) -> ContractReport {
    let mut violations = validate_speiser(&gamma.graph, 4).violations;
    violations.extend(check_face_sizes(&gamma.faces, &FACE_SIZES));
    let labeling = label_faces(&gamma.graph, &gamma.faces, 4);
    let mut digons = vec![0usize; gamma.tree.len()];
    for f in &gamma.faces.records {
        if f.len() == 2 {
            let v = gamma.graph.origin(f.boundary[0]);
            digons[gamma.owner[v.index()]] += 1;
        }
    }
    let bad_leaves = (0..gamma.tree.len())
        .filter(|&v| {
            let want = if gamma.tree.node(v).is_leaf() { 2 } else { 0 };
            digons[v] != want
        })
        .collect();
    ContractReport {
        violations,
        labeling_conflict: labeling.conflict,
        unlabeled_faces: labeling.unlabeled.len(),
        bad_leaves,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SignReport {
    /// Trusted positive vertices not on any 2-gon.
    pub positive_off_digon: Vec<VertexId>,
    /// Pants pieces (closure fully trusted) without a negative vertex.
    pub pants_without_negative: Vec<TreeVertex>,
    pub pants_checked: usize,
    pub positives: usize,
    pub negatives: usize,
    pub zeros: usize,
}

impl SignReport {
    pub fn passed(&self) -> bool {
        self.positive_off_digon.is_empty() && self.pants_without_negative.is_empty()
    }
}

pub fn sign_report(gamma: &Gamma) -> SignReport {
    let g = &gamma.graph;
    let mut positive_off_digon = Vec::new();
    let (mut positives, mut negatives, mut zeros) = (0, 0, 0);
    for v in g.vertex_ids() {
        let Some(e) = gamma.excess_of(v) else { continue };
        if e.is_positive() {
            positives += 1;
            if !gamma.faces.corners(g, v).any(|f| gamma.faces.get(f).len() == 2) {
                positive_off_digon.push(v);
            }
        } else if e.is_negative() {
            negatives += 1;
        } else {
            zeros += 1;
        }
    }
    let mut pants_without_negative = Vec::new();
    let mut pants_checked = 0;
    for t in 0..gamma.tree.len() {
        if gamma.tree.node(t).is_leaf() {
            continue;
        }
        let closure = gamma.piece_closure(t);
        if closure.iter().any(|v| gamma.excess_of(*v).is_none()) {
            continue;
        }
        pants_checked += 1;
        if !closure
            .iter()
            .any(|v| gamma.excess_of(*v).is_some_and(|e| e.is_negative()))
        {
            pants_without_negative.push(t);
        }
    }
    SignReport {
        positive_off_digon,
        pants_without_negative,
        pants_checked,
        positives,
        negatives,
        zeros,
    }
}
