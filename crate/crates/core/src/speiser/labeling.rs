use std::collections::VecDeque;

use serde::Serialize;

use crate::planar::{EmbeddedGraph, FaceId, FaceSet, Parity, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PropagationOrder {
    #[default]
    BreadthFirst,
    DepthFirst,
}

/// Where propagation found two different labels for one face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelConflict {
    pub vertex: VertexId,
    pub face: FaceId,
    pub existing: u8,
    pub required: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Labeling {
    pub q: usize,
    /// Labels in `1..=q`, indexed by face id; `None` for unlabeled faces.
    pub labels: Vec<Option<u8>>,
    pub conflict: Option<LabelConflict>,
    /// Uncontaminated faces that propagation never reached.
    pub unlabeled: Vec<FaceId>,
}

impl Labeling {
    pub fn is_complete(&self) -> bool {
        self.conflict.is_none() && self.unlabeled.is_empty()
    }
}

/// Options for [`label_faces_with`].
#[derive(Debug, Clone, Default)]
pub struct LabelOptions {
    pub order: PropagationOrder,
    /// Seed face and its label; defaults to the first usable face with label 1.
    pub seed: Option<(FaceId, u8)>,
    /// Labels imposed before propagation.
    pub forced: Vec<(FaceId, u8)>,
}

pub fn label_faces(g: &EmbeddedGraph, faces: &FaceSet, q: usize) -> Labeling {
    label_faces_with(g, faces, q, &LabelOptions::default())
}

/// Propagates face labels so that, counter-clockwise around every usable
/// vertex, labels increase by one at a cross and decrease by one at a
/// circle (mod `q`). A vertex is usable when it has degree `q` and all its
/// faces are uncontaminated.
pub fn label_faces_with(g: &EmbeddedGraph, faces: &FaceSet, q: usize, opts: &LabelOptions) -> Labeling {
    assert!((2..=u8::MAX as usize).contains(&q));
    let usable = |v: VertexId| g.degree(v) == q && faces.vertex_is_interior(g, v);
    // internal labels are 0-based
    let mut labels: Vec<Option<u8>> = vec![None; faces.len()];
    let mut done = vec![false; g.vertex_count()];
    let mut work: VecDeque<FaceId> = VecDeque::new();
    for &(f, l) in &opts.forced {
        labels[f.index()] = Some((l as usize - 1) as u8 % q as u8);
        work.push_back(f);
    }
    let seed = opts.seed.or_else(|| {
        g.vertex_ids()
            .find(|&v| usable(v))
            .map(|v| (faces.face_of(g.rotation(v)[0]), 1))
    });
    if let Some((f, l)) = seed {
        let l0 = (l as usize - 1) as u8 % q as u8;
        match labels[f.index()] {
            Some(existing) if existing != l0 => {
                let vertex = g.origin(faces.get(f).boundary[0]);
                return finish(faces, q, labels, Some(conflict(vertex, f, existing, l0)));
            }
            _ => {
                labels[f.index()] = Some(l0);
                work.push_front(f);
            }
        }
    }
    while let Some(f) = match opts.order {
        PropagationOrder::BreadthFirst => work.pop_front(),
        PropagationOrder::DepthFirst => work.pop_back(),
    } {
        for &h in &faces.get(f).boundary {
            let v = g.origin(h);
            if done[v.index()] || !usable(v) {
                continue;
            }
            done[v.index()] = true;
            let rot = g.rotation(v);
            let anchor = g.rotation_position(h);
            let base = labels[f.index()].expect("queued faces are labeled") as usize;
            for (i, &e) in rot.iter().enumerate() {
                let step = (i + q - anchor) % q;
                let want = match g.parity(v) {
                    Parity::Cross => (base + step) % q,
                    Parity::Circle => (base + q * q - step) % q,
                } as u8;
                let fe = faces.face_of(e);
                match labels[fe.index()] {
                    Some(existing) if existing != want => {
                        return finish(faces, q, labels, Some(conflict(v, fe, existing, want)));
                    }
                    Some(_) => {}
                    None => {
                        labels[fe.index()] = Some(want);
                        work.push_back(fe);
                    }
                }
            }
        }
    }
    finish(faces, q, labels, None)
}

fn conflict(vertex: VertexId, face: FaceId, existing: u8, required: u8) -> LabelConflict {
    LabelConflict {
        vertex,
        face,
        existing: existing + 1,
        required: required + 1,
    }
}

fn finish(faces: &FaceSet, q: usize, labels: Vec<Option<u8>>, conflict: Option<LabelConflict>) -> Labeling {
    let unlabeled = faces
        .ids()
        .filter(|f| faces.get(*f).is_interior() && labels[f.index()].is_none())
        .collect();
    Labeling {
        q,
        labels: labels.into_iter().map(|l| l.map(|x| x + 1)).collect(),
        conflict,
        unlabeled,
    }
}
