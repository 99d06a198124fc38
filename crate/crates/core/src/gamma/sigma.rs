use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use super::Gamma;
use crate::error::AnalysisError;
use crate::planar::{VertexId, UNREACHED};

/// A nearest trusted negative-excess vertex to `w` (smallest index on ties)
/// together with its distance.
pub fn sigma(gamma: &Gamma, w: VertexId) -> Result<(VertexId, u32), AnalysisError> {
    match gamma.excess_of(w) {
        Some(e) if e.is_positive() => {}
        _ => return Err(AnalysisError::NotPositive(w)),
    }
    let g = &gamma.graph;
    let mut dist = vec![UNREACHED; g.vertex_count()];
    let mut queue = VecDeque::from([w]);
    dist[w.index()] = 0;
    let mut found: Option<(VertexId, u32)> = None;
    while let Some(v) = queue.pop_front() {
        let d = dist[v.index()];
        if let Some((_, best)) = found {
            if d > best {
                break;
            }
        }
        if gamma.excess_of(v).is_some_and(|e| e.is_negative()) {
            found = Some(match found {
                Some((u, du)) if u < v => (u, du),
                _ => (v, d),
            });
            continue;
        }
        for x in g.neighbors(v) {
            if dist[x.index()] == UNREACHED {
                dist[x.index()] = d + 1;
                queue.push_back(x);
            }
        }
    }
    found.ok_or(AnalysisError::NoNegativeVertex(w))
}

#[derive(Debug, Clone, Serialize)]
pub struct SigmaPair {
    pub w: VertexId,
    pub sigma: VertexId,
    pub distance: u32,
    /// `s` of the leaf piece owning `w`.
    pub s: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SigmaReport {
    pub pairs: Vec<SigmaPair>,
    pub injective: bool,
    pub distances_equal_s: bool,
}

/// Evaluates σ on every trusted positive-excess vertex.
pub fn sigma_report(gamma: &Gamma) -> Result<SigmaReport, AnalysisError> {
    let mut pairs = Vec::new();
    for v in gamma.graph.vertex_ids() {
        if gamma.excess_of(v).is_some_and(|e| e.is_positive()) {
            let (s_v, d) = sigma(gamma, v)?;
            pairs.push(SigmaPair {
                w: v,
                sigma: s_v,
                distance: d,
                s: gamma.s_of(gamma.owner[v.index()]),
            });
        }
    }
    let image: HashSet<VertexId> = pairs.iter().map(|p| p.sigma).collect();
    Ok(SigmaReport {
        injective: image.len() == pairs.len(),
        distances_equal_s: pairs.iter().all(|p| p.distance as usize == p.s),
        pairs,
    })
}
