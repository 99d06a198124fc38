use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::error::AnalysisError;
use crate::gamma::Gamma;
use crate::planar::{bfs_distances, VertexId};

/// Cutsets `Π_k` between consecutive ray pieces.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CutsetReport {
    pub sizes: Vec<usize>,
    pub constant_size: bool,
    /// `Σ_{j ≤ k} 1 / |Π_j|`.
    pub partial_sums: Vec<f64>,
    /// Whether deleting `Π_k` cuts `w0` off from the truncation top.
    pub separates: Vec<bool>,
    /// Largest distance from `w0` on the `w0` side of `Π_k`.
    pub inner_reach: Vec<u32>,
}

pub fn nash_williams(gamma: &Gamma) -> Result<CutsetReport, AnalysisError> {
    let g = &gamma.graph;
    let w0 = gamma.basepoint;
    let cutsets: Vec<HashSet<usize>> = gamma
        .ray_cutsets()
        .iter()
        .map(|c| c.iter().map(|h| h.index() / 2).collect())
        .collect();
    for a in 0..cutsets.len() {
        for b in a + 1..cutsets.len() {
            if !cutsets[a].is_disjoint(&cutsets[b]) {
                return Err(AnalysisError::CutsetsOverlap { a: a + 1, b: b + 1 });
            }
        }
    }
    let dist = bfs_distances(g, w0);
    let top: HashSet<VertexId> = gamma.outer[gamma.tree.top()].iter().copied().collect();
    let mut separates = Vec::with_capacity(cutsets.len());
    let mut inner_reach = Vec::with_capacity(cutsets.len());
    for cut in &cutsets {
        let mut seen = vec![false; g.vertex_count()];
        let mut queue = VecDeque::from([w0]);
        seen[w0.index()] = true;
        let mut reach = 0;
        let mut hit_top = false;
        while let Some(v) = queue.pop_front() {
            reach = reach.max(dist[v.index()]);
            hit_top |= top.contains(&v);
            for &h in g.rotation(v) {
                if cut.contains(&(h.index() / 2)) {
                    continue;
                }
                let u = g.target(h);
                if !seen[u.index()] {
                    seen[u.index()] = true;
                    queue.push_back(u);
                }
            }
        }
        separates.push(!hit_top);
        inner_reach.push(reach);
    }
    let sizes: Vec<usize> = cutsets.iter().map(HashSet::len).collect();
    let mut acc = 0.0;
    let partial_sums = sizes
        .iter()
        .map(|&n| {
            acc += 1.0 / n as f64;
            acc
        })
        .collect();
    Ok(CutsetReport {
        constant_size: sizes.windows(2).all(|w| w[0] == w[1]),
        sizes,
        partial_sums,
        separates,
        inner_reach,
    })
}

impl CutsetReport {
    /// Sum of `1 / |Π_k|` over the cutsets lying strictly inside `B(w0, r)`,
    /// a lower bound for the resistance from `w0` to the sphere of radius `r`.
    pub fn partial_sum_within(&self, r: u32) -> f64 {
        self.sizes
            .iter()
            .zip(&self.inner_reach)
            .filter(|(_, &reach)| reach < r)
            .fold(0.0, |acc, (&n, _)| acc + 1.0 / n as f64)
    }
}
