use rayon::prelude::*;
use serde::Serialize;

use crate::error::AnalysisError;
use crate::planar::{bfs_distances, EmbeddedGraph, VertexId, UNREACHED};

/// Relative residual the conjugate-gradient solve must reach.
pub const SOLVER_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResistanceSolve {
    pub r: u32,
    pub resistance: f64,
    pub iterations: usize,
    pub residual: f64,
    /// Unknowns in the reduced system.
    pub unknowns: usize,
}

/// Dirichlet problem on `B(w0, r)`: potential 1 at `w0`, 0 on the sphere
/// `d = r`, harmonic in between, unit conductances (parallel edges count
/// separately, loops are ignored).
pub struct DirichletSystem {
    /// Interior vertices `0 < d < r` in system order.
    pub unknowns: Vec<VertexId>,
    /// Diagonal of the reduced Laplacian.
    pub diagonal: Vec<f64>,
    /// Off-diagonal neighbors `(column, multiplicity)` per row.
    pub neighbors: Vec<Vec<(usize, f64)>>,
    /// Right-hand side: edges to `w0`.
    pub rhs: Vec<f64>,
    /// Number of non-loop edge ends at `w0`.
    pub source_degree: f64,
    /// Row index of each interior unknown adjacent to `w0`, with multiplicity.
    pub source_neighbors: Vec<(usize, f64)>,
}

impl DirichletSystem {
    pub fn new(g: &EmbeddedGraph, w0: VertexId, r: u32) -> Result<Self, AnalysisError> {
        let dist = bfs_distances(g, w0);
        Self::with_distances(g, w0, r, &dist)
    }

    pub fn with_distances(g: &EmbeddedGraph, w0: VertexId, r: u32, dist: &[u32]) -> Result<Self, AnalysisError> {
        let reaches = dist.iter().any(|&d| d != UNREACHED && d >= r);
        if r == 0 || !reaches {
            return Err(AnalysisError::BadRadius { radius: r });
        }
        let mut index = vec![usize::MAX; g.vertex_count()];
        let mut unknowns = Vec::new();
        for v in g.vertex_ids() {
            let d = dist[v.index()];
            if d != UNREACHED && d > 0 && d < r {
                index[v.index()] = unknowns.len();
                unknowns.push(v);
            }
        }
        let mut diagonal = vec![0.0; unknowns.len()];
        let mut neighbors = vec![Vec::new(); unknowns.len()];
        let mut rhs = vec![0.0; unknowns.len()];
        for (row, &v) in unknowns.iter().enumerate() {
            let mut cols: Vec<(usize, f64)> = Vec::new();
            for u in g.neighbors(v) {
                if u == v {
                    continue;
                }
                diagonal[row] += 1.0;
                if u == w0 {
                    rhs[row] += 1.0;
                } else if index[u.index()] != usize::MAX {
                    let c = index[u.index()];
                    match cols.iter_mut().find(|e| e.0 == c) {
                        Some(e) => e.1 += 1.0,
                        None => cols.push((c, 1.0)),
                    }
                }
            }
            neighbors[row] = cols;
        }
        let mut source_degree = 0.0;
        let mut source_neighbors: Vec<(usize, f64)> = Vec::new();
        for u in g.neighbors(w0) {
            if u == w0 {
                continue;
            }
            source_degree += 1.0;
            if index[u.index()] != usize::MAX {
                let c = index[u.index()];
                match source_neighbors.iter_mut().find(|e| e.0 == c) {
                    Some(e) => e.1 += 1.0,
                    None => source_neighbors.push((c, 1.0)),
                }
            }
        }
        Ok(Self {
            unknowns,
            diagonal,
            neighbors,
            rhs,
            source_degree,
            source_neighbors,
        })
    }

    pub fn apply(&self, x: &[f64], out: &mut [f64]) {
        out.par_iter_mut().enumerate().for_each(|(i, o)| {
            let mut acc = self.diagonal[i] * x[i];
            for &(c, m) in &self.neighbors[i] {
                acc -= m * x[c];
            }
            *o = acc;
        });
    }

    /// Effective resistance given the interior potentials.
    pub fn resistance_from(&self, potentials: &[f64]) -> f64 {
        let inflow: f64 = self.source_neighbors.iter().map(|&(c, m)| m * potentials[c]).sum();
        1.0 / (self.source_degree - inflow)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.par_iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Jacobi-preconditioned conjugate gradient on the reduced Laplacian.
pub fn solve_potentials(sys: &DirichletSystem) -> Result<(Vec<f64>, usize, f64), AnalysisError> {
    let n = sys.unknowns.len();
    let mut x = vec![0.0; n];
    if n == 0 {
        return Ok((x, 0, 0.0));
    }
    let b_norm = dot(&sys.rhs, &sys.rhs).sqrt();
    if b_norm == 0.0 {
        return Ok((x, 0, 0.0));
    }
    let mut r = sys.rhs.clone();
    let mut z: Vec<f64> = r.iter().zip(&sys.diagonal).map(|(a, d)| a / d).collect();
    let mut p = z.clone();
    let mut ap = vec![0.0; n];
    let mut rz = dot(&r, &z);
    let max_iter = 20 * n + 1000;
    let mut residual = 1.0;
    for it in 1..=max_iter {
        sys.apply(&p, &mut ap);
        let alpha = rz / dot(&p, &ap);
        x.par_iter_mut().zip(&p).for_each(|(xi, pi)| *xi += alpha * pi);
        r.par_iter_mut().zip(&ap).for_each(|(ri, api)| *ri -= alpha * api);
        residual = dot(&r, &r).sqrt() / b_norm;
        if residual <= SOLVER_TOLERANCE {
            return Ok((x, it, residual));
        }
        z.par_iter_mut()
            .zip(&r)
            .zip(&sys.diagonal)
            .for_each(|((zi, ri), d)| *zi = ri / d);
        let rz_new = dot(&r, &z);
        let beta = rz_new / rz;
        rz = rz_new;
        p.par_iter_mut().zip(&z).for_each(|(pi, zi)| *pi = zi + beta * *pi);
    }
    Err(AnalysisError::SolverDiverged {
        residual,
        iterations: max_iter,
    })
}

/// Effective resistance between `w0` and the sphere of radius `r`.
pub fn effective_resistance(g: &EmbeddedGraph, w0: VertexId, r: u32) -> Result<ResistanceSolve, AnalysisError> {
    let dist = bfs_distances(g, w0);
    resistance_with_distances(g, w0, r, &dist)
}

fn resistance_with_distances(
    g: &EmbeddedGraph,
    w0: VertexId,
    r: u32,
    dist: &[u32],
) -> Result<ResistanceSolve, AnalysisError> {
    let sys = DirichletSystem::with_distances(g, w0, r, dist)?;
    let (x, iterations, residual) = solve_potentials(&sys)?;
    Ok(ResistanceSolve {
        r,
        resistance: sys.resistance_from(&x),
        iterations,
        residual,
        unknowns: sys.unknowns.len(),
    })
}

/// `R_eff(r)` for `r = 1..=r_max`.
pub fn resistance_series(g: &EmbeddedGraph, w0: VertexId, r_max: u32) -> Result<Vec<ResistanceSolve>, AnalysisError> {
    let dist = bfs_distances(g, w0);
    (1..=r_max)
        .map(|r| resistance_with_distances(g, w0, r, &dist))
        .collect()
}

/// Growth diagnostic of a resistance series: strict increase, and relative
/// increments `δ_r = R(r)/R(r-1) - 1` that do not decay faster than `1/r²`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResistanceTrend {
    pub strictly_increasing: bool,
    /// `r² δ_r` for each `r ≥ 2` in the series.
    pub scaled_increments: Vec<(u32, f64)>,
    pub lower_half_min: f64,
    pub upper_half_min: f64,
    /// `upper_half_min ≥ TREND_FACTOR · lower_half_min`.
    pub sustained: bool,
}

pub const TREND_FACTOR: f64 = 0.5;

pub fn resistance_trend(series: &[ResistanceSolve]) -> Option<ResistanceTrend> {
    if series.len() < 3 {
        return None;
    }
    let strictly_increasing = series.windows(2).all(|w| w[1].resistance > w[0].resistance);
    let scaled: Vec<(u32, f64)> = series
        .windows(2)
        .map(|w| {
            let r = w[1].r as f64;
            (w[1].r, r * r * (w[1].resistance / w[0].resistance - 1.0))
        })
        .collect();
    let mid = scaled.len() / 2;
    let min_of = |xs: &[(u32, f64)]| xs.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let lower_half_min = min_of(&scaled[..mid.max(1)]);
    let upper_half_min = min_of(&scaled[mid..]);
    Some(ResistanceTrend {
        strictly_increasing,
        sustained: upper_half_min >= TREND_FACTOR * lower_half_min,
        scaled_increments: scaled,
        lower_half_min,
        upper_half_min,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::fixtures;

    #[test]
    fn path_is_series() {
        let g = fixtures::path(12);
        for r in 1..=12 {
            let s = effective_resistance(&g, VertexId(0), r).unwrap();
            assert!((s.resistance - r as f64).abs() < 1e-9, "r = {r}: {}", s.resistance);
        }
    }

    #[test]
    fn digon_is_parallel() {
        let g = fixtures::digon();
        let s = effective_resistance(&g, VertexId(0), 1).unwrap();
        assert!((s.resistance - 0.5).abs() < 1e-15);
    }

    #[test]
    fn radius_errors() {
        let g = fixtures::path(3);
        assert_eq!(
            effective_resistance(&g, VertexId(0), 0).unwrap_err(),
            AnalysisError::BadRadius { radius: 0 }
        );
        assert!(effective_resistance(&g, VertexId(0), 4).is_err());
    }

    #[test]
    fn tree_saturates() {
        let g = fixtures::regular_tree_ball(10);
        let series = resistance_series(&g, VertexId(0), 10).unwrap();
        for s in &series {
            let closed = 2.0 / 3.0 * (1.0 - 0.5f64.powi(s.r as i32));
            assert!((s.resistance - closed).abs() < 1e-10);
        }
        let trend = resistance_trend(&series).unwrap();
        assert!(trend.strictly_increasing);
        assert!(!trend.sustained);
    }
}
