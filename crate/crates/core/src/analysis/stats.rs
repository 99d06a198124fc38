use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{AnalysisError, SpeiserError};
use crate::planar::{bfs_distances, trusted_radius, EmbeddedGraph, FaceSet, VertexId, UNREACHED};
use crate::speiser::{excess_table, ratio_to_f64};

/// Sign counts and exact excess totals of `B(w0, r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BallRow {
    pub r: u32,
    pub n_vertices: u64,
    pub n_plus: u64,
    pub n_minus: u64,
    pub n_zero: u64,
    /// Vertices whose excess is undefined (only on clipped rows).
    pub n_untrusted: u64,
    #[serde(serialize_with = "crate::speiser::ser_ratio_opt")]
    pub total_excess: Option<Rational64>,
    #[serde(serialize_with = "crate::speiser::ser_ratio_opt")]
    pub mean_excess: Option<Rational64>,
    pub clipped: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BallStats {
    pub basepoint: VertexId,
    pub trusted_radius: u32,
    pub rows: Vec<BallRow>,
}

/// Ball statistics about `w0` for `r = 0..=r_max`; rows beyond the trusted
/// radius are flagged as clipped and carry no totals.
pub fn ball_stats(g: &EmbeddedGraph, faces: &FaceSet, w0: VertexId, r_max: u32) -> Result<BallStats, AnalysisError> {
    let dist = bfs_distances(g, w0);
    let trusted = trusted_radius(g, faces, &dist).ok_or(SpeiserError::UntrustedBasepoint(w0))?;
    let table = excess_table(g, faces);
    match table[w0.index()] {
        Some(e) if e.is_negative() => {}
        _ => return Err(AnalysisError::BasepointNotNegative(w0)),
    }
    let len = r_max as usize + 1;
    let mut shells = vec![[0u64; 4]; len];
    let mut shell_total = vec![Rational64::zero(); len];
    for (i, &d) in dist.iter().enumerate() {
        if d == UNREACHED || d > r_max {
            continue;
        }
        let cell = &mut shells[d as usize];
        match table[i] {
            Some(e) => {
                let slot = if e.is_positive() {
                    0
                } else if e.is_negative() {
                    1
                } else {
                    2
                };
                cell[slot] += 1;
                shell_total[d as usize] += e.value();
            }
            None => cell[3] += 1,
        }
    }
    let mut rows = Vec::with_capacity(len);
    let mut acc = [0u64; 4];
    let mut total = Rational64::zero();
    for r in 0..len {
        for k in 0..4 {
            acc[k] += shells[r][k];
        }
        total += shell_total[r];
        let n: u64 = acc.iter().sum();
        let clipped = r as u32 > trusted;
        rows.push(BallRow {
            r: r as u32,
            n_vertices: n,
            n_plus: acc[0],
            n_minus: acc[1],
            n_zero: acc[2],
            n_untrusted: acc[3],
            total_excess: (!clipped).then_some(total),
            mean_excess: (!clipped).then(|| total / Rational64::from_integer(n as i64)),
            clipped,
        });
    }
    Ok(BallStats {
        basepoint: w0,
        trusted_radius: trusted,
        rows,
    })
}

impl BallStats {
    pub fn trusted(&self) -> impl Iterator<Item = &BallRow> {
        self.rows.iter().filter(|r| !r.clipped)
    }

    pub fn row(&self, r: u32) -> Option<&BallRow> {
        self.rows.get(r as usize)
    }

    /// Radii `r` with `r + s` trusted where `n⁺_{r+s} > n⁻_r`.
    pub fn sigma_counting_violations(&self, s: u32) -> Vec<u32> {
        self.trusted()
            .filter_map(|row| {
                let far = self.row(row.r + s).filter(|f| !f.clipped)?;
                (far.n_plus > row.n_minus).then_some(row.r)
            })
            .collect()
    }

    /// Witnessed `min_r (-total(r) / a^r)` over trusted `r ≥ 1`.
    pub fn excess_margin(&self, a: f64) -> Option<f64> {
        self.trusted()
            .filter(|row| row.r >= 1)
            .map(|row| -ratio_to_f64(row.total_excess.expect("trusted")) / a.powi(row.r as i32))
            .min_by(f64::total_cmp)
    }

    /// Trusted radii where `total(r) > -epsilon · a^r`.
    pub fn excess_bound_violations(&self, a: f64, epsilon: f64) -> Vec<u32> {
        self.trusted()
            .filter(|row| row.r >= 1)
            .filter(|row| {
                let t = row.total_excess.expect("trusted");
                !(t.is_negative() && -ratio_to_f64(t) >= epsilon * a.powi(row.r as i32))
            })
            .map(|row| row.r)
            .collect()
    }

    pub fn mean_always_negative(&self) -> bool {
        self.trusted()
            .all(|row| row.mean_excess.is_some_and(|m| m.is_negative()))
    }

    /// Largest `n_zero / n_minus` over trusted radii.
    pub fn zero_ratio_max(&self) -> f64 {
        self.trusted()
            .filter(|row| row.n_minus > 0)
            .map(|row| row.n_zero as f64 / row.n_minus as f64)
            .fold(0.0, f64::max)
    }

    /// Spread `max - min` of the mean over the last `window` trusted radii.
    pub fn mean_tail_spread(&self, window: usize) -> Option<f64> {
        let means: Vec<f64> = self.trusted().filter_map(|r| r.mean_excess).map(ratio_to_f64).collect();
        if means.is_empty() || window == 0 {
            return None;
        }
        let tail = &means[means.len().saturating_sub(window)..];
        let hi = tail.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let lo = tail.iter().copied().fold(f64::INFINITY, f64::min);
        Some(hi - lo)
    }

    /// `(r, n⁻_r)` over trusted radii.
    pub fn negative_counts(&self) -> Vec<(u32, u64)> {
        self.trusted().map(|row| (row.r, row.n_minus)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::{fixtures, trace_faces};

    #[test]
    fn flat_basepoint_rejected() {
        let g = fixtures::grid(9, 9);
        let faces = trace_faces(&g);
        let c = fixtures::grid_vertex(9, 4, 4);
        assert!(matches!(
            ball_stats(&g, &faces, c, 3),
            Err(AnalysisError::BasepointNotNegative(_))
        ));
    }
}
