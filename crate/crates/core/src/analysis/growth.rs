use serde::Serialize;

use super::stats::BallStats;
use crate::error::AnalysisError;

/// Least-squares fit of `log n_r = log b + r log a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GrowthFit {
    /// Growth base.
    pub a: f64,
    /// Largest `c ≤ 1` with `c·a^r ≤ n_r ≤ a^r / c` on the fitted radii.
    pub c: f64,
    /// Coefficient of determination over the log-counts.
    pub quality: f64,
    pub intercept: f64,
    pub r_min: u32,
    pub r_max: u32,
}

pub const MIN_FIT_RADII: usize = 6;

/// First radius of the fitted tail; the first shells around the basepoint
/// grow quadratically before the branching of the tree takes over.
pub const TAIL_START: u32 = 3;

/// Fits the counts `(r, n_r)`; needs `MIN_FIT_RADII` points, positive
/// counts, and at least two distinct values.
pub fn fit_counts(points: &[(u32, u64)]) -> Result<GrowthFit, AnalysisError> {
    if points.len() < MIN_FIT_RADII {
        return Err(AnalysisError::TooFewRadii {
            needed: MIN_FIT_RADII,
            got: points.len(),
        });
    }
    if let Some(&(radius, count)) = points.iter().find(|p| p.1 == 0) {
        return Err(AnalysisError::NonPositiveCount { radius, count });
    }
    if points.iter().all(|p| p.1 == points[0].1) {
        return Err(AnalysisError::DegenerateSeries);
    }
    let m = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0 as f64).collect();
    let ys: Vec<f64> = points.iter().map(|p| (p.1 as f64).ln()).collect();
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - intercept - slope * x).powi(2))
        .sum();
    let quality = if syy > 0.0 { 1.0 - ss_res / syy } else { 1.0 };
    let a = slope.exp();
    let c = points
        .iter()
        .map(|&(r, n)| {
            let ratio = n as f64 / a.powi(r as i32);
            ratio.min(1.0 / ratio)
        })
        .fold(1.0, f64::min);
    Ok(GrowthFit {
        a,
        c,
        quality,
        intercept,
        r_min: points[0].0,
        r_max: points[points.len() - 1].0,
    })
}

/// Fit of `n⁻_r` over the trusted radii `r ≥ r_min` (usually [`TAIL_START`]).
pub fn growth_fit(stats: &BallStats, r_min: u32) -> Result<GrowthFit, AnalysisError> {
    let points: Vec<(u32, u64)> = stats.negative_counts().into_iter().filter(|p| p.0 >= r_min).collect();
    fit_counts(&points)
}

impl GrowthFit {
    /// Errors unless `a > min_base` and the quality reaches `min_quality`.
    pub fn check(&self, min_base: f64, min_quality: f64) -> Result<(), AnalysisError> {
        if self.a > min_base && self.quality >= min_quality {
            Ok(())
        } else {
            Err(AnalysisError::NotExponential {
                a: self.a,
                quality: self.quality,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_geometric_series() {
        let pts: Vec<(u32, u64)> = (0..10).map(|r| (r, 1u64 << r)).collect();
        let fit = fit_counts(&pts).unwrap();
        assert!((fit.a - 2.0).abs() < 1e-12);
        assert!((fit.quality - 1.0).abs() < 1e-12);
        assert!((fit.c - 1.0).abs() < 1e-9);
    }

    #[test]
    fn errors() {
        let flat: Vec<(u32, u64)> = (0..8).map(|r| (r, 5)).collect();
        assert_eq!(fit_counts(&flat), Err(AnalysisError::DegenerateSeries));
        assert!(matches!(fit_counts(&flat[..3]), Err(AnalysisError::TooFewRadii { .. })));
        let mut zero = flat.clone();
        zero[0].1 = 0;
        zero[1].1 = 7;
        assert!(matches!(
            fit_counts(&zero),
            Err(AnalysisError::NonPositiveCount { radius: 0, .. })
        ));
    }

    #[test]
    fn quadratic_growth_is_flat() {
        let pts: Vec<(u32, u64)> = (150..=300)
            .map(|r| (r, 2 * r as u64 * r as u64 + 2 * r as u64 + 1))
            .collect();
        let fit = fit_counts(&pts).unwrap();
        assert!(fit.a < 1.01);
        assert!(fit.check(1.05, 0.98).is_err());
    }
}
