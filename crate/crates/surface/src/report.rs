use serde::Serialize;

use crate::error::SurfaceError;
use crate::metric::SurfaceY;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvatureRow {
    pub r: f64,
    pub length_beta_r: f64,
    pub area_p: f64,
    pub area_q: f64,
    /// `-area_p`: curvature is -1 on the hyperbolic half and 0 elsewhere.
    pub curvature_integral: f64,
    /// `-curvature_integral / (area_p + area_q)`.
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BallReport {
    pub rows: Vec<CurvatureRow>,
    /// Minimum of `ratio` over the grid.
    pub epsilon_estimate: f64,
    /// Minimum of `area_p / length β_r` over the grid.
    pub kappa: f64,
    /// Maximum of `area_q / length β_r` over the grid.
    pub big_k: f64,
    /// Max/min over the upper half of the grid.
    pub kappa_spread: f64,
    pub big_k_spread: f64,
    pub ratio_spread: f64,
}

fn spread(values: impl Iterator<Item = f64>) -> f64 {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    hi / lo
}

impl SurfaceY {
    pub fn curvature_report(&self, r_grid: &[f64]) -> Result<BallReport, SurfaceError> {
        if r_grid.is_empty() || r_grid[0] <= 0.0 || r_grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(SurfaceError::BadGrid);
        }
        let rows = r_grid
            .iter()
            .map(|&r| {
                let len = self.beta_r_length(r)?;
                let a = self.ball_areas(r)?;
                Ok(CurvatureRow {
                    r,
                    length_beta_r: len,
                    area_p: a.area_p,
                    area_q: a.area_q,
                    curvature_integral: -a.area_p,
                    ratio: a.area_p / (a.area_p + a.area_q),
                })
            })
            .collect::<Result<Vec<_>, SurfaceError>>()?;
        let upper = &rows[rows.len() / 2..];
        Ok(BallReport {
            epsilon_estimate: rows.iter().map(|x| x.ratio).fold(f64::INFINITY, f64::min),
            kappa: rows
                .iter()
                .map(|x| x.area_p / x.length_beta_r)
                .fold(f64::INFINITY, f64::min),
            big_k: rows.iter().map(|x| x.area_q / x.length_beta_r).fold(0.0, f64::max),
            kappa_spread: spread(upper.iter().map(|x| x.area_p / x.length_beta_r)),
            big_k_spread: spread(upper.iter().map(|x| x.area_q / x.length_beta_r)),
            ratio_spread: spread(upper.iter().map(|x| x.ratio)),
            rows,
        })
    }
}

impl BallReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("r,length_beta_r,area_P,area_Q,curvature_integral,ratio\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{:.12e},{:.12e},{:.12e},{:.12e},{:.12e}\n",
                row.r, row.length_beta_r, row.area_p, row.area_q, row.curvature_integral, row.ratio
            ));
        }
        out
    }
}
