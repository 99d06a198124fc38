use serde::Serialize;

use crate::error::SurfaceError;
use crate::metric::{BoundingBox, Point, SurfaceY};
use crate::quadrature::integrate;
use crate::roots::increasing_root;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BallAreas {
    pub r: f64,
    pub area_p: f64,
    pub area_q: f64,
    /// Quadrature error estimates.
    pub error_p: f64,
    pub error_q: f64,
}

/// Area of the full hyperbolic disk of radius `r`.
pub fn hyperbolic_disk_area(r: f64) -> f64 {
    4.0 * std::f64::consts::PI * (r / 2.0).sinh().powi(2)
}

impl SurfaceY {
    /// Areas of the two halves of the closed ball of radius `r` about the
    /// basepoint. Each half is integrated over horizontal slices whose
    /// half-widths are found from `distance_from_a`.
    pub fn ball_areas(&self, r: f64) -> Result<BallAreas, SurfaceError> {
        if !(r.is_finite() && r >= 0.0) {
            return Err(SurfaceError::BadRadius(r));
        }
        if r == 0.0 {
            return Ok(BallAreas {
                r,
                area_p: 0.0,
                area_q: 0.0,
                error_p: 0.0,
                error_q: 0.0,
            });
        }
        let bbox = BoundingBox::for_radius(r);
        let (area_p, error_p) = self.hyperbolic_part(r, &bbox)?;
        let (area_q, error_q) = self.flat_part(r, &bbox)?;
        Ok(BallAreas {
            r,
            area_p,
            area_q,
            error_p,
            error_q,
        })
    }

    /// Slices in `u = ln y` from the interface up to the top of the ball.
    fn hyperbolic_part(&self, r: f64, bbox: &BoundingBox) -> Result<(f64, f64), SurfaceError> {
        let u_max = bbox.y_max.ln();
        let along_axis = |u: f64| self.distance_from_a(Point::new(0.0, u.exp())) - r;
        if along_axis(u_max) <= 0.0 {
            return Err(SurfaceError::DomainTruncated {
                r,
                edge_distance: along_axis(u_max) + r,
            });
        }
        let u_top = increasing_root(along_axis, 0.0, u_max, self.root_tolerance);
        let failure = std::cell::Cell::new(None);
        let integrand = |s: f64| {
            let u = u_top - s * s;
            match self.half_width(u.exp(), r, bbox.x_half) {
                Ok(w) => 4.0 * s * w * (-u).exp(),
                Err(e) => {
                    failure.set(Some(e));
                    0.0
                }
            }
        };
        let out = integrate(integrand, 0.0, u_top.sqrt(), self.quad_tolerance)?;
        match failure.take() {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }

    /// Slices in `t = 1 - y` from the interface down to the bottom of the ball.
    fn flat_part(&self, r: f64, bbox: &BoundingBox) -> Result<(f64, f64), SurfaceError> {
        let t_max = 1.0 - bbox.y_min;
        let along_axis = |t: f64| self.distance_from_a(Point::new(0.0, 1.0 - t)) - r;
        if along_axis(t_max) <= 0.0 {
            return Err(SurfaceError::DomainTruncated {
                r,
                edge_distance: along_axis(t_max) + r,
            });
        }
        let t_top = increasing_root(along_axis, 0.0, t_max, self.root_tolerance);
        let failure = std::cell::Cell::new(None);
        let integrand = |s: f64| {
            let t = t_top - s * s;
            match self.half_width(1.0 - t, r, bbox.x_half) {
                Ok(w) => 4.0 * s * w * (2.0 * t).exp(),
                Err(e) => {
                    failure.set(Some(e));
                    0.0
                }
            }
        };
        let out = integrate(integrand, 0.0, t_top.sqrt(), self.quad_tolerance)?;
        match failure.take() {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ball_is_euclidean() {
        let s = SurfaceY::default();
        let r = 0.01;
        let a = s.ball_areas(r).unwrap();
        let total = a.area_p + a.area_q;
        let disk = std::f64::consts::PI * r * r;
        assert!((total / disk - 1.0).abs() < 1e-2);
        assert!((a.area_p / total - 0.5).abs() < 1e-2);
    }

    #[test]
    fn hyperbolic_part_below_full_disk() {
        let s = SurfaceY::default();
        for r in [1.0, 3.0, 6.0] {
            let a = s.ball_areas(r).unwrap();
            assert!(a.area_p > 0.0 && a.area_p <= hyperbolic_disk_area(r));
        }
    }
}
