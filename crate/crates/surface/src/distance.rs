use serde::Serialize;

use crate::error::SurfaceError;
use crate::metric::{BoundingBox, Point, SurfaceY, BASEPOINT};
use crate::roots::increasing_root;

/// Half-plane distance between two points with `y ≥ 1`.
pub fn hyperbolic_distance(z1: Point, z2: Point) -> Result<f64, SurfaceError> {
    for z in [z1, z2] {
        if z.y.is_nan() || z.y < 1.0 {
            return Err(SurfaceError::NotInP { x: z.x, y: z.y });
        }
    }
    Ok(half_plane_distance(z1, z2))
}

/// `cosh d = 1 + |Δ|² / (2 y₁ y₂)`, evaluated as `2 asinh(|Δ| / (2 √(y₁ y₂)))`.
pub(crate) fn half_plane_distance(z1: Point, z2: Point) -> f64 {
    let chord = (z1.x - z2.x).hypot(z1.y - z2.y);
    2.0 * (chord / (2.0 * (z1.y * z2.y).sqrt())).asinh()
}

/// Polar coordinates on the universal cover of `{|w| > 1}`; the angle is
/// not reduced.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoverPoint {
    pub theta: f64,
    pub rho: f64,
}

impl CoverPoint {
    /// Image of a point of the flat half under `z ↦ exp(iz + 1)`.
    pub fn from_plane(p: Point) -> Self {
        Self {
            theta: p.x,
            rho: (1.0 - p.y).exp(),
        }
    }
}

/// Distance in the universal cover of the exterior of the unit disk: the
/// straight segment when it misses the disk, otherwise tangent, arc of the
/// unit circle, tangent.
pub fn flat_cover_distance(p1: CoverPoint, p2: CoverPoint) -> Result<f64, SurfaceError> {
    for p in [p1, p2] {
        if p.rho.is_nan() || p.rho < 1.0 {
            return Err(SurfaceError::RhoBelowOne(p.rho));
        }
    }
    Ok(cover_distance(p1.rho, p2.rho, (p1.theta - p2.theta).abs()))
}

pub(crate) fn cover_distance(rho1: f64, rho2: f64, dtheta: f64) -> f64 {
    let a1 = (1.0 / rho1).acos();
    let a2 = (1.0 / rho2).acos();
    if dtheta <= a1 + a2 {
        (rho1 * rho1 + rho2 * rho2 - 2.0 * rho1 * rho2 * dtheta.cos())
            .max(0.0)
            .sqrt()
    } else {
        (rho1 * rho1 - 1.0).sqrt() + (rho2 * rho2 - 1.0).sqrt() + (dtheta - a1 - a2)
    }
}

/// Distance from the basepoint and, for flat points, where the path
/// crosses the interface.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Geodesic {
    pub distance: f64,
    pub crossing: Option<f64>,
}

const GOLDEN: f64 = 0.618_033_988_749_894_8;

impl SurfaceY {
    pub fn distance_from_a(&self, p: Point) -> f64 {
        self.geodesic_from_a(p).distance
    }

    /// Hyperbolic distance on `y ≥ 1`; below, the shortest path that
    /// crosses the interface once, at `x_q + i`, minimized over `x_q`.
    pub fn geodesic_from_a(&self, p: Point) -> Geodesic {
        if p.y >= 1.0 {
            return Geodesic {
                distance: half_plane_distance(BASEPOINT, p),
                crossing: None,
            };
        }
        let rho = (1.0 - p.y).exp();
        let cost = |xq: f64| 2.0 * (xq.abs() / 2.0).asinh() + cover_distance(1.0, rho, (p.x - xq).abs());
        let (lo, hi) = (p.x.min(0.0), p.x.max(0.0));
        if hi - lo == 0.0 {
            return Geodesic {
                distance: cost(0.0),
                crossing: Some(0.0),
            };
        }
        let n = self.crossing_grid.max(2);
        let step = (hi - lo) / (n - 1) as f64;
        let (mut best_i, mut best) = (0, f64::INFINITY);
        for i in 0..n {
            let c = cost(lo + step * i as f64);
            if c < best {
                best = c;
                best_i = i;
            }
        }
        let mut a = lo + step * best_i.saturating_sub(1) as f64;
        let mut b = (lo + step * (best_i + 1) as f64).min(hi);
        let mut c = b - GOLDEN * (b - a);
        let mut d = a + GOLDEN * (b - a);
        let (mut fc, mut fd) = (cost(c), cost(d));
        while b - a > 1e-13 * (1.0 + hi - lo) {
            if fc < fd {
                b = d;
                d = c;
                fd = fc;
                c = b - GOLDEN * (b - a);
                fc = cost(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + GOLDEN * (b - a);
                fd = cost(d);
            }
        }
        let mid = 0.5 * (a + b);
        let refined = cost(mid);
        let grid_best = lo + step * best_i as f64;
        if refined <= best {
            Geodesic {
                distance: refined,
                crossing: Some(mid),
            }
        } else {
            Geodesic {
                distance: best,
                crossing: Some(grid_best),
            }
        }
    }

    /// Euclidean (equivalently, metric) length of the part of the interface
    /// within distance `r` of the basepoint.
    pub fn beta_r_length(&self, r: f64) -> Result<f64, SurfaceError> {
        if !(r.is_finite() && r >= 0.0) {
            return Err(SurfaceError::BadRadius(r));
        }
        if r == 0.0 {
            return Ok(0.0);
        }
        let bbox = BoundingBox::for_radius(r);
        let half = self.half_width(1.0, r, bbox.x_half)?;
        Ok(2.0 * half)
    }

    /// Largest `x ≥ 0` with `distance_from_a(x + iy) ≤ r`, searched in
    /// `[0, x_max]`; zero when `(0, y)` is already too far.
    pub(crate) fn half_width(&self, y: f64, r: f64, x_max: f64) -> Result<f64, SurfaceError> {
        let f = |x: f64| self.distance_from_a(Point::new(x, y)) - r;
        if f(0.0) >= 0.0 {
            return Ok(0.0);
        }
        let edge = f(x_max);
        if edge <= 0.0 {
            return Err(SurfaceError::DomainTruncated {
                r,
                edge_distance: edge + r,
            });
        }
        Ok(increasing_root(f, 0.0, x_max, self.root_tolerance))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        let i = BASEPOINT;
        assert_eq!(hyperbolic_distance(i, i).unwrap(), 0.0);
        let d = hyperbolic_distance(i, Point::new(0.0, 2.0)).unwrap();
        assert!((d - 2f64.ln()).abs() < 1e-15);
        for x in [0.1, 1.0, 5.0] {
            let d = hyperbolic_distance(i, Point::new(x, 1.0)).unwrap();
            assert!((d - (1.0 + x * x / 2.0).acosh()).abs() < 1e-12);
        }
        assert!(hyperbolic_distance(i, Point::new(0.0, 0.5)).is_err());
    }

    #[test]
    fn cover_examples() {
        let p = |theta, rho| CoverPoint { theta, rho };
        assert!((flat_cover_distance(p(0.3, 1.5), p(0.3, 4.0)).unwrap() - 2.5).abs() < 1e-15);
        let arc = flat_cover_distance(p(0.0, 1.0), p(std::f64::consts::PI, 1.0)).unwrap();
        assert!((arc - std::f64::consts::PI).abs() < 1e-15);
        assert_eq!(
            flat_cover_distance(p(0.0, 0.5), p(0.0, 2.0)),
            Err(SurfaceError::RhoBelowOne(0.5))
        );
        // winding more than once around stays on the arc
        let wind = flat_cover_distance(p(0.0, 1.0), p(10.0, 1.0)).unwrap();
        assert!((wind - 10.0).abs() < 1e-12);
    }

    #[test]
    fn distance_from_a_examples() {
        let s = SurfaceY::default();
        assert_eq!(s.distance_from_a(BASEPOINT), 0.0);
        for y in [0.9, 0.5, -0.3] {
            let d = s.distance_from_a(Point::new(0.0, y));
            assert!((d - ((1.0 - y).exp() - 1.0)).abs() < 1e-12);
        }
        for x in [0.5, 2.0, 7.0] {
            let d = s.distance_from_a(Point::new(x, 1.0));
            assert!((d - (1.0 + x * x / 2.0).acosh()).abs() < 1e-12);
        }
    }

    #[test]
    fn beta_length_matches_closed_form() {
        let s = SurfaceY::default();
        assert_eq!(s.beta_r_length(0.0).unwrap(), 0.0);
        let two = s.beta_r_length(2.0).unwrap();
        assert!((two - 4.0 * 1f64.sinh()).abs() < 1e-9);
        assert!(s.beta_r_length(-1.0).is_err());
    }
}
