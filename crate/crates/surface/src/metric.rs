use serde::{Deserialize, Serialize};

/// A point `x + iy` of the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn region(self) -> Region {
        if self.y >= 1.0 {
            Region::Hyperbolic
        } else {
            Region::Flat
        }
    }
}

/// The basepoint `i`, on the interface.
pub const BASEPOINT: Point = Point::new(0.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Region {
    /// `y ≥ 1`, metric `|dz| / y`.
    Hyperbolic,
    /// `y < 1`, metric `exp(1 - y) |dz|`.
    Flat,
}

/// Conformal density of the metric; continuous across `y = 1`.
pub fn density(y: f64) -> f64 {
    if y >= 1.0 {
        1.0 / y
    } else {
        (1.0 - y).exp()
    }
}

/// Area density `density²`.
pub fn area_density(y: f64) -> f64 {
    let d = density(y);
    d * d
}

/// Gaussian curvature density: -1 on the hyperbolic half, 0 on the flat half.
pub fn curvature(y: f64) -> f64 {
    if y >= 1.0 {
        -1.0
    } else {
        0.0
    }
}

/// Axis-aligned box `|x| ≤ x_half`, `y_min ≤ y ≤ y_max`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundingBox {
    pub x_half: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl BoundingBox {
    /// A box provably containing the closed ball of radius `r` about the
    /// basepoint, with a unit of slack. On the hyperbolic side the ball is
    /// the Euclidean disk of center `i cosh r` and radius `sinh r`; on the
    /// flat side a point is at most `r` beyond an interface point of
    /// `|x| ≤ 2 sinh(r/2)`, and at most `e^{1-y} - 1` below the interface.
    pub fn for_radius(r: f64) -> Self {
        Self {
            x_half: r.sinh().max(2.0 * (r / 2.0).sinh() + r) + 1.0,
            y_min: -(1.0 + r).ln(),
            y_max: r.exp() + 1.0,
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x.abs() <= self.x_half && p.y >= self.y_min && p.y <= self.y_max
    }
}

/// Numerical parameters of the semi-analytic distance and the areas.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfaceY {
    /// Candidates on the interface scanned before golden-section refinement.
    pub crossing_grid: usize,
    /// Relative tolerance of the area quadrature.
    pub quad_tolerance: f64,
    /// Relative tolerance of slice half-widths and interface lengths.
    pub root_tolerance: f64,
}

impl Default for SurfaceY {
    fn default() -> Self {
        Self {
            crossing_grid: 4096,
            quad_tolerance: 1e-3,
            root_tolerance: 1e-12,
        }
    }
}
