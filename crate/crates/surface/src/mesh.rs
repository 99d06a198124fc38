use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::SurfaceError;
use crate::metric::Point;

pub const DEFAULT_NODE_BUDGET: usize = 40_000_000;

/// A uniform grid of cell size `h` over `[x_min, x_max] × [y_min, y_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeshSpec {
    pub h: f64,
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    /// Must be a grid node.
    pub source: Point,
    pub node_budget: usize,
}

/// Arrival times on the grid nodes, row-major in `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceField {
    pub nx: usize,
    pub ny: usize,
    pub h: f64,
    pub x_min: f64,
    pub y_min: f64,
    pub values: Vec<f64>,
}

impl DistanceField {
    pub fn point(&self, i: usize, j: usize) -> Point {
        Point::new(self.x_min + i as f64 * self.h, self.y_min + j as f64 * self.h)
    }

    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.values[j * self.nx + i]
    }

    /// Grid indices of the node at `p`, if `p` is (up to rounding) a node.
    pub fn node_of(&self, p: Point) -> Option<(usize, usize)> {
        let fi = (p.x - self.x_min) / self.h;
        let fj = (p.y - self.y_min) / self.h;
        let (i, j) = (fi.round(), fj.round());
        let on_grid = (fi - i).abs() < 1e-6 && (fj - j).abs() < 1e-6;
        let inside = i >= 0.0 && j >= 0.0 && (i as usize) < self.nx && (j as usize) < self.ny;
        (on_grid && inside).then_some((i as usize, j as usize))
    }

    /// Bilinear interpolation; `None` outside the grid.
    pub fn sample(&self, p: Point) -> Option<f64> {
        let fi = (p.x - self.x_min) / self.h;
        let fj = (p.y - self.y_min) / self.h;
        if fi < 0.0 || fj < 0.0 || fi > (self.nx - 1) as f64 || fj > (self.ny - 1) as f64 {
            return None;
        }
        let i = (fi.floor() as usize).min(self.nx - 2);
        let j = (fj.floor() as usize).min(self.ny - 2);
        let (u, v) = (fi - i as f64, fj - j as f64);
        Some(
            (1.0 - u) * (1.0 - v) * self.at(i, j)
                + u * (1.0 - v) * self.at(i + 1, j)
                + (1.0 - u) * v * self.at(i, j + 1)
                + u * v * self.at(i + 1, j + 1),
        )
    }
}

#[derive(PartialEq)]
struct Trial(f64, usize);

impl Eq for Trial {}

impl Ord for Trial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.total_cmp(&self.0).then(other.1.cmp(&self.1))
    }
}

impl PartialOrd for Trial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Axis step and the diagonal step sharing it, for the eight triangles
/// around a node.
const TRIANGLES: [((i64, i64), (i64, i64)); 8] = [
    ((1, 0), (1, 1)),
    ((0, 1), (1, 1)),
    ((0, 1), (-1, 1)),
    ((-1, 0), (-1, 1)),
    ((-1, 0), (-1, -1)),
    ((0, -1), (-1, -1)),
    ((0, -1), (1, -1)),
    ((1, 0), (1, -1)),
];

const NEIGHBORS: [(i64, i64); 8] = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)];

/// Fast marching for `|∇T| = density` with `T(source) = 0`, first-order
/// upwind on the eight right triangles around each node.
pub fn mesh_distance_oracle(spec: &MeshSpec, density: impl Fn(Point) -> f64) -> Result<DistanceField, SurfaceError> {
    let well_formed = spec.h > 0.0 && spec.x_max > spec.x_min && spec.y_max > spec.y_min;
    if !well_formed {
        return Err(SurfaceError::BadMesh(format!("{spec:?}")));
    }
    let nx = ((spec.x_max - spec.x_min) / spec.h).round() as usize + 1;
    let ny = ((spec.y_max - spec.y_min) / spec.h).round() as usize + 1;
    let nodes = nx.saturating_mul(ny);
    if nodes > spec.node_budget {
        return Err(SurfaceError::MeshTooLarge {
            nodes,
            budget: spec.node_budget,
        });
    }
    let mut field = DistanceField {
        nx,
        ny,
        h: spec.h,
        x_min: spec.x_min,
        y_min: spec.y_min,
        values: vec![f64::INFINITY; nodes],
    };
    let (si, sj) = field
        .node_of(spec.source)
        .ok_or_else(|| SurfaceError::BadMesh("source is not a grid node".into()))?;
    let lambda: Vec<f64> = (0..nodes).map(|k| density(field.point(k % nx, k / nx))).collect();
    let mut known = vec![false; nodes];
    let mut heap = BinaryHeap::new();
    let src = sj * nx + si;
    field.values[src] = 0.0;
    heap.push(Trial(0.0, src));
    let h = spec.h;
    let at = |i: i64, j: i64| -> Option<usize> {
        (i >= 0 && j >= 0 && (i as usize) < nx && (j as usize) < ny).then(|| j as usize * nx + i as usize)
    };
    while let Some(Trial(t, k)) = heap.pop() {
        if known[k] || t > field.values[k] {
            continue;
        }
        known[k] = true;
        let (ki, kj) = ((k % nx) as i64, (k / nx) as i64);
        for (di, dj) in NEIGHBORS {
            let Some(c) = at(ki + di, kj + dj) else { continue };
            if known[c] {
                continue;
            }
            let (ci, cj) = ((c % nx) as i64, (c / nx) as i64);
            let mut best = field.values[c];
            for ((ai, aj), (bi, bj)) in TRIANGLES {
                let a = at(ci + ai, cj + aj).filter(|&a| known[a]);
                let b = at(ci + bi, cj + bj).filter(|&b| known[b]);
                let cand = triangle_update(
                    lambda[c],
                    a.map(|a| (field.values[a], lambda[a])),
                    b.map(|b| (field.values[b], lambda[b])),
                    h,
                );
                best = best.min(cand);
            }
            if best < field.values[c] {
                field.values[c] = best;
                heap.push(Trial(best, c));
            }
        }
    }
    Ok(field)
}

/// Arrival time at the right-angle-opposite corner `C` of a triangle whose
/// axis neighbour `A` (distance `h`) and diagonal neighbour `B`
/// (distance `h√2`) may be known.
fn triangle_update(lc: f64, a: Option<(f64, f64)>, b: Option<(f64, f64)>, h: f64) -> f64 {
    let mut best = f64::INFINITY;
    if let Some((ta, la)) = a {
        best = best.min(ta + 0.5 * (lc + la) * h);
    }
    if let Some((tb, lb)) = b {
        best = best.min(tb + 0.5 * (lc + lb) * h * std::f64::consts::SQRT_2);
    }
    if let (Some((ta, la)), Some((tb, lb))) = (a, b) {
        let f = (lc + la + lb) / 3.0;
        let q = (ta - tb) / (f * h);
        if q > 0.0 && q < std::f64::consts::FRAC_1_SQRT_2 {
            let s = q / (1.0 - q * q).sqrt();
            best = best.min(ta + s * (tb - ta) + f * h * (1.0 + s * s).sqrt());
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(h: f64) -> MeshSpec {
        MeshSpec {
            h,
            x_min: -1.0,
            x_max: 1.0,
            y_min: -1.0,
            y_max: 1.0,
            source: Point::new(0.0, 0.0),
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }

    #[test]
    fn uniform_speed_is_nearly_euclidean() {
        let field = mesh_distance_oracle(&square(0.01), |_| 1.0).unwrap();
        for (x, y) in [(0.5, 0.0), (0.5, 0.5), (0.3, 0.8), (-0.9, 0.2)] {
            let exact: f64 = f64::hypot(x, y);
            let got = field.sample(Point::new(x, y)).unwrap();
            assert!((got / exact - 1.0).abs() < 0.02, "({x}, {y}): {got} vs {exact}");
        }
        // exact along axes and diagonals
        assert!((field.sample(Point::new(0.7, 0.0)).unwrap() - 0.7).abs() < 1e-9);
        assert!((field.sample(Point::new(0.5, 0.5)).unwrap() - 0.5f64.hypot(0.5)).abs() < 1e-9);
    }

    #[test]
    fn budget_and_source_checks() {
        let mut spec = square(0.01);
        spec.node_budget = 100;
        assert!(matches!(
            mesh_distance_oracle(&spec, |_| 1.0),
            Err(SurfaceError::MeshTooLarge { .. })
        ));
        let mut spec = square(0.01);
        spec.source = Point::new(0.005, 0.0);
        assert!(matches!(
            mesh_distance_oracle(&spec, |_| 1.0),
            Err(SurfaceError::BadMesh(_))
        ));
    }
}
