//! The plane with metric `|dz|/y` on `y ≥ 1` and `exp(1 - y)|dz|` on `y < 1`.
//!
//! The upper half is hyperbolic, the lower half is flat and isometric to
//! the universal cover of the exterior of the unit disk via
//! `z ↦ exp(iz + 1)`, and the interface `y = 1` carries no concentrated
//! curvature. This crate measures distances from the basepoint `i`, the
//! length of the interface inside a ball, the two half-areas of a ball and
//! the integrated curvature, and checks all of them against a
//! fast-marching solution of the eikonal equation on a grid.

mod areas;
mod distance;
mod error;
mod mesh;
mod metric;
mod quadrature;
mod report;
mod roots;

pub use areas::{hyperbolic_disk_area, BallAreas};
pub use distance::{flat_cover_distance, hyperbolic_distance, CoverPoint, Geodesic};
pub use error::SurfaceError;
pub use mesh::{mesh_distance_oracle, DistanceField, MeshSpec, DEFAULT_NODE_BUDGET};
pub use metric::{area_density, curvature, density, BoundingBox, Point, Region, SurfaceY, BASEPOINT};
pub use quadrature::integrate;
pub use report::{BallReport, CurvatureRow};
