use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SurfaceError {
    #[error("point ({x}, {y}) is not in the hyperbolic half y >= 1")]
    NotInP { x: f64, y: f64 },
    #[error("radial coordinate {0} is below 1")]
    RhoBelowOne(f64),
    #[error("radius {0} must be finite and nonnegative")]
    BadRadius(f64),
    #[error("bounding box too small for radius {r}: distance at the box edge is only {edge_distance}")]
    DomainTruncated { r: f64, edge_distance: f64 },
    #[error("quadrature stopped at estimated relative error {achieved:e}, tolerance {tolerance:e}")]
    QuadratureFailed { achieved: f64, tolerance: f64 },
    #[error("mesh needs {nodes} nodes, budget is {budget}; use a larger cell size")]
    MeshTooLarge { nodes: usize, budget: usize },
    #[error("invalid mesh: {0}")]
    BadMesh(String),
    #[error("radius grid must be positive and strictly increasing")]
    BadGrid,
}
