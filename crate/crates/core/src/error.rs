use thiserror::Error;

use crate::planar::{FaceId, VertexId};

/// Structural defects of a rotation system.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("half-edge {half_edge} has a twin index out of range")]
    DanglingTwin { half_edge: u32 },
    #[error("twin map is not a fixed-point-free involution at half-edge {half_edge}")]
    TwinNotInvolution { half_edge: u32 },
    #[error("half-edge {half_edge} has an origin out of range")]
    DanglingOrigin { half_edge: u32 },
    #[error("rotation of vertex {vertex} references a half-edge out of range")]
    DanglingRotation { vertex: u32 },
    #[error("half-edge {half_edge} appears twice in rotations")]
    DuplicateInRotation { half_edge: u32 },
    #[error("half-edge {half_edge} is listed at vertex {vertex} but originates elsewhere")]
    WrongOrigin { half_edge: u32, vertex: u32 },
    #[error("half-edge {half_edge} is missing from every rotation")]
    MissingFromRotation { half_edge: u32 },
    #[error("boundary mark {half_edge} out of range")]
    DanglingBoundaryMark { half_edge: u32 },
    #[error("vertex {0} not in graph")]
    UnknownVertex(VertexId),
    #[error("malformed graph dump: {0}")]
    Dump(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpeiserError {
    #[error("vertex {vertex} is untrusted: incident face {face} touches the truncation boundary")]
    UntrustedVertex { vertex: VertexId, face: FaceId },
    #[error("basepoint {0} is not in the trusted region")]
    UntrustedBasepoint(VertexId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("ray length must be at least 1, got {0}")]
    RayTooShort(usize),
    #[error("tree vertex {0} is the truncation top and has no parent")]
    NoParent(usize),
    #[error("tree vertex {0} out of range")]
    UnknownVertex(usize),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BuildError {
    #[error("boundary length {0} must be even and at least 4")]
    BadBoundaryLength(usize),
    #[error("circle count s must be at least 1, got {0}")]
    BadCircleCount(usize),
    #[error("schedule assigns s = 0 to tree vertex {0}")]
    BadSchedule(usize),
    #[error("parity mismatch pasting tree edge {child} -> {parent}")]
    ParityMismatch { child: usize, parent: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("vertex {0} does not have positive excess")]
    NotPositive(VertexId),
    #[error("basepoint {0} does not have negative excess")]
    BasepointNotNegative(VertexId),
    #[error("growth is not exponential: a = {a}, quality = {quality}")]
    NotExponential { a: f64, quality: f64 },
    #[error("no trusted negative-excess vertex reachable from {0}")]
    NoNegativeVertex(VertexId),
    #[error("growth fit needs at least {needed} usable radii, got {got}")]
    TooFewRadii { needed: usize, got: usize },
    #[error("degenerate series: all values equal")]
    DegenerateSeries,
    #[error("nonpositive count {count} at radius {radius}")]
    NonPositiveCount { radius: u32, count: u64 },
    #[error("linear solver did not converge: relative residual {residual:e} after {iterations} iterations")]
    SolverDiverged { residual: f64, iterations: usize },
    #[error("radius {radius} must be at least 1 and the ball must reach it")]
    BadRadius { radius: u32 },
    #[error("Nash-Williams cutsets {a} and {b} share an edge")]
    CutsetsOverlap { a: usize, b: usize },
    #[error("no s in the range achieves the target; best margin {best_margin}")]
    NoAdmissibleS { best_margin: f64 },
    #[error("empty search range")]
    EmptyRange,
    #[error("trial count must be positive")]
    NoTrials,
    #[error(transparent)]
    Speiser(#[from] SpeiserError),
    #[error(transparent)]
    Build(#[from] BuildError),
}
