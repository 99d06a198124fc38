//! Speiser graphs with negative mean excess.
//!
//! The crate builds finite truncations of a recurrent, exponentially growing
//! Speiser graph assembled from leaf and pants gadgets over a pruned subtree
//! of the 3-regular tree, and verifies its combinatorial properties exactly:
//! degrees, face sizes, excess signs, the σ injection, growth, and
//! recurrence diagnostics.
//!
//! Modules, bottom-up:
//! - [`planar`]: rotation systems, face tracing, balls, JSON/DOT.
//! - [`speiser`]: excess, validity, face labeling, mean-excess series.
//! - [`tree`]: the pruned tree and its parent map.
//! - [`gamma`]: gadgets, assembly and σ.
//! - [`analysis`]: ball statistics, growth fits, resistance, random walks, choice of `s`.

pub mod analysis;
pub mod error;
pub mod gamma;
pub mod planar;
pub mod speiser;
pub mod tree;

pub use error::{AnalysisError, BuildError, GraphError, SpeiserError, TreeError};
pub use num_rational::Rational64;
