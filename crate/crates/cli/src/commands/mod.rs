mod build;
mod excess;
mod recurrence;
mod surface;

pub(crate) use build::describe;
pub use build::{build_gamma, run_build, run_export, Built};
pub use excess::run_excess;
pub use recurrence::run_recurrence;
pub use surface::run_surface;
