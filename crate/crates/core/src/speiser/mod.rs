//! Excess, mean excess and Speiser-validity checks.
//!
//! Everything here is exact rational arithmetic.

mod excess;
mod labeling;
mod mean;
mod validate;

pub use excess::{deficit, excess, excess_from_half_degrees, excess_table, Excess};
pub use labeling::{label_faces, label_faces_with, LabelConflict, LabelOptions, Labeling, PropagationOrder};
pub(crate) use mean::ser_ratio_opt;
pub use mean::{default_window, mean_excess_series, ratio_to_f64, MeanExcessEntry, MeanExcessSeries};
pub use validate::{check_face_sizes, validate_speiser, ValidityReport, Violation};
