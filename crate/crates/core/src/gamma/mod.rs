//! Leaf and pants gadgets, their assembly over the pruned tree, and σ.
//!
//! Leaf piece: `s` concentric circles inside the boundary circle, joined by
//! radial rungs into quadrilateral bands; the innermost circle is closed by
//! two doubled edges (the 2-gons) and nested chords.
//!
//! Pants piece: outer circle and two inner circles joined pairwise by
//! ladders of `L/2` rungs. The two junctions of the ladders are hexagons,
//! every other face is a quadrilateral.
//!
//! On every pasting circle the hexagons sit at positions `{0, h-1, h, L-1}`
//! (`h = L/2`), which are also the 2-gon positions of the innermost leaf
//! circle. A 2-gon vertex therefore sees its nearest negative vertex
//! straight down the radial rungs, at distance exactly `s`.

mod assemble;
mod checks;
mod gadgets;
mod layout;
mod sigma;

pub use assemble::{assemble, BuildConfig, Gamma, SchedulePolicy};
pub use checks::{contract_report, sign_report, ContractReport, SignReport, FACE_SIZES};
pub use gadgets::{leaf_gadget, pants_gadget, GadgetKind, GadgetPiece};
pub use layout::junction_positions;
pub use sigma::{sigma, sigma_report, SigmaPair, SigmaReport};
