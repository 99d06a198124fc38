//! Excess statistics, growth fits, recurrence diagnostics and the choice of
//! `s`.

mod choose;
mod growth;
mod nash_williams;
mod resistance;
mod stats;
mod walks;

pub use choose::{choose_s, SChoice, SweepPoint};
pub use growth::{fit_counts, growth_fit, GrowthFit, MIN_FIT_RADII, TAIL_START};
pub use nash_williams::{nash_williams, CutsetReport};
pub use resistance::{
    effective_resistance, resistance_series, resistance_trend, solve_potentials, DirichletSystem, ResistanceSolve,
    ResistanceTrend, SOLVER_TOLERANCE, TREND_FACTOR,
};
pub use stats::{ball_stats, BallRow, BallStats};
pub use walks::{random_walk_return, ReturnEstimate, CONFIDENCE, DEFAULT_SEED};
