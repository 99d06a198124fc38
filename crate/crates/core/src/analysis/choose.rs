use std::ops::RangeInclusive;

use serde::Serialize;

use super::growth::{growth_fit, TAIL_START};
use super::stats::ball_stats;
use crate::error::AnalysisError;
use crate::gamma::{assemble, SchedulePolicy};
use crate::tree::PrunedTree;

/// Outcome of one `s` in the sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepPoint {
    pub s: usize,
    pub trusted_radius: u32,
    /// Fitted growth base of `n⁻_r`.
    pub a: f64,
    /// `min_r (-total(r) / a^r)` over trusted `r ≥ 1`.
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SChoice {
    pub s: usize,
    pub epsilon: f64,
    pub a: f64,
    pub sweep: Vec<SweepPoint>,
    /// Whether the margin is nondecreasing in `s` over the sweep.
    pub margin_monotone: bool,
}

/// Smallest `s` whose constant-`s` truncation has
/// `total_excess(r) ≤ -epsilon_target · a^r` at every trusted `r ≥ 1`
/// (strictly negative totals when `epsilon_target = 0`). The whole range is
/// swept so the margin's monotonicity can be reported.
pub fn choose_s(
    tree: &PrunedTree,
    l: usize,
    s_range: RangeInclusive<usize>,
    epsilon_target: f64,
) -> Result<SChoice, AnalysisError> {
    if s_range.is_empty() {
        return Err(AnalysisError::EmptyRange);
    }
    let mut sweep = Vec::new();
    for s in s_range {
        let gamma = assemble(tree.clone(), &SchedulePolicy::Constant(s), l)?;
        let stats = ball_stats(&gamma.graph, &gamma.faces, gamma.basepoint, tree.ray_length as u32 + 1)?;
        let fit = growth_fit(&stats, TAIL_START)?;
        let margin = stats.excess_margin(fit.a).unwrap_or(f64::NEG_INFINITY);
        sweep.push(SweepPoint {
            s,
            trusted_radius: stats.trusted_radius,
            a: fit.a,
            margin,
        });
    }
    let admissible = |p: &SweepPoint| {
        if epsilon_target > 0.0 {
            p.margin >= epsilon_target
        } else {
            p.margin > 0.0
        }
    };
    let margin_monotone = sweep.windows(2).all(|w| w[1].margin >= w[0].margin);
    match sweep.iter().find(|p| admissible(p)) {
        Some(p) => Ok(SChoice {
            s: p.s,
            epsilon: p.margin,
            a: p.a,
            margin_monotone,
            sweep: sweep.clone(),
        }),
        None => Err(AnalysisError::NoAdmissibleS {
            best_margin: sweep.iter().map(|p| p.margin).fold(f64::NEG_INFINITY, f64::max),
        }),
    }
}
