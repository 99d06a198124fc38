use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::AnalysisError;
use crate::planar::{EmbeddedGraph, VertexId};

/// Default seed for all Monte-Carlo runs.
pub const DEFAULT_SEED: u64 = 0x5eed_5e15_e000_0001;

/// Two-sided confidence level of the reported radius.
pub const CONFIDENCE: f64 = 0.95;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReturnEstimate {
    pub horizon: u32,
    pub trials: u64,
    pub returned: u64,
    /// Trials that left the admissible region; excluded from the estimate.
    pub excluded: u64,
    pub frequency: f64,
    /// Hoeffding radius at [`CONFIDENCE`].
    pub confidence_radius: f64,
}

/// Fraction of simple random walks from `w0` that revisit `w0` within
/// `horizon` steps. A walk entering a vertex with `admissible[v] == false`
/// is excluded. Trial `i` draws from stream `i` of a ChaCha8 generator
/// seeded by `seed`, so results do not depend on thread count.
pub fn random_walk_return(
    g: &EmbeddedGraph,
    w0: VertexId,
    horizon: u32,
    trials: u64,
    seed: u64,
    admissible: Option<&[bool]>,
) -> Result<ReturnEstimate, AnalysisError> {
    if trials == 0 {
        return Err(AnalysisError::NoTrials);
    }
    let outcomes: Vec<Option<bool>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial);
            let mut v = w0;
            for _ in 0..horizon {
                let rot = g.rotation(v);
                if rot.is_empty() {
                    return Some(false);
                }
                v = g.target(rot[rng.gen_range(0..rot.len())]);
                if admissible.is_some_and(|a| !a[v.index()]) {
                    return None;
                }
                if v == w0 {
                    return Some(true);
                }
            }
            Some(false)
        })
        .collect();
    let excluded = outcomes.iter().filter(|o| o.is_none()).count() as u64;
    let returned = outcomes.iter().filter(|o| **o == Some(true)).count() as u64;
    let kept = trials - excluded;
    let (frequency, confidence_radius) = if kept == 0 {
        (f64::NAN, f64::INFINITY)
    } else {
        let radius = ((2.0 / (1.0 - CONFIDENCE)).ln() / (2.0 * kept as f64)).sqrt();
        (returned as f64 / kept as f64, radius)
    };
    Ok(ReturnEstimate {
        horizon,
        trials,
        returned,
        excluded,
        frequency,
        confidence_radius,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::fixtures;

    #[test]
    fn loop_always_returns() {
        let g = fixtures::self_loop();
        let est = random_walk_return(&g, VertexId(0), 1, 100, DEFAULT_SEED, None).unwrap();
        assert_eq!(est.frequency, 1.0);
    }

    #[test]
    fn edge_bounces_back() {
        let g = fixtures::path(1);
        let est = random_walk_return(&g, VertexId(0), 2, 50, 7, None).unwrap();
        assert_eq!(est.returned, 50);
        let est = random_walk_return(&g, VertexId(0), 1, 50, 7, None).unwrap();
        assert_eq!(est.returned, 0);
    }

    #[test]
    fn reproducible_and_validated() {
        let g = fixtures::grid(21, 21);
        let c = fixtures::grid_vertex(21, 10, 10);
        let a = random_walk_return(&g, c, 40, 500, 3, None).unwrap();
        let b = random_walk_return(&g, c, 40, 500, 3, None).unwrap();
        assert_eq!(a, b);
        assert_eq!(random_walk_return(&g, c, 4, 0, 3, None), Err(AnalysisError::NoTrials));
    }
}
