use std::path::Path;

use serde::Deserialize;
use speiser_core::analysis::DEFAULT_SEED;
use speiser_core::gamma::SchedulePolicy;

use crate::args::{GraphArgs, SurfaceArgs};
use crate::UsageError;

pub const RUN_FORMAT: &str = "speiser-run/1";

/// JSON run configuration. Every field is optional and, when present,
/// overrides the matching flag. A plain builder configuration
/// (`{"N", "L", "schedule"}`) is a valid run configuration.
#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Version tag; must equal [`RUN_FORMAT`] when present.
    pub format: Option<String>,
    #[serde(rename = "N")]
    pub n: Option<usize>,
    #[serde(rename = "L")]
    pub l: Option<usize>,
    pub schedule: Option<SchedulePolicy>,
    /// Upper end of the automatic search for `s`.
    pub s_max: Option<usize>,
    pub r_max: Option<u32>,
    pub window: Option<usize>,
    pub mean_tolerance: Option<f64>,
    pub seed: Option<u64>,
    pub trials: Option<u64>,
    pub horizons: Option<Vec<u32>>,
    pub surface_r_max: Option<f64>,
    pub grid: Option<usize>,
    pub h: Option<f64>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, UsageError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| UsageError(format!("cannot read config {}: {e}", path.display())))?;
        let config: Self =
            serde_json::from_str(&text).map_err(|e| UsageError(format!("bad config {}: {e}", path.display())))?;
        match config.format.as_deref() {
            Some(tag) if tag != RUN_FORMAT => Err(UsageError(format!("unsupported config format `{tag}`"))),
            _ => Ok(config),
        }
    }
}

/// Fully resolved parameters of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct Params {
    pub n: usize,
    pub l: usize,
    /// `None` selects `s` automatically over `1..=s_max`.
    pub schedule: Option<SchedulePolicy>,
    pub s_max: usize,
    pub r_max: Option<u32>,
    pub window: Option<usize>,
    /// When set, the mean over the tail window must vary by at most this much.
    pub mean_tolerance: Option<f64>,
    pub seed: u64,
    pub trials: u64,
    pub horizons: Vec<u32>,
    pub surface_r_max: f64,
    pub grid: usize,
    pub h: Option<f64>,
}

impl Default for Params {
    fn default() -> Self {
        Self {
            n: 12,
            l: 8,
            schedule: None,
            s_max: 6,
            r_max: None,
            window: None,
            mean_tolerance: None,
            seed: DEFAULT_SEED,
            trials: 4000,
            horizons: vec![16, 64, 256],
            surface_r_max: 16.0,
            grid: 16,
            h: None,
        }
    }
}

impl Params {
    pub fn apply_graph_flags(&mut self, g: &GraphArgs) {
        if let Some(n) = g.n {
            self.n = n as usize;
        }
        if let Some(l) = g.l {
            self.l = l;
        }
        self.schedule = match &g.schedule {
            Some(sched) => sched.policy(g.s),
            None => g.s.map(|s| SchedulePolicy::Constant(s as usize)),
        };
        if g.rmax.is_some() {
            self.r_max = g.rmax;
        }
        if let Some(w) = g.window {
            self.window = Some(w as usize);
        }
        if g.mean_tolerance.is_some() {
            self.mean_tolerance = g.mean_tolerance;
        }
        if let Some(seed) = g.seed {
            self.seed = seed;
        }
    }

    pub fn apply_surface_flags(&mut self, s: &SurfaceArgs) {
        if let Some(r) = s.rmax {
            self.surface_r_max = r;
        }
        if let Some(grid) = s.grid {
            self.grid = grid as usize;
        }
        if s.h.is_some() {
            self.h = s.h;
        }
    }

    pub fn apply_config(&mut self, c: &RunConfig) {
        macro_rules! take {
            ($($field:ident),*) => {$(
                if let Some(v) = c.$field.clone() {
                    self.$field = v;
                }
            )*};
        }
        take!(n, l, s_max, seed, trials, horizons, surface_r_max, grid);
        if c.schedule.is_some() {
            self.schedule = c.schedule.clone();
        }
        if c.r_max.is_some() {
            self.r_max = c.r_max;
        }
        if c.window.is_some() {
            self.window = c.window;
        }
        if c.mean_tolerance.is_some() {
            self.mean_tolerance = c.mean_tolerance;
        }
        if c.h.is_some() {
            self.h = c.h;
        }
    }

    pub fn validate(&self) -> Result<(), UsageError> {
        let bad = |msg: String| Err(UsageError(msg));
        if !(1..=16).contains(&self.n) {
            return bad(format!("N = {} is outside 1..=16", self.n));
        }
        if self.l < 4 || !self.l.is_multiple_of(2) {
            return bad(format!("L = {} must be even and at least 4", self.l));
        }
        match &self.schedule {
            Some(SchedulePolicy::Constant(0)) => return bad("s must be at least 1".into()),
            Some(SchedulePolicy::Banded(s0, band)) if *s0 == 0 || *band == 0 => {
                return bad("banded schedule needs s0 >= 1 and band >= 1".into())
            }
            _ => {}
        }
        if self.s_max == 0 {
            return bad("s_max must be at least 1".into());
        }
        if self.window == Some(0) {
            return bad("window must be at least 1".into());
        }
        if self.mean_tolerance.is_some_and(|t| !(t.is_finite() && t >= 0.0)) {
            return bad("mean tolerance must be a nonnegative number".into());
        }
        if self.trials == 0 || self.horizons.is_empty() || self.horizons.contains(&0) {
            return bad("random walks need trials >= 1 and positive horizons".into());
        }
        if !(self.surface_r_max.is_finite() && self.surface_r_max > 0.0) {
            return bad(format!("surface radius {} must be positive", self.surface_r_max));
        }
        if self.grid < 2 {
            return bad(format!("grid = {} must be at least 2", self.grid));
        }
        if let Some(h) = self.h {
            if !(h.is_finite() && h > 0.0 && h <= 0.1) {
                return bad(format!("h = {h} must lie in (0, 0.1]"));
            }
        }
        Ok(())
    }

    /// Surface radii `r_max * k / grid` for `k = 1..=grid`.
    pub fn surface_grid(&self) -> Vec<f64> {
        (1..=self.grid)
            .map(|k| self.surface_r_max * k as f64 / self.grid as f64)
            .collect()
    }
}
