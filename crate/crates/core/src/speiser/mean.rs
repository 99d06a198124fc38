use num_rational::Rational64;
use num_traits::Zero;
use serde::Serialize;

use super::excess::{excess_table, Excess};
use crate::error::SpeiserError;
use crate::planar::{bfs_distances, trusted_radius, EmbeddedGraph, FaceSet, VertexId, UNREACHED};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeanExcessEntry {
    pub r: u32,
    pub n_vertices: u64,
    #[serde(serialize_with = "ser_ratio_opt")]
    pub total_excess: Option<Rational64>,
    #[serde(serialize_with = "ser_ratio_opt")]
    pub mean_excess: Option<Rational64>,
    pub clipped: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeanExcessSeries {
    pub basepoint: VertexId,
    pub trusted_radius: u32,
    pub entries: Vec<MeanExcessEntry>,
    /// Max of the mean over the tail window of trusted radii.
    #[serde(serialize_with = "ser_ratio_opt")]
    pub upper_estimate: Option<Rational64>,
    /// Min of the mean over the tail window of trusted radii.
    #[serde(serialize_with = "ser_ratio_opt")]
    pub lower_estimate: Option<Rational64>,
}

pub(crate) fn ser_ratio_opt<S: serde::Serializer>(v: &Option<Rational64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

impl MeanExcessSeries {
    pub fn trusted(&self) -> impl Iterator<Item = &MeanExcessEntry> {
        self.entries.iter().filter(|e| !e.clipped)
    }

    /// Spread of the mean over the tail window, as a float.
    pub fn tail_spread(&self) -> Option<f64> {
        let hi = self.upper_estimate?;
        let lo = self.lower_estimate?;
        Some(ratio_to_f64(hi - lo))
    }
}

pub fn ratio_to_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Default tail window: the upper half of the trusted radii.
pub fn default_window(trusted_count: usize) -> usize {
    trusted_count.div_ceil(2).max(1)
}

/// Exact ball averages of the excess about `w0` for `r = 0..=r_max`.
///
/// Radii beyond the trusted radius are reported as clipped with no values;
/// `window` selects how many of the largest trusted radii feed the
/// upper/lower estimates (`None` for the upper half).
pub fn mean_excess_series(
    g: &EmbeddedGraph,
    faces: &FaceSet,
    w0: VertexId,
    r_max: u32,
    window: Option<usize>,
) -> Result<MeanExcessSeries, SpeiserError> {
    let dist = bfs_distances(g, w0);
    let trusted = trusted_radius(g, faces, &dist).ok_or(SpeiserError::UntrustedBasepoint(w0))?;
    let table = excess_table(g, faces);
    series_from_parts(&dist, &table, w0, trusted, r_max, window)
}

pub(crate) fn series_from_parts(
    dist: &[u32],
    table: &[Option<Excess>],
    w0: VertexId,
    trusted: u32,
    r_max: u32,
    window: Option<usize>,
) -> Result<MeanExcessSeries, SpeiserError> {
    let top = r_max.min(trusted) as usize;
    let mut counts = vec![0u64; r_max as usize + 1];
    let mut shell = vec![Rational64::zero(); top + 1];
    for (i, &d) in dist.iter().enumerate() {
        if d == UNREACHED || d > r_max {
            continue;
        }
        counts[d as usize] += 1;
        if (d as usize) <= top {
            let e = table[i].expect("trusted ball vertices have exact excess");
            shell[d as usize] += e.value();
        }
    }
    let mut entries = Vec::with_capacity(r_max as usize + 1);
    let mut n = 0u64;
    let mut total = Rational64::zero();
    for r in 0..=r_max as usize {
        n += counts[r];
        let clipped = r > top;
        let (t, m) = if clipped {
            (None, None)
        } else {
            total += shell[r];
            (Some(total), Some(total / Rational64::from_integer(n as i64)))
        };
        entries.push(MeanExcessEntry {
            r: r as u32,
            n_vertices: n,
            total_excess: t,
            mean_excess: m,
            clipped,
        });
    }
    let trusted_means: Vec<Rational64> = entries.iter().filter_map(|e| e.mean_excess).collect();
    let w = window
        .unwrap_or_else(|| default_window(trusted_means.len()))
        .min(trusted_means.len());
    let tail = &trusted_means[trusted_means.len() - w..];
    Ok(MeanExcessSeries {
        basepoint: w0,
        trusted_radius: trusted,
        entries,
        upper_estimate: tail.iter().max().copied(),
        lower_estimate: tail.iter().min().copied(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::{fixtures, trace_faces};

    #[test]
    fn grid_series_is_zero() {
        let g = fixtures::grid(15, 15);
        let faces = trace_faces(&g);
        let c = fixtures::grid_vertex(15, 7, 7);
        let s = mean_excess_series(&g, &faces, c, 10, None).unwrap();
        assert_eq!(s.trusted_radius, 5);
        for e in s.trusted() {
            assert!(e.mean_excess.unwrap().is_zero());
        }
        assert!(s.entries[6].clipped);
        assert_eq!(s.entries[2].n_vertices, 13);
    }
}
