use anyhow::Result;
use serde_json::json;
use speiser_core::analysis::{nash_williams, random_walk_return, resistance_series, resistance_trend};
use speiser_core::planar::{bfs_distances, trusted_radius};

use super::Built;
use crate::artifacts::OutDir;
use crate::config::Params;
use crate::report::{failing, Report};

/// Slack allowed when comparing a solved resistance with an exact lower bound.
const BOUND_SLACK: f64 = 1e-9;

pub fn run_recurrence(p: &Params, built: &Built, out: &mut OutDir, report: &mut Report) -> Result<()> {
    let g = &built.gamma;
    let w0 = g.basepoint;
    let nw = nash_williams(g)?;
    let dist = bfs_distances(&g.graph, w0);
    let trusted = trusted_radius(&g.graph, &g.faces, &dist).unwrap_or(0);
    let r_max = p.r_max.unwrap_or(trusted).max(1);
    let series = resistance_series(&g.graph, w0, r_max)?;
    let trend = resistance_trend(&series);
    let admissible: Vec<bool> = g.excess.iter().map(Option::is_some).collect();
    let walks = p
        .horizons
        .iter()
        .map(|&t| random_walk_return(&g.graph, w0, t, p.trials, p.seed, Some(&admissible)))
        .collect::<Result<Vec<_>, _>>()?;

    let mut csv = String::from("r,r_eff,nash_williams_sum,iterations,residual,unknowns\n");
    let mut below = Vec::new();
    for s in &series {
        let bound = nw.partial_sum_within(s.r);
        if s.resistance < bound * (1.0 - BOUND_SLACK) {
            below.push(s.r);
        }
        csv.push_str(&format!(
            "{},{:.12e},{:.12e},{},{:.3e},{}\n",
            s.r, s.resistance, bound, s.iterations, s.residual, s.unknowns
        ));
    }
    out.write("resistance.csv", csv)?;
    let mut cuts = String::from("k,size,partial_sum,separates,inner_reach\n");
    for (i, size) in nw.sizes.iter().enumerate() {
        cuts.push_str(&format!(
            "{},{size},{:.12e},{},{}\n",
            i + 1,
            nw.partial_sums[i],
            nw.separates[i],
            nw.inner_reach[i]
        ));
    }
    out.write("cutsets.csv", cuts)?;
    let mut wcsv = String::from("horizon,trials,returned,excluded,frequency,confidence_radius\n");
    for w in &walks {
        wcsv.push_str(&format!(
            "{},{},{},{},{:.12e},{:.12e}\n",
            w.horizon, w.trials, w.returned, w.excluded, w.frequency, w.confidence_radius
        ));
    }
    out.write("walks.csv", wcsv)?;
    out.write_json(
        "recurrence.json",
        &json!({ "cutsets": nw, "resistance": series, "trend": trend, "walks": walks, "seed": p.seed }),
    )?;
    out.plot(
        "resistance.dat",
        "r r_eff nash_williams_sum",
        series
            .iter()
            .map(|s| format!("{} {:.12e} {:.12e}", s.r, s.resistance, nw.partial_sum_within(s.r))),
    )?;

    report.value("R_eff", series.iter().map(|s| s.resistance).collect::<Vec<_>>());
    report.value("cutset_sizes", nw.sizes.clone());
    report.value(
        "walk_return_frequency",
        walks.iter().map(|w| w.frequency).collect::<Vec<_>>(),
    );
    report.check(
        "cutset sizes constant",
        nw.constant_size,
        format!("sizes {:?}", nw.sizes.iter().collect::<std::collections::BTreeSet<_>>()),
    );
    let leaky: Vec<usize> = (0..nw.separates.len())
        .filter(|&i| !nw.separates[i])
        .map(|i| i + 1)
        .collect();
    report.check(
        "cutsets separate basepoint from top",
        leaky.is_empty(),
        failing("k", &leaky),
    );
    report.check("R_eff(r) >= Nash-Williams sum", below.is_empty(), failing("r", &below));
    match trend {
        Some(t) => {
            report.check(
                "R_eff strictly increasing",
                t.strictly_increasing,
                format!("{} radii", series.len()),
            );
            report.check(
                "R_eff growth sustained",
                t.sustained,
                format!(
                    "min r^2 delta: lower half {:.4}, upper half {:.4}",
                    t.lower_half_min, t.upper_half_min
                ),
            );
        }
        None => report.value("resistance_trend_skipped", "fewer than 3 radii"),
    }
    Ok(())
}
