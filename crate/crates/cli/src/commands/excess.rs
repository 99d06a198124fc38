use anyhow::Result;
use serde_json::json;
use speiser_core::analysis::{ball_stats, growth_fit, TAIL_START};
use speiser_core::gamma::SchedulePolicy;
use speiser_core::speiser::{default_window, ratio_to_f64};
use speiser_core::{AnalysisError, Rational64};

use super::Built;
use crate::artifacts::OutDir;
use crate::config::Params;
use crate::report::{failing, Report};

pub fn run_excess(p: &Params, built: &Built, out: &mut OutDir, report: &mut Report) -> Result<()> {
    let g = &built.gamma;
    let r_max = p.r_max.unwrap_or(g.tree.ray_length as u32 + 1);
    let stats = ball_stats(&g.graph, &g.faces, g.basepoint, r_max)?;
    let fit = match growth_fit(&stats, TAIL_START) {
        Ok(fit) => Some(fit),
        Err(AnalysisError::TooFewRadii { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let margin = fit.and_then(|f| stats.excess_margin(f.a));
    let window = p.window.unwrap_or_else(|| default_window(stats.trusted().count()));
    let spread = stats.mean_tail_spread(window);

    let mut csv = String::from("r,n_vertices,total_excess_num,total_excess_den,mean_excess,clipped\n");
    let mut full = String::from("r,n_vertices,n_plus,n_minus,n_zero,n_untrusted,total_excess,mean_excess,clipped\n");
    for row in &stats.rows {
        let (num, den) = row
            .total_excess
            .map(|t| (t.numer().to_string(), t.denom().to_string()))
            .unwrap_or_default();
        let mean = row
            .mean_excess
            .map(|m| format!("{:.12e}", ratio_to_f64(m)))
            .unwrap_or_default();
        let exact = |v: Option<Rational64>| v.map(|x| x.to_string()).unwrap_or_default();
        csv.push_str(&format!(
            "{},{},{num},{den},{mean},{}\n",
            row.r, row.n_vertices, row.clipped
        ));
        full.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            row.r,
            row.n_vertices,
            row.n_plus,
            row.n_minus,
            row.n_zero,
            row.n_untrusted,
            exact(row.total_excess),
            exact(row.mean_excess),
            row.clipped
        ));
    }
    out.write("mean_excess.csv", csv)?;
    out.write("ball_stats.csv", full)?;
    if let Some(choice) = &built.choice {
        let mut sweep = String::from("s,trusted_radius,a,margin\n");
        for pt in &choice.sweep {
            sweep.push_str(&format!(
                "{},{},{:.12e},{:.12e}\n",
                pt.s, pt.trusted_radius, pt.a, pt.margin
            ));
        }
        out.write("s_sweep.csv", sweep)?;
    }
    out.write_json(
        "excess.json",
        &json!({
            "stats": stats,
            "growth_fit": fit,
            "epsilon": margin,
            "window": window,
            "mean_tail_spread": spread,
            "zero_ratio_max": stats.zero_ratio_max(),
            "s_choice": built.choice,
        }),
    )?;
    out.plot(
        "mean_excess.dat",
        "r mean_excess",
        stats
            .trusted()
            .filter_map(|row| Some(format!("{} {:.12e}", row.r, ratio_to_f64(row.mean_excess?)))),
    )?;
    out.plot(
        "growth.dat",
        "r n_minus fitted",
        stats.trusted().map(|row| {
            let fitted = fit.map(|f| f.c * f.a.powi(row.r as i32)).unwrap_or(f64::NAN);
            format!("{} {} {:.12e}", row.r, row.n_minus, fitted)
        }),
    )?;

    report.value("trusted_radius", stats.trusted_radius);
    report.value("a", fit.map(|f| f.a));
    report.value("c", fit.map(|f| f.c));
    report.value("growth_quality", fit.map(|f| f.quality));
    report.value("epsilon", margin);
    report.value("mean_tail_spread", spread);
    report.value("zero_ratio_max", stats.zero_ratio_max());
    if let Some(choice) = &built.choice {
        report.value("s", choice.s);
        report.value("margin_monotone_in_s", choice.margin_monotone);
    }

    let positive_means: Vec<u32> = stats
        .trusted()
        .filter(|row| !row.mean_excess.is_some_and(|m| m < Rational64::from_integer(0)))
        .map(|row| row.r)
        .collect();
    report.check(
        "mean excess < 0 at every trusted radius",
        positive_means.is_empty(),
        failing("trusted r", &positive_means),
    );
    if let SchedulePolicy::Constant(s) = g.policy {
        let bad = stats.sigma_counting_violations(s as u32);
        report.check(
            "n_plus(r + s) <= n_minus(r)",
            bad.is_empty(),
            failing("trusted r", &bad),
        );
    }
    if let (Some(tol), Some(spread)) = (p.mean_tolerance, spread) {
        report.check(
            "mean excess tail spread <= tolerance",
            spread <= tol,
            format!("spread {spread:.6} over the last {window} trusted radii, tolerance {tol}"),
        );
    }
    match (fit, margin) {
        (Some(fit), Some(margin)) => {
            report.check(
                "growth base a > 1",
                fit.a > 1.0,
                format!("a = {:.6}, R^2 = {:.4}", fit.a, fit.quality),
            );
            report.check(
                "total_excess(r) <= -epsilon a^r with epsilon > 0",
                margin > 0.0,
                format!("witnessed epsilon = {margin:.6}"),
            );
        }
        _ => report.value(
            "growth_fit_skipped",
            format!("fewer than the needed trusted radii from r = {TAIL_START}"),
        ),
    }
    Ok(())
}
