use anyhow::Result;
use serde_json::json;
use speiser_surface::{density, mesh_distance_oracle, MeshSpec, SurfaceY, BASEPOINT, DEFAULT_NODE_BUDGET};

use crate::artifacts::OutDir;
use crate::config::Params;
use crate::report::Report;

/// Largest spread tolerated for the ratios over the upper half of the grid.
const MAX_SPREAD: f64 = 1.5;
/// Relative tolerance of the grid oracle against the semi-analytic distance.
const MESH_TOLERANCE: f64 = 0.08;

pub fn run_surface(p: &Params, out: &mut OutDir, report: &mut Report) -> Result<()> {
    let surface = SurfaceY::default();
    let ball = surface.curvature_report(&p.surface_grid())?;
    out.write("surface.csv", ball.to_csv())?;
    let mesh = p.h.map(|h| mesh_check(&surface, h)).transpose()?;
    out.write_json("surface.json", &json!({ "report": ball, "mesh_check": mesh }))?;
    out.plot(
        "surface.dat",
        "r length_beta_r area_P area_Q ratio",
        ball.rows.iter().map(|r| {
            format!(
                "{:.12e} {:.12e} {:.12e} {:.12e} {:.12e}",
                r.r, r.length_beta_r, r.area_p, r.area_q, r.ratio
            )
        }),
    )?;

    report.value("surface_epsilon", ball.epsilon_estimate);
    report.value("surface_kappa", ball.kappa);
    report.value("surface_K", ball.big_k);
    report.check(
        "surface epsilon > 0",
        ball.epsilon_estimate > 0.0,
        format!("{:.6}", ball.epsilon_estimate),
    );
    report.check("kappa > 0", ball.kappa > 0.0, format!("{:.6}", ball.kappa));
    report.check("K finite", ball.big_k.is_finite(), format!("{:.6}", ball.big_k));
    for (name, value) in [
        ("kappa spread <= 1.5", ball.kappa_spread),
        ("K spread <= 1.5", ball.big_k_spread),
        ("ratio spread <= 1.5", ball.ratio_spread),
    ] {
        report.check(name, value <= MAX_SPREAD, format!("{value:.4}"));
    }
    if let Some(m) = mesh {
        report.value("mesh_worst_relative_error", m.worst);
        report.check(
            "grid oracle within 8% of the semi-analytic distance",
            m.worst <= MESH_TOLERANCE,
            format!("worst {:.4} over {} nodes at h = {}", m.worst, m.nodes, m.h),
        );
    }
    Ok(())
}

#[derive(Debug, serde::Serialize)]
struct MeshCheck {
    h: f64,
    nodes: usize,
    worst: f64,
}

/// Compares the grid oracle with `distance_from_a` on a subsample of nodes
/// at distance between 0.5 and 2 from the basepoint.
fn mesh_check(surface: &SurfaceY, h: f64) -> Result<MeshCheck> {
    let steps = |len: f64| (len / h).ceil();
    let spec = MeshSpec {
        h,
        x_min: BASEPOINT.x - steps(2.5) * h,
        x_max: BASEPOINT.x + steps(2.5) * h,
        y_min: BASEPOINT.y - steps(1.2) * h,
        y_max: BASEPOINT.y + steps(7.0) * h,
        source: BASEPOINT,
        node_budget: DEFAULT_NODE_BUDGET,
    };
    let field = mesh_distance_oracle(&spec, |q| density(q.y))?;
    let stride = (field.nx.max(field.ny) / 40).max(1);
    let (mut worst, mut nodes) = (0.0f64, 0);
    for j in (0..field.ny).step_by(stride) {
        for i in (0..field.nx).step_by(stride) {
            let q = field.point(i, j);
            let d = surface.distance_from_a(q);
            if (0.5..=2.0).contains(&d) {
                worst = worst.max((field.at(i, j) / d - 1.0).abs());
                nodes += 1;
            }
        }
    }
    Ok(MeshCheck { h, nodes, worst })
}
