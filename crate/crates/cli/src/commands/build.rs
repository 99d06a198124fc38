use anyhow::Result;
use serde_json::json;
use speiser_core::analysis::{choose_s, SChoice};
use speiser_core::gamma::{assemble, contract_report, sigma_report, sign_report, Gamma, SchedulePolicy};
use speiser_core::planar::{to_dot, GraphDump};
use speiser_core::tree::build_pruned_tree;
use speiser_core::AnalysisError;

use crate::args::ExportFormat;
use crate::artifacts::OutDir;
use crate::config::Params;
use crate::report::Report;
use crate::UsageError;

pub struct Built {
    pub gamma: Gamma,
    pub choice: Option<SChoice>,
}

/// Assembles the truncation, choosing a constant `s` when none is given.
pub fn build_gamma(p: &Params) -> Result<Built> {
    let tree = build_pruned_tree(p.n)?;
    let (policy, choice) = match &p.schedule {
        Some(policy) => (policy.clone(), None),
        None => match choose_s(&tree, p.l, 1..=p.s_max, 0.0) {
            Ok(choice) => (SchedulePolicy::Constant(choice.s), Some(choice)),
            Err(e @ AnalysisError::TooFewRadii { .. }) => {
                return Err(UsageError(format!(
                    "cannot choose s automatically at N = {}: {e}; pass --s or a larger --N",
                    p.n
                ))
                .into())
            }
            Err(e) => return Err(e.into()),
        },
    };
    let gamma = assemble(tree, &policy, p.l)?;
    Ok(Built { gamma, choice })
}

pub(crate) fn describe(report: &mut Report, built: &Built) {
    let g = &built.gamma;
    report.value("N", g.tree.ray_length);
    report.value("L", g.boundary_length);
    report.value("schedule", serde_json::to_value(&g.policy).expect("policy serializes"));
    if let SchedulePolicy::Constant(s) = g.policy {
        report.value("s", s);
    }
    report.value("vertices", g.graph.vertex_count());
    report.value("edges", g.graph.edge_count());
    report.value("faces", g.faces.len());
}

pub fn run_build(p: &Params, out: &mut OutDir, report: &mut Report) -> Result<Built> {
    let built = build_gamma(p)?;
    describe(report, &built);
    let g = &built.gamma;
    let contract = contract_report(g);
    let signs = sign_report(g);
    let sigma = sigma_report(g)?;
    out.write(
        "graph.json",
        GraphDump::with_faces(&g.graph, g.faces.records.clone()).to_json(),
    )?;
    out.write("tree.json", g.tree.to_json())?;
    out.write_json(
        "contract.json",
        &json!({
            "contract": contract,
            "signs": signs,
            "sigma": {
                "pairs": sigma.pairs.len(),
                "injective": sigma.injective,
                "distances_equal_s": sigma.distances_equal_s,
            },
        }),
    )?;
    report.value("positives", signs.positives);
    report.value("negatives", signs.negatives);
    report.value("zeros", signs.zeros);
    report.check(
        "contract",
        contract.passed(),
        format!(
            "{} violations, {} unlabeled faces, {} leaves without two 2-gons",
            contract.violations.len(),
            contract.unlabeled_faces,
            contract.bad_leaves.len()
        ),
    );
    report.check(
        "positive excess only on 2-gons",
        signs.positive_off_digon.is_empty(),
        format!("{} positive vertices off a 2-gon", signs.positive_off_digon.len()),
    );
    report.check(
        "every pants has a negative vertex",
        signs.pants_without_negative.is_empty(),
        format!(
            "{} of {} pants without one",
            signs.pants_without_negative.len(),
            signs.pants_checked
        ),
    );
    report.check(
        "sigma injective",
        sigma.injective,
        format!("{} positive vertices", sigma.pairs.len()),
    );
    report.check(
        "d(w, sigma(w)) = s(w)",
        sigma.distances_equal_s,
        format!("{} pairs", sigma.pairs.len()),
    );
    Ok(built)
}

pub fn run_export(p: &Params, format: ExportFormat, out: &mut OutDir, report: &mut Report) -> Result<()> {
    let built = build_gamma(p)?;
    describe(report, &built);
    let g = &built.gamma;
    if matches!(format, ExportFormat::Dot | ExportFormat::Both) {
        out.write("graph.dot", to_dot(&g.graph))?;
    }
    if matches!(format, ExportFormat::Json | ExportFormat::Both) {
        out.write(
            "graph.json",
            GraphDump::with_faces(&g.graph, g.faces.records.clone()).to_json(),
        )?;
    }
    Ok(())
}
