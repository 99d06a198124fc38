use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use speiser_core::planar::GraphDump;

fn speiser(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_speiser"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    let mut all = args.to_vec();
    all.extend(["--out", dir.to_str().unwrap()]);
    speiser(&all)
}

fn summary(dir: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(dir.join("summary.json")).unwrap()).unwrap()
}

fn listing(dir: &Path) -> Vec<String> {
    let mut names: Vec<String> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    names
}

#[test]
fn usage_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["excess", "--N", "0"],
        vec!["build", "--L", "7"],
        vec!["build", "--schedule", "zigzag"],
        vec!["surface", "--rmax", "-1"],
        vec!["frobnicate"],
    ] {
        let out = run_in(dir.path(), &args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    let cfg = dir.path().join("bad.json");
    fs::write(&cfg, r#"{"N": 0}"#).unwrap();
    let out = run_in(dir.path(), &["build", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    fs::write(&cfg, r#"{"N": 4, "colour": "blue"}"#).unwrap();
    let out = run_in(dir.path(), &["build", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn small_n_without_s_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["excess", "--N", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--s"));
}

#[test]
fn unwritable_output_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, "x").unwrap();
    let out = run_in(&blocker, &["build", "--N", "2", "--s", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn build_writes_a_loadable_graph() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["build", "--N", "8", "--L", "8", "--s", "3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let dump = GraphDump::from_json(&fs::read_to_string(dir.path().join("graph.json")).unwrap()).unwrap();
    let g = dump.into_graph().unwrap();
    let s = summary(dir.path());
    assert_eq!(s["values"]["vertices"], g.vertex_count());
    assert_eq!(s["values"]["s"], 3);
    assert!(s["checks"].as_array().unwrap().iter().all(|c| c["holds"] == true));
    let tree: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("tree.json")).unwrap()).unwrap();
    assert_eq!(tree["ray_length"], 8);
    assert_eq!(
        listing(dir.path()),
        ["contract.json", "graph.json", "summary.json", "tree.json"]
    );
}

#[test]
fn config_overrides_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    fs::write(&cfg, r#"{"N": 3, "L": 6, "schedule": {"constant": 2}}"#).unwrap();
    let out = run_in(
        dir.path(),
        &["build", "--N", "9", "--s", "5", "--config", cfg.to_str().unwrap()],
    );
    assert!(out.status.success());
    let s = summary(dir.path());
    assert_eq!(s["values"]["N"], 3);
    assert_eq!(s["values"]["L"], 6);
    assert_eq!(s["values"]["s"], 2);
}

#[test]
fn banded_schedule_flag() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["build", "--N", "6", "--schedule", "banded:1:2"]);
    assert!(out.status.success());
    assert_eq!(
        summary(dir.path())["values"]["schedule"],
        serde_json::json!({"banded": [1, 2]})
    );
}

#[test]
fn excess_csv_columns_and_plots() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["excess", "--N", "12", "--s", "2", "--emit-plots"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = fs::read_to_string(dir.path().join("mean_excess.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("r,n_vertices,total_excess_num,total_excess_den,mean_excess,clipped")
    );
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(first[..4], ["0", "1", "-1", "3"]);
    for name in ["mean_excess.dat", "growth.dat"] {
        assert!(dir.path().join(name).exists(), "{name}");
    }
    let s = summary(dir.path());
    let a = s["values"]["a"].as_f64().unwrap();
    assert!(a > 1.0);
    let detail: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("excess.json")).unwrap()).unwrap();
    assert_eq!(detail["growth_fit"]["a"].as_f64(), Some(a));
    assert_eq!(detail["epsilon"], s["values"]["epsilon"]);
}

#[test]
fn plots_only_on_request() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["excess", "--N", "10", "--s", "2"]);
    assert!(out.status.success());
    assert!(listing(dir.path()).iter().all(|n| !n.ends_with(".dat")));
}

#[test]
fn surface_example() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["surface", "--rmax", "12", "--grid", "24"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = fs::read_to_string(dir.path().join("surface.csv")).unwrap();
    assert_eq!(
        csv.lines().next(),
        Some("r,length_beta_r,area_P,area_Q,curvature_integral,ratio")
    );
    assert_eq!(csv.lines().count(), 25);
    let eps = summary(dir.path())["values"]["surface_epsilon"].as_f64().unwrap();
    assert!(eps > 0.0);
}

#[test]
fn type_reports_resistance() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["type", "--N", "8", "--s", "2", "--seed", "7"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let s = summary(dir.path());
    let series: Vec<f64> = s["values"]["R_eff"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    assert!(series.windows(2).all(|w| w[1] > w[0]));
    let csv = fs::read_to_string(dir.path().join("resistance.csv")).unwrap();
    assert_eq!(csv.lines().count(), series.len() + 1);
}

#[test]
fn export_formats() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["export", "--N", "3", "--s", "1", "--format", "dot"]);
    assert!(out.status.success());
    let dot = fs::read_to_string(dir.path().join("graph.dot")).unwrap();
    assert!(dot.starts_with("graph speiser {"));
    assert!(!dir.path().join("graph.json").exists());
}

#[test]
fn repeated_runs_are_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let args = ["type", "--N", "7", "--s", "2", "--emit-plots"];
    assert!(run_in(a.path(), &args).status.success());
    assert!(run_in(b.path(), &args).status.success());
    assert_eq!(listing(a.path()), listing(b.path()));
    for name in listing(a.path()) {
        assert_eq!(
            fs::read(a.path().join(&name)).unwrap(),
            fs::read(b.path().join(&name)).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn mean_tolerance_and_format_tag() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    fs::write(
        &cfg,
        r#"{"format": "speiser-run/1", "N": 12, "schedule": {"banded": [1, 4]}, "mean_tolerance": 1.0}"#,
    )
    .unwrap();
    let out = run_in(dir.path(), &["excess", "--config", cfg.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let s = summary(dir.path());
    assert_eq!(s["format"], "speiser-run/1");
    assert!(s["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["name"] == "mean excess tail spread <= tolerance"));

    let out = run_in(
        dir.path(),
        &["excess", "--N", "12", "--s", "1", "--mean-tolerance", "0"],
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("assertion failed: mean excess tail spread <= tolerance"));

    fs::write(&cfg, r#"{"format": "speiser-run/9"}"#).unwrap();
    assert_eq!(
        run_in(dir.path(), &["build", "--config", cfg.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}
