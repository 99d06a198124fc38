use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use speiser_core::gamma::SchedulePolicy;

#[derive(Debug, Parser)]
#[command(
    name = "speiser",
    version,
    about = "Speiser graph with negative mean excess, and the surface Y"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Assemble a truncation and check its structural contract.
    Build(GraphCmd),
    /// Ball statistics, growth fit, choice of s and the mean excess.
    Excess(GraphCmd),
    /// Recurrence diagnostics: cutsets, effective resistance, random walks.
    Type(GraphCmd),
    /// Distances, ball areas and integrated curvature of the surface.
    Surface(SurfaceCmd),
    /// Every analysis above, into one output directory.
    All(AllCmd),
    /// Write the assembled graph as DOT and/or JSON.
    Export(ExportCmd),
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// Ray length of the pruned tree.
    #[arg(long = "N", value_parser = clap::value_parser!(u32).range(1..=16))]
    pub n: Option<u32>,
    /// Length of every pasting circle (even, at least 4).
    #[arg(long = "L", value_parser = parse_boundary_length)]
    pub l: Option<usize>,
    /// Constant number of concentric circles per leaf; chosen automatically when omitted.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=64))]
    pub s: Option<u32>,
    /// `constant` (uses --s) or `banded:S0:BAND`.
    #[arg(long, value_parser = parse_schedule)]
    pub schedule: Option<ScheduleArg>,
    /// Largest ball radius reported.
    #[arg(long)]
    pub rmax: Option<u32>,
    /// Tail window of trusted radii for the upper/lower mean estimates.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub window: Option<u32>,
    /// Largest allowed max - min of the mean excess over the tail window.
    #[arg(long)]
    pub mean_tolerance: Option<f64>,
    /// Seed of the random-walk streams.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output directory.
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
    /// JSON run configuration; its fields override the flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Also write gnuplot-ready `.dat` files.
    #[arg(long)]
    pub emit_plots: bool,
}

#[derive(Debug, Args)]
pub struct GraphCmd {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SurfaceArgs {
    /// Largest radius of the surface grid.
    #[arg(long = "rmax", value_parser = parse_positive)]
    pub rmax: Option<f64>,
    /// Number of radii, evenly spaced up to --rmax.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=4096))]
    pub grid: Option<u32>,
    /// Cell size of the grid oracle used to validate the distances.
    #[arg(long, value_parser = parse_positive)]
    pub h: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SurfaceCmd {
    #[command(flatten)]
    pub surface: SurfaceArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct AllCmd {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Largest radius of the surface grid.
    #[arg(long = "surface-rmax", value_parser = parse_positive)]
    pub surface_rmax: Option<f64>,
    /// Number of surface radii.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=4096))]
    pub grid: Option<u32>,
    /// Cell size of the grid oracle.
    #[arg(long, value_parser = parse_positive)]
    pub h: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Json,
    Both,
}

#[derive(Debug, Args)]
pub struct ExportCmd {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, value_enum, default_value_t = ExportFormat::Both)]
    pub format: ExportFormat,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScheduleArg {
    Constant,
    Banded { s0: usize, band: usize },
}

impl ScheduleArg {
    pub fn policy(&self, s: Option<u32>) -> Option<SchedulePolicy> {
        match self {
            ScheduleArg::Constant => s.map(|s| SchedulePolicy::Constant(s as usize)),
            ScheduleArg::Banded { s0, band } => Some(SchedulePolicy::Banded(*s0, *band)),
        }
    }
}

fn parse_boundary_length(s: &str) -> Result<usize, String> {
    let l: usize = s.parse().map_err(|e| format!("{e}"))?;
    if l < 4 || !l.is_multiple_of(2) {
        return Err(format!("{l} is not an even number >= 4"));
    }
    Ok(l)
}

fn parse_schedule(s: &str) -> Result<ScheduleArg, String> {
    if s == "constant" {
        return Ok(ScheduleArg::Constant);
    }
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        ["banded", s0, band] => {
            let s0: usize = s0.parse().map_err(|e| format!("s0: {e}"))?;
            let band: usize = band.parse().map_err(|e| format!("band: {e}"))?;
            if s0 == 0 || band == 0 {
                return Err("banded schedule needs s0 >= 1 and band >= 1".into());
            }
            Ok(ScheduleArg::Banded { s0, band })
        }
        _ => Err(format!(
            "unknown schedule `{s}`; expected `constant` or `banded:S0:BAND`"
        )),
    }
}

fn parse_positive(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(v.is_finite() && v > 0.0) {
        return Err(format!("{s} is not a positive number"));
    }
    Ok(v)
}
