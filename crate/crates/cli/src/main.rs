mod args;
mod artifacts;
mod commands;
mod config;
mod report;

use std::process::ExitCode;

use anyhow::Result;
use clap::Parser;

use args::{Cli, Command, GraphArgs, OutputArgs, SurfaceArgs};
use artifacts::OutDir;
use config::{Params, RunConfig};
use report::Report;

/// Invalid parameters; reported with exit code 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

fn resolve(
    output: &OutputArgs,
    graph: Option<&GraphArgs>,
    surface: Option<&SurfaceArgs>,
) -> Result<Params, UsageError> {
    let mut p = Params::default();
    if let Some(g) = graph {
        p.apply_graph_flags(g);
    }
    if let Some(s) = surface {
        p.apply_surface_flags(s);
    }
    if let Some(path) = &output.config {
        p.apply_config(&RunConfig::load(path)?);
    }
    p.validate()?;
    Ok(p)
}

fn run(cli: Cli) -> Result<(Report, OutDir)> {
    let mut report = Report::default();
    let (output, params) = match &cli.command {
        Command::Build(c) | Command::Excess(c) | Command::Type(c) => {
            (&c.output, resolve(&c.output, Some(&c.graph), None)?)
        }
        Command::Export(c) => (&c.output, resolve(&c.output, Some(&c.graph), None)?),
        Command::Surface(c) => (&c.output, resolve(&c.output, None, Some(&c.surface))?),
        Command::All(c) => {
            let surface = SurfaceArgs {
                rmax: c.surface_rmax,
                grid: c.grid,
                h: c.h,
            };
            (&c.output, resolve(&c.output, Some(&c.graph), Some(&surface))?)
        }
    };
    let mut out = OutDir::create(&output.out, output.emit_plots)?;
    match &cli.command {
        Command::Build(_) => {
            commands::run_build(&params, &mut out, &mut report)?;
        }
        Command::Excess(_) => {
            let built = commands::build_gamma(&params)?;
            commands::describe(&mut report, &built);
            commands::run_excess(&params, &built, &mut out, &mut report)?;
        }
        Command::Type(_) => {
            let built = commands::build_gamma(&params)?;
            commands::describe(&mut report, &built);
            commands::run_recurrence(&params, &built, &mut out, &mut report)?;
        }
        Command::Surface(_) => commands::run_surface(&params, &mut out, &mut report)?,
        Command::All(_) => {
            let built = commands::run_build(&params, &mut out, &mut report)?;
            commands::run_excess(&params, &built, &mut out, &mut report)?;
            commands::run_recurrence(&params, &built, &mut out, &mut report)?;
            commands::run_surface(&params, &mut out, &mut report)?;
        }
        Command::Export(c) => commands::run_export(&params, c.format, &mut out, &mut report)?,
    }
    out.write_json("summary.json", &report)?;
    Ok((report, out))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok((report, out)) => {
            print!("{}", report.render());
            for path in out.written() {
                println!("wrote {}", path.display());
            }
            match report.first_failure() {
                Some(c) => {
                    eprintln!("assertion failed: {}: {}", c.name, c.detail);
                    ExitCode::from(1)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) if e.is::<UsageError>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
