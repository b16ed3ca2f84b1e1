//! Command-line verification harness: runs the identity suites over
//! parameter grids and computes bilinear covariants for user-supplied
//! spinors, emitting deterministic JSON or CSV reports.
//!
//! Exit codes: 0 when every case passes, 1 when any residual exceeds the
//! tolerance (or a computed state has no helicity), 2 on configuration or
//! parse errors.

mod compute;
mod parse;
mod report;
mod suites;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use compute::run_compute;
use parse::parse_spinor;
use suites::{RunConfig, Suite};

#[derive(Parser)]
#[command(
    name = "helicity",
    about = "Verify Clifford-algebra helicity identities and compute bilinear covariants",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ComputeFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Commands {
    /// Run a verification suite over the configured grid and seeds
    Verify {
        /// Suite to run
        #[arg(value_enum)]
        suite: Suite,
        /// Number of polar grid points, endpoints included
        #[arg(long, default_value_t = 64)]
        grid_theta: usize,
        /// Number of azimuthal grid points on the half-open circle
        #[arg(long, default_value_t = 64)]
        grid_phi: usize,
        /// Number of phase-offset samples (includes 0; includes pi when even)
        #[arg(long, default_value_t = 8)]
        delta_phi_samples: usize,
        /// Base seed for the random spinor and wavevector batches
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Residual tolerance for a case to pass
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
        /// Report format
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// Write the report to this path instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the bilinear covariants, slash matrices and helicity of a spinor
    Compute {
        /// Four comma-separated complex components, e.g. "0.5+0.5i, 0, 0.5-0.5i, 0"
        #[arg(long)]
        spinor: String,
        /// Output format
        #[arg(long, value_enum, default_value_t = ComputeFormat::Text)]
        format: ComputeFormat,
        /// Acceptance tolerance for the helicity residual
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
        /// Write the output to this path instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Commands::Verify {
            suite,
            grid_theta,
            grid_phi,
            delta_phi_samples,
            seed,
            tolerance,
            format,
            out,
        } => {
            let cfg = RunConfig {
                suite,
                grid_theta,
                grid_phi,
                delta_phi_samples,
                seed,
                tolerance,
            };
            cfg.validate()?;
            let report = suites::run(&cfg);
            let rendered = match format {
                ReportFormat::Json => report.to_json(),
                ReportFormat::Csv => report.to_csv(),
            };
            emit(&rendered, out.as_deref())?;
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Commands::Compute {
            spinor,
            format,
            tolerance,
            out,
        } => {
            if tolerance <= 0.0 || !tolerance.is_finite() {
                return Err(format!("tolerance must be positive, got {tolerance}"));
            }
            let psi = parse_spinor(&spinor).map_err(|e| e.to_string())?;
            let outcome = run_compute(&psi, tolerance, format == ComputeFormat::Json);
            emit(&outcome.rendered, out.as_deref())?;
            Ok(if outcome.accepted {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn emit(rendered: &str, out: Option<&std::path::Path>) -> Result<(), String> {
    match out {
        Some(path) => {
            fs::write(path, rendered).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}
