//! `spectral-gap`: eigenvalues of -Delta + V on intervals and convex
//! polygons under Neumann/Dirichlet/mixed boundary conditions, plus
//! verification of the eigenvalue-ordering properties that potential
//! structure (monotonicity, convexity, symmetry) implies.

mod commands;
mod config;
mod fmt;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Solver(spectral_core::SpectralError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolverChoice {
    Analytic,
    Fd,
}

#[derive(Parser)]
#[command(
    name = "spectral-gap",
    version,
    about = "Neumann/Dirichlet spectra of 1D and 2D Schroedinger operators and \
             eigenvalue-ordering verdicts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce the reference step-potential eigenvalue table and compare
    /// it cell by cell against the published digits
    Table1 {
        #[arg(long, value_enum, default_value_t = SolverChoice::Analytic)]
        solver: SolverChoice,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// First K eigenvalues of a 1D problem (config: domain, potential, bc)
    Spectrum1d {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = SolverChoice::Fd)]
        solver: SolverChoice,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// First K eigenvalues of a 2D problem on a convex polygon
    Spectrum2d {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        mesh_level: Option<u32>,
        /// Write the mesh as an OFF file for inspection
        #[arg(long)]
        export_mesh: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// 1D ordering verdicts for a list of potentials (mixed-BC comparison,
    /// symmetric mu_2/lambda_1 ordering, doubled-symmetry extension)
    Verify1d {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// 2D ordering verdicts (index-shift and concave-potential bounds)
    Verify2d {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        mesh_level: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Trace the gap curves g_k(tau) = lambda_k(tau V) - mu_{k+1}(tau V)
    Flow {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mixed-problem eigenfunction-quotient diagnostic
    Quotient {
        #[arg(long)]
        config: PathBuf,
        /// Seed for the eigenfunction start vectors
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Table1 {
            solver,
            format,
            out,
        } => commands::cmd_table1(solver, format, out),
        Command::Spectrum1d {
            config,
            k,
            tol,
            solver,
            format,
            out,
        } => commands::cmd_spectrum1d(config::load(&config)?, k, tol, solver, format, out),
        Command::Spectrum2d {
            config,
            k,
            mesh_level,
            export_mesh,
            format,
            out,
        } => commands::cmd_spectrum2d(
            config::load(&config)?,
            k,
            mesh_level,
            export_mesh,
            format,
            out,
        ),
        Command::Verify1d {
            config,
            format,
            out,
        } => commands::cmd_verify1d(config::load(&config)?, format, out),
        Command::Verify2d {
            config,
            k,
            mesh_level,
            format,
            out,
        } => commands::cmd_verify2d(config::load(&config)?, k, mesh_level, format, out),
        Command::Flow {
            config,
            format,
            out,
        } => commands::cmd_flow(config::load(&config)?, format, out),
        Command::Quotient {
            config,
            seed,
            format,
            out,
        } => commands::cmd_quotient(config::load(&config)?, seed, format, out),
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(CliError::Config(msg)) => {
            eprintln!("config error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Solver(e)) => {
            eprintln!("solver error: {e}");
            ExitCode::from(3)
        }
    }
}
