//! `stepmom` — spectral solver CLI for quantum wells with Hermitian and
//! PT-symmetric step momentum operators.
//!
//! Subcommands: `spectrum`, `density`, `curve`, `critical`, `reproduce`,
//! `znojil`. Exit codes: 0 success, 1 computation or absence failure,
//! 2 usage error.

mod commands;
mod config;
mod fixtures;
mod manifest;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use stepmom::Mode;

#[derive(Parser)]
#[command(
    name = "stepmom",
    version,
    about = "Bound states of a quantum well with a step momentum operator",
    propagate_version = true
)]
struct Cli {
    /// Solver tolerance configuration file (TOML key = value); when
    /// absent, the STEPMOM_CONFIG environment variable is consulted.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the bound-state energy table E_n/E0
    Spectrum(SpectrumArgs),
    /// Sample one state's wavefunction and probability density
    Density(DensityArgs),
    /// Sample characteristic curves over an eta grid (figure data)
    Curve(CurveArgs),
    /// Locate the critical step height where PT real-energy states vanish
    Critical(CriticalArgs),
    /// Regenerate the reference tables and figure datasets, with a
    /// comparison report against the built-in published values
    Reproduce(ReproduceArgs),
    /// Map parameters between the step-momentum well and the
    /// non-Hermitian square well
    Znojil(ZnojilArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Hermitian,
    Pt,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Hermitian => Mode::Hermitian,
            ModeArg::Pt => Mode::PtSymmetric,
        }
    }
}

impl ModeArg {
    pub fn as_str(self) -> &'static str {
        match self {
            ModeArg::Hermitian => "hermitian",
            ModeArg::Pt => "pt",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
pub struct SpectrumArgs {
    /// Step flavour: hermitian (real step) or pt (imaginary step)
    #[arg(long, value_enum)]
    pub mode: ModeArg,
    /// Step heights, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    pub mu0: Vec<f64>,
    /// Number of states per step height
    #[arg(long, default_value_t = 3)]
    pub states: usize,
    /// Output file; stdout when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Args)]
pub struct DensityArgs {
    #[arg(long, value_enum)]
    pub mode: ModeArg,
    #[arg(long)]
    pub mu0: f64,
    /// State index n = 1, 2, ...
    #[arg(long)]
    pub state: u32,
    /// Number of sample points across the well
    #[arg(long, default_value_t = 2001)]
    pub grid: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct CurveArgs {
    #[arg(long, value_enum)]
    pub mode: ModeArg,
    #[arg(long, value_delimiter = ',', required = true)]
    pub mu0: Vec<f64>,
    /// Upper end of the eta grid
    #[arg(long, value_name = "ETA")]
    pub eta_max: Option<f64>,
    #[arg(long, default_value_t = 2001)]
    pub points: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct CriticalArgs {
    /// Bisection tolerance on the critical step height
    #[arg(long, default_value_t = 1e-4)]
    pub tol: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[allow(clippy::enum_variant_names)]
pub enum ReproduceTarget {
    Tab1,
    Tab2,
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    All,
}

#[derive(Args)]
pub struct ReproduceArgs {
    #[arg(long, value_enum)]
    pub target: ReproduceTarget,
    /// Output directory for datasets and reports
    #[arg(long, default_value = "reproduction")]
    pub out: PathBuf,
}

#[derive(Args)]
pub struct ZnojilArgs {
    /// Square-well energy E_z (pair with --z)
    #[arg(long, requires = "z", conflicts_with_all = ["mu0", "emu"])]
    pub ez: Option<f64>,
    /// Non-Hermiticity measure Z (pair with --ez)
    #[arg(long, requires = "ez")]
    pub z: Option<f64>,
    /// Step height (pair with --emu)
    #[arg(long, requires = "emu")]
    pub mu0: Option<f64>,
    /// Step-momentum energy E_mu (pair with --mu0)
    #[arg(long, requires = "mu0")]
    pub emu: Option<f64>,
}

/// Failures split along the exit-code contract.
pub enum CliError {
    /// Exit 2: bad flag values or configuration.
    Usage(String),
    /// Exit 1: solver failure, absent state, or reproduction mismatch.
    Compute(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
    fn compute(msg: impl Into<String>) -> Self {
        CliError::Compute(msg.into())
    }
}

impl From<stepmom::Error> for CliError {
    fn from(e: stepmom::Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Compute(format!("i/o error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let root_cfg = match config::load_root_config(cli.config.as_deref()) {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let result = match cli.command {
        Command::Spectrum(args) => commands::spectrum::run(&args, &root_cfg),
        Command::Density(args) => commands::density::run(&args, &root_cfg),
        Command::Curve(args) => commands::curve::run(&args, &root_cfg),
        Command::Critical(args) => commands::critical::run(&args, &root_cfg),
        Command::Reproduce(args) => commands::reproduce::run(&args, &root_cfg),
        Command::Znojil(args) => commands::znojil::run(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
