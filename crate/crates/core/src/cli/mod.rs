//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 parameter-domain
//! violation, 3 resolution failure, 4 verification failure.

mod commands;
pub mod config;
pub mod expr;
pub mod output;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;

pub use config::{FileConfig, Format, Modes, Oracle, RunConfig};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{0}")]
    Solver(#[from] Error),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Config(_) | CliError::Io(_) => 1,
            CliError::Solver(e) => match e {
                Error::Domain(_) | Error::UnsupportedDegeneracy(_) => 2,
                Error::Resolution(_) | Error::Numeric(_) | Error::Singular(_) => 3,
                Error::Contract(_) => 1,
            },
            CliError::Verification(_) => 4,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "hbdiff", version, about = "Time-fractional degenerate diffusion: eigen, solve, verify, convergence")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eigenvalues and eigenfunctions of -(x^β v')' = λ v.
    Eigen,
    /// Spectral solution with diagnostics.
    Solve,
    /// Spectral solution checked against the finite-difference oracle and
    /// the invariant suites.
    Verify,
    /// Error against mode count and finite-difference mesh size.
    Convergence,
}

#[derive(Debug, Args)]
struct Flags {
    /// TOML configuration file.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    beta: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    alpha: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    theta: Option<f64>,
    /// Initial time.
    #[arg(long = "a", global = true, allow_hyphen_values = true)]
    a: Option<f64>,
    /// Final time.
    #[arg(long = "T", global = true, allow_hyphen_values = true)]
    t_final: Option<f64>,
    /// Mode count or "auto".
    #[arg(long, global = true)]
    modes: Option<Modes>,
    /// Output directory.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[arg(long, global = true, value_enum)]
    oracle: Option<Oracle>,
    /// Tolerance: truncation tolerance for solves, and the threshold of
    /// every check in `verify`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    tol: Option<f64>,
}

impl Flags {
    fn overrides(self) -> FileConfig {
        FileConfig {
            alpha: self.alpha,
            theta: self.theta,
            beta: self.beta,
            a: self.a,
            t_final: self.t_final,
            modes: self.modes,
            out: self.out,
            format: self.format,
            oracle: self.oracle,
            tol: self.tol,
            ..FileConfig::default()
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    let config = cli.flags.config.clone();
    let cfg = RunConfig::load(config.as_deref(), cli.flags.overrides())?;
    match cli.command {
        Command::Eigen => commands::eigen(&cfg),
        Command::Solve => commands::solve(&cfg),
        Command::Verify => commands::verify(&cfg),
        Command::Convergence => commands::convergence(&cfg),
    }
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
