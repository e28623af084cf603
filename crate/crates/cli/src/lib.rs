//! `isc` command-line front end.
//!
//! Exit codes: 0 success, 1 invalid parameters or usage, 2 verification
//! mismatch.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

mod commands;
pub mod report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "isc",
    version,
    about = "Wiener index and average distance of ISC(p, q, m, n)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute W and mu for one tuple by one or all methods.
    Compute(ComputeArgs),
    /// Evaluate the H, T or BT family formulas and cross-check them.
    Family(FamilyArgs),
    /// Dump cut records as CSV.
    Cuts(CutsArgs),
    /// Compare all methods over a parameter sweep.
    Verify(VerifyArgs),
    /// Write the graph as an adjacency list, DOT, or its distance distribution.
    Export(ExportArgs),
    /// Time each method.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ParamArgs {
    #[arg(long = "p", allow_negative_numbers = true)]
    pub p: i64,
    #[arg(long = "q", allow_negative_numbers = true)]
    pub q: i64,
    #[arg(long = "m", allow_negative_numbers = true)]
    pub m: i64,
    #[arg(long = "n", allow_negative_numbers = true)]
    pub n: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// bfs, cuts, tables, closed, or all
    #[arg(long, default_value = "all")]
    pub method: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ReportFormat,
    /// Significant digits of the decimal average distance.
    #[arg(long, default_value_t = 12)]
    pub precision: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "which")]
pub struct FamilyChoice {
    /// H(P)
    #[arg(long, value_name = "P", allow_negative_numbers = true)]
    pub hex: Option<i64>,
    /// T(N, P)
    #[arg(long, num_args = 2, value_names = ["N", "P"], allow_negative_numbers = true)]
    pub trap: Option<Vec<i64>>,
    /// BT(N, P, Q)
    #[arg(long, num_args = 3, value_names = ["N", "P", "Q"], allow_negative_numbers = true)]
    pub bitrap: Option<Vec<i64>>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[command(flatten)]
    pub family: FamilyChoice,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ReportFormat,
    #[arg(long, default_value_t = 12)]
    pub precision: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CutSource {
    Geometric,
    Tables,
    /// Θ*-classes of the Djoković–Winkler relation (quadratic in |E|).
    Theta,
}

#[derive(Debug, Args)]
pub struct CutsArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, default_value = "geometric")]
    pub source: CutSource,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 14)]
    pub max_n: u64,
    #[arg(long, default_value_t = 6)]
    pub max_m: u64,
    /// Also check the Θ* partition against the strip partition.
    #[arg(long)]
    pub theta: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Adjlist,
    Dot,
    /// Distance distribution CSV (`d,count`).
    Distances,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, default_value = "adjlist")]
    pub format: GraphFormat,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = 5)]
    pub repeat: usize,
    #[arg(long, default_value = "all")]
    pub method: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ReportFormat,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Invalid(#[from] isc_core::IscError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => EXIT_MISMATCH,
            _ => EXIT_INVALID,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{rendered}")
            } else {
                write!(stdout, "{rendered}")
            };
            return code;
        }
    };
    match commands::dispatch(&cli.command, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
