//! `cosareas` command-line front end.
//!
//! Every subcommand builds a [`RunReport`] and renders it as plain text, CSV
//! or JSON. Output is deterministic; `--no-timing` zeroes the timing fields so
//! repeated runs are byte-identical.

use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

mod commands;
pub mod report;
mod verify;

pub use report::{OutputFormat, RunReport};

pub type BoxError = Box<dyn std::error::Error>;

/// Environment variable capping the worker pool.
pub const THREADS_ENV: &str = "COSAREAS_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "cosareas",
    version,
    about = "Exact and numeric areas between cos^n x and cos^n kx"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t)]
    pub format: OutputFormat,
    /// Report all timings as zero.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact limiting areas A_n.
    Exact(ExactArgs),
    /// Finite-k areas against the limit.
    Converge(ConvergeArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Exponential generating function terms, optionally diffed against a b-file.
    Egf(EgfArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    Recursion,
    DoubleFactorial,
}

#[derive(Debug, Args, Serialize)]
#[command(group(ArgGroup::new("range").required(true).args(["n", "max_n"])))]
pub struct ExactArgs {
    /// A single n.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    /// Every n from 1 to this value.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_n: Option<u64>,
    #[arg(long, value_enum, default_value = "closed-form")]
    pub method: Method,
}

#[derive(Debug, Args, Serialize)]
#[command(group(ArgGroup::new("schedule").required(true).args(["ks", "k_start"])))]
pub struct ConvergeArgs {
    #[arg(long)]
    pub n: u64,
    /// Comma-separated k values.
    #[arg(long, value_delimiter = ',', conflicts_with = "k_start")]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ks: Option<Vec<u64>>,
    /// First k of a geometric schedule.
    #[arg(long, requires_all = ["k_factor", "k_count"])]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_start: Option<u64>,
    /// Ratio between consecutive k (> 1); each k is rounded.
    #[arg(long, requires = "k_start")]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_factor: Option<f64>,
    #[arg(long, requires = "k_start")]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_count: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Identities,
    Cq,
    Egf,
    CrossMethod,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sequence {
    Arcsin,
    A296726,
    A372324,
}

#[derive(Debug, Args, Serialize)]
pub struct EgfArgs {
    #[arg(long, value_enum)]
    pub which: Sequence,
    #[arg(long)]
    pub max_n: usize,
    /// Compare indices up to max-n against this b-file.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bfile: Option<PathBuf>,
}

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    VerificationFailed,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::VerificationFailed => 1,
        }
    }
}

/// The parameter echo: the subcommand's arguments plus the global flags.
#[derive(Debug, Serialize)]
pub struct Params<'a, A> {
    #[serde(flatten)]
    pub args: &'a A,
    pub format: OutputFormat,
    pub no_timing: bool,
}

/// Sizes the global worker pool from [`THREADS_ENV`] if it is set.
pub fn configure_threads() -> Result<(), BoxError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()?;
    Ok(())
}

/// Runs the parsed command, writing data to `out`. Errors are usage errors.
pub fn run(cli: &Cli, out: &mut impl Write) -> Result<Outcome, BoxError> {
    let ctx = commands::Context {
        format: cli.format,
        no_timing: cli.no_timing,
    };
    match &cli.command {
        Command::Exact(args) => commands::exact(&ctx, args, out),
        Command::Converge(args) => commands::converge(&ctx, args, out),
        Command::Verify(args) => verify::run(&ctx, args, out),
        Command::Egf(args) => commands::egf(&ctx, args, out),
    }
}
