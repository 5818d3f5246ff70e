//! `banddet`: determinants of banded Toeplitz matrices from the command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 invalid spec,
//! 3 verification mismatch.

mod bench;
mod closed;
mod commands;
mod error;
mod nlist;
mod report;
mod spec_io;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use banddet::{BandSpec, ScalarMode, Strategy};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{CliError, CliResult};

#[derive(Parser, Debug)]
#[command(name = "banddet", version, about = "Determinants of banded Toeplitz matrices in O(log n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// det(T_n) for one or more n.
    Det(DetArgs),
    /// det(T_n - λI) for a list of λ.
    Charpoly(CharpolyArgs),
    /// Closed forms: Lucas sequences (tridiagonal) or root formulas (pentadiagonal).
    Closed(ClosedArgs),
    /// Randomized agreement check: fast path, dense Bareiss and the reduction chain.
    Verify(VerifyArgs),
    /// Timing and operation counts in a prime field, as CSV.
    Bench(BenchArgs),
}

#[derive(Args, Debug, Clone, Default)]
pub struct SpecArgs {
    /// Number of superdiagonals.
    #[arg(long)]
    s: Option<usize>,
    /// Number of subdiagonals.
    #[arg(long)]
    r: Option<usize>,
    /// a_0,...,a_(s+r): diagonal, then superdiagonals outward, then subdiagonals outward.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// JSON file {"s": .., "r": .., "coeffs": [..]} instead of the inline flags.
    #[arg(long, conflicts_with_all = ["s", "r", "coeffs"])]
    spec: Option<PathBuf>,
}

impl SpecArgs {
    fn is_given(&self) -> bool {
        self.spec.is_some() || self.s.is_some() || self.r.is_some() || self.coeffs.is_some()
    }

    pub fn load(&self) -> CliResult<BandSpec> {
        match &self.spec {
            Some(path) => spec_io::read_spec_file(path),
            None => spec_io::spec_from_flags(self.s, self.r, self.coeffs.as_deref()),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Rational,
    Float,
    Prime,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrategyArg {
    Auto,
    Dense,
    Polymod,
}

impl StrategyArg {
    pub fn strategy(self) -> Strategy {
        match self {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Dense => Strategy::Dense,
            StrategyArg::Polymod => Strategy::PolyMod,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            StrategyArg::Auto => "auto",
            StrategyArg::Dense => "dense",
            StrategyArg::Polymod => "polymod",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatArg {
    Plain,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct ModeArgs {
    /// Arithmetic: exact rationals, overflow-safe floats, or integers mod a prime.
    #[arg(long, value_enum, default_value = "rational")]
    mode: ModeArg,
    /// Modulus for --mode prime.
    #[arg(long, default_value_t = 1_000_000_007)]
    prime: u64,
    #[arg(long, value_enum, default_value = "auto")]
    strategy: StrategyArg,
    #[arg(long, value_enum, default_value = "plain")]
    format: FormatArg,
}

impl ModeArgs {
    pub fn scalar_mode(&self) -> CliResult<ScalarMode> {
        let mode = match self.mode {
            ModeArg::Rational => ScalarMode::ExactRational,
            ModeArg::Float => ScalarMode::ScaledFloat,
            ModeArg::Prime => ScalarMode::PrimeField(self.prime),
        };
        Ok(mode.validate()?)
    }
}

#[derive(Args, Debug)]
pub struct DetArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Size: N, a list N1,N2,..., or a range A..B / A..=B (2^k accepted).
    #[arg(long)]
    n: String,
    #[command(flatten)]
    mode: ModeArgs,
}

#[derive(Args, Debug)]
pub struct CharpolyArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long)]
    n: String,
    /// Comma-separated shifts, exact ("-7/2") or decimal.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[command(flatten)]
    mode: ModeArgs,
}

#[derive(Args, Debug)]
pub struct ClosedArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Roots of ch_C with multiplicities, e.g. 2:2,3,5 (pentadiagonal only).
    #[arg(long, allow_hyphen_values = true)]
    roots: Option<String>,
    /// The coefficient a_2 when no spec is given (default 1).
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["s", "r", "coeffs", "spec"])]
    c: Option<String>,
    #[arg(long)]
    n: String,
    #[command(flatten)]
    mode: ModeArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    k_min: usize,
    #[arg(long, default_value_t = 6)]
    k_max: usize,
    #[arg(long, default_value_t = 60)]
    n_max: usize,
    /// Negate every fast-path result, to check that mismatches are caught.
    #[arg(long)]
    sabotage: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchStrategy {
    All,
    Dense,
    Polymod,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Bandwidth of the built-in band when no spec is given.
    #[arg(long, default_value_t = 4)]
    k: usize,
    #[arg(long, default_value = "1,2^10,2^20,2^30")]
    n: String,
    /// Timed repetitions per row; the median is reported.
    #[arg(long, default_value_t = 21)]
    reps: usize,
    #[arg(long, value_enum, default_value = "all")]
    strategy: BenchStrategy,
    #[arg(long, default_value_t = 1_000_000_007)]
    prime: u64,
}

fn run(cli: Cli) -> CliResult<()> {
    let stdout = &mut std::io::stdout().lock();
    match cli.command {
        Command::Det(args) => commands::run_det(&args, stdout),
        Command::Charpoly(args) => commands::run_charpoly(&args, stdout),
        Command::Closed(args) => closed::run_closed(&args, stdout),
        Command::Verify(args) => verify::run_verify(&args, stdout),
        Command::Bench(args) => bench::run_bench(&args, stdout),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code() as u8)
        }
    }
}

pub(crate) fn write_line(out: &mut impl std::io::Write, line: &str) -> CliResult<()> {
    writeln!(out, "{line}").map_err(|e| CliError::usage(format!("write failed: {e}")))
}
