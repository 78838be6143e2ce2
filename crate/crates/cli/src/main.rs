use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod bench;
mod certify;
mod eval;
mod invert;
mod output;
mod table;

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "erf4")]
#[command(version, about = "Invertible 4-decimal approximations of erf, erfc, Phi and Q")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an approximation next to the reference value.
    Eval {
        /// erf, erfc, phi or q
        function: erf4::Target,
        variant: EvalVariant,
        /// Abscissae to evaluate.
        #[arg(allow_negative_numbers = true)]
        xs: Vec<f64>,
        /// Evaluate on a uniform grid lo:hi instead.
        #[arg(long, value_parser = output::parse_range, allow_hyphen_values = true)]
        grid: Option<(f64, f64)>,
        /// Number of grid points.
        #[arg(long, default_value_t = 11)]
        grid_count: usize,
    },
    /// Invert an approximation.
    Invert {
        /// erf, erfc, phi or q
        function: erf4::Target,
        #[arg(allow_negative_numbers = true, required = true)]
        ys: Vec<f64>,
        /// Follow the closed form with one Newton step.
        #[arg(long)]
        polish: bool,
    },
    /// Check every published bound and constant; exit 1 if any fails.
    Certify {
        /// Points per dense scan over [0, 8].
        #[arg(long, default_value_t = 1_000_001)]
        grid_count: usize,
    },
    /// Print the table of formulas, bounds and crossover constants.
    Table,
    /// Time the approximations, the inverse and the oracle.
    Bench {
        /// Evaluations per function (at least 10000).
        n: usize,
        /// Size of the cycled input batch.
        #[arg(long, default_value_t = 1024)]
        batch: usize,
        /// Seed of the input sequence.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EvalVariant {
    Improved,
    Winitzki,
    Clamped,
    Oracle,
}

/// Failure modes mapped onto the exit-code contract.
#[derive(Debug)]
pub enum CliError {
    /// Exit 2.
    Usage(String),
    /// Exit 1.
    Failed(String),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failed(format!("i/o error: {e}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Failed(format!("csv error: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Failed(format!("json error: {e}"))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let format = cli.format;
    match cli.command {
        Command::Eval {
            function,
            variant,
            xs,
            grid,
            grid_count,
        } => eval::run(format, function, variant, xs, grid, grid_count),
        Command::Invert {
            function,
            ys,
            polish,
        } => invert::run(format, function, &ys, polish),
        Command::Certify { grid_count } => certify::run(format, grid_count),
        Command::Table => table::run(format),
        Command::Bench { n, batch, seed } => bench::run(format, n, batch, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed(msg)) => {
            eprintln!("erf4: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("erf4: {msg}");
            ExitCode::from(2)
        }
    }
}
