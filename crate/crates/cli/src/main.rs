//! `e0tool`: command-line access to the E0 library.

mod channel_file;
mod commands;
mod error;
mod format;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "e0tool", version, about = "Gallager E0 exponents and their extremal BEC/BSC bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print scalar quantities of one channel.
    Compute(ComputeArgs),
    /// Print the BEC and BSC matched to a channel at `rho0`.
    Match(MatchArgs),
    /// Write E0 and R curves as CSV.
    Curves(CurvesArgs),
    /// Locate and classify the intersections of a BEC and a BSC E0 curve.
    Intersect(IntersectArgs),
    /// Run the randomized verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ChannelSource {
    /// Channel file.
    #[arg(long)]
    channel: Option<PathBuf>,
    /// Binary erasure channel with this erasure probability.
    #[arg(long)]
    bec: Option<f64>,
    /// Binary symmetric channel with this crossover probability.
    #[arg(long)]
    bsc: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    E0,
    Rate,
    Capacity,
    Cutoff,
    E0OverRho,
    Er,
}

#[derive(Debug, Args)]
struct ComputeArgs {
    #[command(flatten)]
    source: ChannelSource,
    #[arg(long, allow_negative_numbers = true)]
    rho: Option<f64>,
    /// Rate in nats for the random-coding exponent.
    #[arg(long)]
    rate: Option<f64>,
    /// Quantities to print; defaults to everything the given flags allow.
    #[arg(long, value_enum, value_delimiter = ',')]
    quantity: Vec<Quantity>,
}

#[derive(Debug, Args)]
struct MatchArgs {
    #[arg(long)]
    channel: PathBuf,
    #[arg(long, allow_negative_numbers = true)]
    rho0: f64,
}

#[derive(Debug, Args)]
struct CurvesArgs {
    #[arg(long)]
    channel: Option<PathBuf>,
    #[arg(long, conflicts_with = "match_rho")]
    bec: Option<f64>,
    #[arg(long, conflicts_with = "match_rho")]
    bsc: Option<f64>,
    /// Take the BEC and BSC columns from the pair matched to `--channel` here.
    #[arg(long, requires = "channel", allow_negative_numbers = true)]
    match_rho: Option<f64>,
    #[arg(long, default_value_t = -0.99, allow_negative_numbers = true)]
    rho_min: f64,
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    rho_max: f64,
    #[arg(long, default_value_t = 200)]
    steps: usize,
    /// Write here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct IntersectArgs {
    #[arg(long)]
    bec: f64,
    #[arg(long)]
    bsc: f64,
    #[arg(long, default_value_t = 40.0)]
    rho_hi: f64,
    #[arg(long, default_value_t = 5e-4)]
    tangency_tol: f64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Theorem1,
    Capacity,
    Corollary1,
    Lemmas,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SummaryFormat {
    Jsonl,
    Csv,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    /// Run trials on one thread.
    #[arg(long)]
    sequential: bool,
    #[arg(long, value_enum, default_value_t = SummaryFormat::Jsonl)]
    format: SummaryFormat,
    /// Write every failure as one JSON object per line to this file.
    #[arg(long)]
    dump: Option<PathBuf>,
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Compute(a) => {
            let ch = commands::load_source(a.source.channel.as_deref(), a.source.bec, a.source.bsc)?;
            commands::compute(out, &ch, a.rho, a.rate, &a.quantity)
        }
        Command::Match(a) => {
            let ch = channel_file::read_channel(&a.channel)?;
            commands::match_pair(out, &ch, a.rho0)
        }
        Command::Curves(a) => {
            let columns = commands::CurveColumns {
                channel: a.channel.as_deref().map(channel_file::read_channel).transpose()?,
                bec: a.bec,
                bsc: a.bsc,
                match_rho: a.match_rho,
            };
            let grid = commands::rho_grid(a.rho_min, a.rho_max, a.steps)?;
            match a.output {
                Some(path) => {
                    let mut buf = Vec::new();
                    commands::curves(&mut buf, &columns, &grid)?;
                    std::fs::write(&path, buf).map_err(|e| CliError::io(path.display().to_string(), e))
                }
                None => commands::curves(out, &columns, &grid),
            }
        }
        Command::Intersect(a) => commands::intersect(out, a.bec, a.bsc, a.rho_hi, a.tangency_tol, a.format),
        Command::Verify(a) => {
            let opts = commands::VerifyOptions { seed: a.seed, trials: a.trials, parallel: !a.sequential };
            commands::verify(out, a.suite, &opts, a.format, a.dump.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let res = run(cli, &mut out).and_then(|()| out.flush().map_err(|e| CliError::io("<stdout>", e)));
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("e0tool: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
