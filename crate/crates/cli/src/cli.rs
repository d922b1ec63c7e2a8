//! Command-line surface: subcommands and their flags.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "chainbench",
    version,
    about = "Generates, runs, and scores instruction-chain benchmarks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Generate a benchmark JSONL file from a generation config.
    Generate(GenerateArgs),
    /// Obtain model responses for a benchmark, live or from a replay file.
    Run(RunArgs),
    /// Score a responses file against its benchmark.
    Evaluate(EvaluateArgs),
    /// Generate one benchmark per (instruction count, target length) pair.
    Matrix(MatrixArgs),
    /// Validate an extension manifest for use with --pool.
    AddInstructions(AddInstructionsArgs),
}

#[derive(Args)]
pub struct GenerateArgs {
    /// Generation config file, TOML or JSON.
    #[arg(long)]
    pub config: PathBuf,
    /// Benchmark JSONL file to write.
    #[arg(long)]
    pub output: PathBuf,
    /// Overrides the config file's seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Extension manifest appended to the built-in instruction pool.
    #[arg(long)]
    pub pool: Option<PathBuf>,
}

#[derive(Args)]
pub struct RunArgs {
    /// Benchmark JSONL file to answer.
    pub benchmark: PathBuf,
    /// Endpoint config file, TOML or JSON.
    #[arg(long, required_unless_present = "replay", conflicts_with = "replay")]
    pub config: Option<PathBuf>,
    /// Responses file to replay instead of contacting an endpoint.
    #[arg(long)]
    pub replay: Option<PathBuf>,
    /// Responses JSONL file to write.
    #[arg(long)]
    pub output: PathBuf,
    /// Overrides the endpoint config's max_in_flight.
    #[arg(long)]
    pub max_in_flight: Option<u32>,
    /// Reject input files written by a different format version.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    pub format_version_check: bool,
}

#[derive(Args)]
pub struct EvaluateArgs {
    /// Benchmark JSONL file the responses answer.
    pub benchmark: PathBuf,
    /// Responses JSONL file to score.
    pub responses: PathBuf,
    /// Report JSON file to write; the CSV export lands next to it.
    #[arg(long)]
    pub output: PathBuf,
    /// Reject input files written by a different format version.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    pub format_version_check: bool,
}

#[derive(Args)]
pub struct MatrixArgs {
    /// Matrix config file, TOML or JSON.
    #[arg(long)]
    pub config: PathBuf,
    /// Directory receiving bench_i{I}_l{L}.jsonl files plus index.json.
    #[arg(long)]
    pub output: PathBuf,
    /// Overrides the config file's seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Extension manifest appended to the built-in instruction pool.
    #[arg(long)]
    pub pool: Option<PathBuf>,
}

#[derive(Args)]
pub struct AddInstructionsArgs {
    /// Extension manifest (JSON array of instruction entries) to validate.
    pub manifest: PathBuf,
}
