//! The generate subcommand: config file in, benchmark JSONL out.

use std::fs;

use anyhow::Context;
use chainbench::formats::benchmark_to_jsonl;
use chainbench::generator::{generate, Benchmark, GenerateError, GenerationConfig};
use chainbench::oracle::length_metric;

use crate::cli::GenerateArgs;
use crate::config::load_config;
use crate::error::{CliError, CliResult};
use crate::extensions::load_overlay_pool;

pub fn run(args: &GenerateArgs) -> CliResult {
    let mut config: GenerationConfig = load_config(&args.config)?;
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    let pool = load_overlay_pool(args.pool.as_deref())?;
    let benchmark = generate(&config, &pool).map_err(classify)?;

    fs::write(&args.output, benchmark_to_jsonl(&benchmark))
        .with_context(|| format!("cannot write {}", args.output.display()))?;

    println!(
        "wrote {}: {} samples",
        args.output.display(),
        benchmark.samples.len()
    );
    println!("mean final length: {:.3}", mean_final_length(&benchmark));
    Ok(())
}

pub fn classify(error: GenerateError) -> CliError {
    match error {
        GenerateError::InvalidConfig(_) => CliError::usage(error),
        GenerateError::GenerationStuck { .. } => CliError::Stuck(error.into()),
        GenerateError::Render(_) => CliError::Other(error.into()),
    }
}

pub fn mean_final_length(benchmark: &Benchmark) -> f64 {
    let total: u64 = benchmark
        .samples
        .iter()
        .map(|sample| length_metric(sample.expected.final_value()))
        .sum();
    total as f64 / benchmark.samples.len() as f64
}
