//! The run subcommand: benchmark in, responses JSONL out, from a live
//! endpoint or a replay file.
//!
//! Per-sample transport errors are part of a successful run (they carry
//! signal: the summary reports them and evaluation scores them Missing),
//! so the exit code stays 0 unless the run itself cannot proceed.

use std::collections::BTreeMap;
use std::fs;

use anyhow::Context;
use chainbench::formats::{benchmark_from_jsonl, responses_from_jsonl, responses_to_jsonl};
use chainbench::generator::Benchmark;
use chainbench::inference::{
    run_inference, ModelEndpointConfig, ModelResponse, ResponseSource, ResponseStatus,
};
use chainbench::render::Mode;

use crate::cli::RunArgs;
use crate::config::load_config;
use crate::error::{CliError, CliResult};

pub fn run(args: &RunArgs) -> CliResult {
    let benchmark_text = fs::read_to_string(&args.benchmark)
        .with_context(|| format!("cannot read benchmark {}", args.benchmark.display()))
        .map_err(CliError::Usage)?;
    let benchmark = benchmark_from_jsonl(&benchmark_text, args.format_version_check)
        .map_err(CliError::usage)?;

    let (metadata, responses) = match (&args.replay, &args.config) {
        (Some(replay_path), _) => {
            let text = fs::read_to_string(replay_path)
                .with_context(|| format!("cannot read replay file {}", replay_path.display()))
                .map_err(CliError::Usage)?;
            let (metadata, records) = responses_from_jsonl(&text).map_err(CliError::usage)?;
            validate_replay_shapes(&benchmark, &records)?;
            let map: BTreeMap<String, ModelResponse> = records
                .into_iter()
                .map(|record| (record.sample_id.clone(), record))
                .collect();
            let responses =
                run_inference(&benchmark, &ResponseSource::Replay(map)).map_err(CliError::usage)?;
            (metadata, responses)
        }
        (None, Some(config_path)) => {
            let mut endpoint: ModelEndpointConfig = load_config(config_path)?;
            if let Some(max_in_flight) = args.max_in_flight {
                endpoint.max_in_flight = max_in_flight;
            }
            let metadata = serde_json::json!({
                "model_name": endpoint.model_name,
                "base_url": endpoint.base_url,
                "temperature": endpoint.temperature,
                "max_output_tokens": endpoint.max_output_tokens,
            });
            let responses = run_inference(&benchmark, &ResponseSource::Endpoint(endpoint))
                .map_err(CliError::usage)?;
            (Some(metadata), responses)
        }
        (None, None) => unreachable!("clap requires --config or --replay"),
    };

    fs::write(
        &args.output,
        responses_to_jsonl(&responses, metadata.as_ref()),
    )
    .with_context(|| format!("cannot write {}", args.output.display()))?;

    let failed = responses
        .iter()
        .filter(|r| r.status == ResponseStatus::TransportError)
        .count();
    println!(
        "wrote {}: {} responses",
        args.output.display(),
        responses.len()
    );
    println!(
        "transport errors: {failed} of {} ({:.0}%)",
        responses.len(),
        100.0 * failed as f64 / responses.len().max(1) as f64
    );
    Ok(())
}

/// Replayed records must have the shape the benchmark's mode expects;
/// a prompt-mode record replayed against a chat benchmark (or vice versa)
/// would otherwise silently score as Missing.
fn validate_replay_shapes(benchmark: &Benchmark, records: &[ModelResponse]) -> CliResult {
    let mode = benchmark.config.mode;
    for record in records {
        let ok = record.status == ResponseStatus::TransportError
            || match mode {
                Mode::Prompt => record.text.is_some(),
                Mode::Chat => record.turns.is_some(),
            };
        if !ok {
            return Err(CliError::usage(anyhow::anyhow!(
                "replay record {} does not match the benchmark's {} mode",
                record.sample_id,
                match mode {
                    Mode::Prompt => "prompt",
                    Mode::Chat => "chat",
                }
            )));
        }
    }
    Ok(())
}
