//! The evaluate subcommand: deterministic scoring of a responses file
//! against its benchmark, producing the JSON report and the CSV export.

use std::collections::BTreeMap;
use std::fs;

use anyhow::{anyhow, Context};
use chainbench::eval::{aggregate, evaluate_sample};
use chainbench::formats::{
    benchmark_from_jsonl, evaluation_to_csv, report_to_json, responses_from_jsonl,
};
use chainbench::inference::ModelResponse;

use crate::cli::EvaluateArgs;
use crate::error::{CliError, CliResult};

pub fn run(args: &EvaluateArgs) -> CliResult {
    let benchmark_text = fs::read_to_string(&args.benchmark)
        .with_context(|| format!("cannot read benchmark {}", args.benchmark.display()))
        .map_err(CliError::Usage)?;
    let benchmark = benchmark_from_jsonl(&benchmark_text, args.format_version_check)
        .map_err(CliError::usage)?;
    let responses_text = fs::read_to_string(&args.responses)
        .with_context(|| format!("cannot read responses {}", args.responses.display()))
        .map_err(CliError::Usage)?;
    let (metadata, records) = responses_from_jsonl(&responses_text).map_err(CliError::usage)?;

    if records.len() != benchmark.samples.len() {
        return Err(CliError::usage(anyhow!(
            "responses file has {} records for {} samples",
            records.len(),
            benchmark.samples.len()
        )));
    }
    let mut by_id: BTreeMap<&str, &ModelResponse> = BTreeMap::new();
    for record in &records {
        if by_id.insert(record.sample_id.as_str(), record).is_some() {
            return Err(CliError::usage(anyhow!(
                "responses file has two records for sample {}",
                record.sample_id
            )));
        }
    }

    let mut evaluations = Vec::with_capacity(benchmark.samples.len());
    for sample in &benchmark.samples {
        let response = by_id.get(sample.sample_id.as_str()).ok_or_else(|| {
            CliError::usage(anyhow!("no response for sample {}", sample.sample_id))
        })?;
        evaluations.push(evaluate_sample(sample, response).map_err(CliError::usage)?);
    }
    let mut report = aggregate(&benchmark, &evaluations).map_err(CliError::usage)?;
    report.model = metadata;

    let csv_path = args.output.with_extension("csv");
    fs::write(&args.output, report_to_json(&report))
        .with_context(|| format!("cannot write {}", args.output.display()))?;
    let csv = evaluation_to_csv(&report, &benchmark).map_err(anyhow::Error::from)?;
    fs::write(&csv_path, csv).with_context(|| format!("cannot write {}", csv_path.display()))?;

    println!("prompt_level_accuracy: {:?}", report.prompt_level_accuracy);
    println!(
        "instruction_level_accuracy: {:?}",
        report.instruction_level_accuracy
    );
    println!("wrote {} and {}", args.output.display(), csv_path.display());
    Ok(())
}
