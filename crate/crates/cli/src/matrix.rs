//! The matrix subcommand: one benchmark per grid cell, plus an index.

use std::fs;

use anyhow::Context;
use chainbench::formats::benchmark_to_jsonl;
use chainbench::generator::generate;
use serde::Serialize;

use crate::cli::MatrixArgs;
use crate::config::{load_config, MatrixConfig};
use crate::error::CliResult;
use crate::extensions::load_overlay_pool;
use crate::generate::{classify, mean_final_length};

#[derive(Serialize)]
struct IndexCell {
    file: String,
    n_instructions: u32,
    target_length: u32,
    samples: usize,
}

#[derive(Serialize)]
struct MatrixIndex {
    format_version: u32,
    cells: Vec<IndexCell>,
}

pub fn run(args: &MatrixArgs) -> CliResult {
    let mut config: MatrixConfig = load_config(&args.config)?;
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    config.validate()?;
    let pool = load_overlay_pool(args.pool.as_deref())?;

    fs::create_dir_all(&args.output)
        .with_context(|| format!("cannot create {}", args.output.display()))?;

    let mut cells = Vec::new();
    for &n_instructions in &config.instruction_counts {
        for &target_length in &config.target_lengths {
            let benchmark =
                generate(&config.cell(n_instructions, target_length), &pool).map_err(classify)?;
            let file = format!("bench_i{n_instructions}_l{target_length}.jsonl");
            let path = args.output.join(&file);
            fs::write(&path, benchmark_to_jsonl(&benchmark))
                .with_context(|| format!("cannot write {}", path.display()))?;
            println!(
                "{file}: {} samples, mean final length {:.3}",
                benchmark.samples.len(),
                mean_final_length(&benchmark)
            );
            cells.push(IndexCell {
                file,
                n_instructions,
                target_length,
                samples: benchmark.samples.len(),
            });
        }
    }

    let index = MatrixIndex {
        format_version: chainbench::FORMAT_VERSION,
        cells,
    };
    let index_path = args.output.join("index.json");
    let index_text = serde_json::to_string_pretty(&index).expect("index serializes") + "\n";
    fs::write(&index_path, index_text)
        .with_context(|| format!("cannot write {}", index_path.display()))?;

    println!(
        "wrote {} benchmarks and index.json to {}",
        config.instruction_counts.len() * config.target_lengths.len(),
        args.output.display()
    );
    Ok(())
}
