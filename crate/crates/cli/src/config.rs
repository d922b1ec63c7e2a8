//! Config file loading (TOML or JSON) and the matrix config type.

use std::fs;
use std::path::Path;

use anyhow::Context;
use chainbench::generator::GenerationConfig;
use chainbench::pool::Language;
use chainbench::render::{InstructionType, Mode};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Parameters for a benchmark grid: the cross product of
/// `instruction_counts` and `target_lengths`, sharing everything else.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixConfig {
    pub instruction_counts: Vec<u32>,
    pub target_lengths: Vec<u32>,
    pub samples_per_language: u32,
    pub languages: Vec<Language>,
    pub mode: Mode,
    pub instruction_type: InstructionType,
    #[serde(with = "chainbench::formats::u64_as_string")]
    pub seed: u64,
}

impl MatrixConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.instruction_counts.is_empty() || self.target_lengths.is_empty() {
            return Err(CliError::usage(anyhow::anyhow!(
                "matrix config needs at least one instruction count and one target length"
            )));
        }
        Ok(())
    }

    /// The generation config of one grid cell. Seed derivation already
    /// mixes in (n_instructions, target_length), so cells never share
    /// sample seeds even though they share the config seed.
    pub fn cell(&self, n_instructions: u32, target_length: u32) -> GenerationConfig {
        GenerationConfig {
            n_instructions,
            target_length,
            samples_per_language: self.samples_per_language,
            languages: self.languages.clone(),
            mode: self.mode,
            instruction_type: self.instruction_type,
            seed: self.seed,
        }
    }
}

/// Reads a config file: `.json` parses as JSON, everything else as TOML.
pub fn load_config<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read config file {}", path.display()))
        .map_err(CliError::Usage)?;
    let parsed = if path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"))
    {
        serde_json::from_str(&text).map_err(anyhow::Error::from)
    } else {
        toml::from_str(&text).map_err(anyhow::Error::from)
    };
    parsed
        .with_context(|| format!("config file {} does not parse", path.display()))
        .map_err(CliError::Usage)
}
