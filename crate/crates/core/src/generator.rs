//! Benchmark generation: seeded initial values and length-steered,
//! type-consistent instruction chains.
//!
//! Every sample's randomness derives from its own seed, computed from the
//! global seed, the language, the chain shape, and the sample index. That
//! keeps samples independent (growing a benchmark never changes its
//! existing samples) and makes generation order irrelevant.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::oracle::{apply, length_metric, Trace};
use crate::pool::{Language, LengthEffect, Pool};
use crate::render::{render, InstructionType, Mode, RenderError, RenderedPrompt};
use crate::rng::{derive_sample_seed, SplitMix64, U64Stream};
use crate::value::Value;

/// Upper bound on `n_instructions` and `target_length`; keeps the two
/// parameters injectively packable into the seed-derivation ordinal.
pub const MAX_SHAPE_PARAMETER: u32 = 1_000_000;

const RESTART_OFFSET: u64 = 1 << 32;

/// All parameters of one generation run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationConfig {
    pub n_instructions: u32,
    pub target_length: u32,
    pub samples_per_language: u32,
    pub languages: Vec<Language>,
    pub mode: Mode,
    pub instruction_type: InstructionType,
    #[serde(with = "crate::formats::u64_as_string")]
    pub seed: u64,
}

impl GenerationConfig {
    pub fn validate(&self) -> Result<(), GenerateError> {
        let invalid = |message: &str| Err(GenerateError::InvalidConfig(message.to_string()));
        if self.n_instructions == 0 {
            return invalid("n_instructions must be at least 1");
        }
        if self.target_length == 0 {
            return invalid("target_length must be at least 1");
        }
        if self.samples_per_language == 0 {
            return invalid("samples_per_language must be at least 1");
        }
        if self.n_instructions > MAX_SHAPE_PARAMETER || self.target_length > MAX_SHAPE_PARAMETER {
            return invalid("n_instructions and target_length must not exceed 1000000");
        }
        if self.languages.is_empty() {
            return invalid("languages must not be empty");
        }
        let mut seen = self.languages.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != self.languages.len() {
            return invalid("languages must be distinct");
        }
        Ok(())
    }
}

/// One benchmark item, ready to send to a model and to score afterwards.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sample {
    pub sample_id: String,
    pub language: Language,
    pub mode: Mode,
    pub instruction_type: InstructionType,
    #[serde(with = "crate::formats::u64_as_string")]
    pub sample_seed: u64,
    pub initial: Value,
    pub instruction_ids: Vec<String>,
    pub expected: Trace,
    #[serde(flatten)]
    pub rendered: RenderedPrompt,
}

/// A full generated benchmark. `created_at` stays `None` so generation is
/// byte-reproducible; callers may stamp it for provenance at their own
/// cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Benchmark {
    pub config: GenerationConfig,
    pub created_at: Option<String>,
    pub samples: Vec<Sample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("invalid generation config: {0}")]
    InvalidConfig(String),
    #[error(
        "generation stuck at language {language:?} sample {index}: \
         both seeded attempts ran out of candidates"
    )]
    GenerationStuck { language: Language, index: u32 },
    #[error(transparent)]
    Render(#[from] RenderError),
}

/// One seeded chain-selection attempt ran out of applicable instructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("chain selection exhausted every candidate")]
pub struct ChainStuck;

/// Draws a fresh initial value: a number in [1, 9999] or a lowercase
/// string of length 4 to 8, each with probability one half. Draw order is
/// fixed (kind, then magnitude or length, then characters) so independent
/// implementations agree stream-for-stream.
pub fn sample_initial(rng: &mut impl U64Stream) -> Value {
    if rng.next_u64().is_multiple_of(2) {
        Value::number(1 + rng.next_u64() % 9999)
    } else {
        let length = 4 + rng.next_u64() % 5;
        let mut s = String::with_capacity(length as usize);
        for _ in 0..length {
            s.push(char::from(b'a' + (rng.next_u64() % 26) as u8));
        }
        Value::Text(s)
    }
}

/// Greedily selects a type-consistent chain of `n` instructions, steering
/// each step's length effect toward `target` (expand below it, shrink
/// above it, stay neutral on it).
///
/// Candidates that violate a precondition are removed and redrawn; when a
/// step's candidates run out, the no-repeat exclusion is dropped and the
/// step retried once. A step that still finds nothing fails the whole
/// attempt; the caller restarts from a fresh seed.
pub fn select_chain(
    pool: &Pool,
    initial: &Value,
    n: u32,
    target: u32,
    rng: &mut impl U64Stream,
) -> Result<(Vec<String>, Trace), ChainStuck> {
    let mut ids: Vec<String> = Vec::with_capacity(n as usize);
    let mut steps = vec![initial.clone()];
    let mut current = initial.clone();
    let mut previous: Option<String> = None;
    for _ in 0..n {
        let length = length_metric(&current);
        let desired = match length.cmp(&u64::from(target)) {
            Ordering::Less => LengthEffect::Expand,
            Ordering::Greater => LengthEffect::Shrink,
            Ordering::Equal => LengthEffect::Neutral,
        };
        let (id, next) = try_step(pool, &current, desired, previous.as_deref(), rng)
            .or_else(|| try_step(pool, &current, desired, None, rng))
            .ok_or(ChainStuck)?;
        previous = Some(id.clone());
        ids.push(id);
        steps.push(next.clone());
        current = next;
    }
    Ok((ids, Trace { steps }))
}

fn try_step(
    pool: &Pool,
    current: &Value,
    desired: LengthEffect,
    exclude: Option<&str>,
    rng: &mut impl U64Stream,
) -> Option<(String, Value)> {
    let mut set = pool
        .candidates(current.kind(), Some(desired), exclude)
        .ok()?;
    while !set.is_empty() {
        let pick = (rng.next_u64() % set.len() as u64) as usize;
        match apply(set[pick], current) {
            Ok(next) => return Some((set[pick].spec.id.clone(), next)),
            Err(_) => {
                set.remove(pick);
            }
        }
    }
    None
}

/// Mixes the chain shape into the language ordinal so that every
/// (language, n_instructions, target_length) combination draws from its
/// own seed stream. Injective because both parameters are capped at
/// [`MAX_SHAPE_PARAMETER`], below 2^20.
fn seed_ordinal(config: &GenerationConfig, language: Language) -> u64 {
    let shape = u64::from(config.n_instructions) * (1 << 20) + u64::from(config.target_length);
    language.ordinal() + 3 * shape
}

/// Generates one sample at (language, index), restarting once from a
/// disjoint seed if the first attempt gets stuck.
pub fn generate_sample(
    config: &GenerationConfig,
    pool: &Pool,
    language: Language,
    index: u32,
) -> Result<Sample, GenerateError> {
    let ordinal = seed_ordinal(config, language);
    for attempt in 0..2u64 {
        let sample_index = u64::from(index) + attempt * RESTART_OFFSET;
        let sample_seed = derive_sample_seed(config.seed, ordinal, sample_index);
        let mut rng = SplitMix64::new(sample_seed);
        let initial = sample_initial(&mut rng);
        let Ok((instruction_ids, expected)) = select_chain(
            pool,
            &initial,
            config.n_instructions,
            config.target_length,
            &mut rng,
        ) else {
            continue;
        };
        let chain: Vec<_> = instruction_ids
            .iter()
            .map(|id| &pool.get(id).expect("selected ids exist in the pool").spec)
            .collect();
        let rendered = render(
            &chain,
            &initial,
            language,
            config.mode,
            config.instruction_type,
        )?;
        return Ok(Sample {
            sample_id: format!("{}-{}", language.key(), index),
            language,
            mode: config.mode,
            instruction_type: config.instruction_type,
            sample_seed,
            initial,
            instruction_ids,
            expected,
            rendered,
        });
    }
    Err(GenerateError::GenerationStuck { language, index })
}

/// Generates the whole benchmark, ordered by (language order in config,
/// then sample index).
pub fn generate(config: &GenerationConfig, pool: &Pool) -> Result<Benchmark, GenerateError> {
    config.validate()?;
    let mut samples =
        Vec::with_capacity(config.languages.len() * config.samples_per_language as usize);
    for &language in &config.languages {
        for index in 0..config.samples_per_language {
            samples.push(generate_sample(config, pool, language, index)?);
        }
    }
    Ok(Benchmark {
        config: config.clone(),
        created_at: None,
        samples,
    })
}
