//! Response parsing, per-instruction verdicts, and the two benchmark
//! metrics.
//!
//! Parsing is a fixed tag grammar, not an LLM judge: answers live between
//! `[ANSWER][i]` and `[\ANSWER]` (the `[/ANSWER]` closer is accepted as a
//! synonym). Everything outside tag pairs is ignored, which is what makes
//! the parser robust to chatter around the answers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use once_cell::sync::Lazy;
use regex::Regex;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::generator::{Benchmark, GenerationConfig, Sample};
use crate::inference::{ModelResponse, ResponseStatus};
use crate::render::Mode;
use crate::value::Value;

static ANSWER_TAG: Lazy<Regex> = Lazy::new(|| {
    Regex::new(r"(?s)\[ANSWER\]\[([0-9]+)\](.*?)\[(?:\\|/)ANSWER\]")
        .expect("answer tag pattern compiles")
});

/// Outcome of checking one instruction's answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Correct,
    Wrong,
    Missing,
    TypeMismatch,
    Duplicate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnomalyKind {
    Missing,
    Duplicate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Anomaly {
    pub index: usize,
    pub kind: AnomalyKind,
}

/// Tag-extraction result for one response text against `n` instructions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParsedAnswers {
    /// 1-based instruction index to raw (trimmed) answer span; only indices
    /// that appeared exactly once.
    pub entries: BTreeMap<usize, String>,
    /// Missing and duplicated indices, ascending.
    pub anomalies: Vec<Anomaly>,
}

/// Scans `text` for answer tags addressed to instructions `1..=n`.
///
/// Occurrences with an out-of-range index are ignored. An index seen twice
/// or more becomes a [`AnomalyKind::Duplicate`] with no entry; an index
/// never seen becomes [`AnomalyKind::Missing`]. An opener without a closer
/// matches nothing, so its index stays missing.
pub fn parse_answers(text: &str, n: usize) -> ParsedAnswers {
    let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
    let mut spans: BTreeMap<usize, String> = BTreeMap::new();
    for capture in ANSWER_TAG.captures_iter(text) {
        let Ok(index) = capture[1].parse::<usize>() else {
            continue;
        };
        if index == 0 || index > n {
            continue;
        }
        *counts.entry(index).or_insert(0) += 1;
        spans
            .entry(index)
            .or_insert_with(|| capture[2].trim().to_string());
    }
    let mut parsed = ParsedAnswers::default();
    for index in 1..=n {
        match counts.get(&index).copied().unwrap_or(0) {
            0 => parsed.anomalies.push(Anomaly {
                index,
                kind: AnomalyKind::Missing,
            }),
            1 => {
                parsed
                    .entries
                    .insert(index, spans.remove(&index).expect("span recorded"));
            }
            _ => parsed.anomalies.push(Anomaly {
                index,
                kind: AnomalyKind::Duplicate,
            }),
        }
    }
    parsed
}

/// Strips one surrounding matching quote pair (single or double), if any.
fn strip_quotes(span: &str) -> &str {
    let bytes = span.as_bytes();
    if bytes.len() >= 2
        && (bytes[0] == b'"' || bytes[0] == b'\'')
        && bytes[bytes.len() - 1] == bytes[0]
    {
        &span[1..span.len() - 1]
    } else {
        span
    }
}

/// Checks one answer span against its expected value.
///
/// Numbers compare by value after trimming and quote stripping, so `007`,
/// `+7`, and `"7"` all equal 7; a span that is not an optionally signed
/// decimal integer is a type mismatch. Text compares exactly and
/// case-sensitively after quote stripping only, so quoting can protect
/// answers with significant whitespace.
pub fn compare(span: &str, expected: &Value) -> Verdict {
    match expected {
        Value::Number(expected) => {
            let candidate = strip_quotes(span.trim());
            let digits = candidate.strip_prefix(['+', '-']).unwrap_or(candidate);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Verdict::TypeMismatch;
            }
            let actual: BigInt = candidate.parse().expect("validated decimal integer");
            if actual == *expected {
                Verdict::Correct
            } else {
                Verdict::Wrong
            }
        }
        Value::Text(expected) => {
            if strip_quotes(span) == expected {
                Verdict::Correct
            } else {
                Verdict::Wrong
            }
        }
    }
}

/// Why a sample scored below perfect, one category per sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorCategory {
    TransportError,
    DuplicateTags,
    InsufficientAnswer,
    TypeMismatch,
}

impl ErrorCategory {
    pub const ALL: [ErrorCategory; 4] = [
        ErrorCategory::TransportError,
        ErrorCategory::DuplicateTags,
        ErrorCategory::InsufficientAnswer,
        ErrorCategory::TypeMismatch,
    ];
}

/// Scored result for one sample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleEvaluation {
    pub sample_id: String,
    /// One verdict per instruction, in chain order.
    pub verdicts: Vec<Verdict>,
    pub all_correct: bool,
    /// The sample's dominant failure, by fixed precedence: transport error,
    /// then duplicate tags, then insufficient answers, then type mismatch.
    /// `None` when nothing failed structurally (all correct, or wrong
    /// values only).
    pub error_category: Option<ErrorCategory>,
}

/// Aggregated scores for a whole benchmark run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub format_version: u32,
    pub config: GenerationConfig,
    /// Model metadata echoed from the responses file header, if any.
    pub model: Option<serde_json::Value>,
    /// Fraction of samples with every instruction correct.
    pub prompt_level_accuracy: f64,
    /// Mean over samples of the per-sample fraction of correct
    /// instructions.
    pub instruction_level_accuracy: f64,
    /// Correct fraction per instruction id, pooled across all samples and
    /// chain positions.
    pub per_instruction_accuracy: BTreeMap<String, f64>,
    /// Sample count per error category; all categories always present.
    pub error_category_counts: BTreeMap<ErrorCategory, u64>,
    pub per_sample: Vec<SampleEvaluation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("response {got:?} does not belong to sample {expected:?}")]
    SampleMismatch { expected: String, got: String },
    #[error("expected {expected} evaluations, got {got}")]
    CountMismatch { expected: usize, got: usize },
    #[error("cannot aggregate an empty benchmark")]
    EmptyBenchmark,
    #[error("evaluation for {sample_id:?} has {got} verdicts, expected {expected}")]
    VerdictCountMismatch {
        sample_id: String,
        expected: usize,
        got: usize,
    },
}

/// Scores one response against its sample.
///
/// Prompt mode parses the whole response text. Chat mode looks for the
/// answer to instruction `t` only in assistant turn `t`; answers restated
/// in other turns are ignored. A transport error scores every instruction
/// Missing.
pub fn evaluate_sample(
    sample: &Sample,
    response: &ModelResponse,
) -> Result<SampleEvaluation, EvalError> {
    if sample.sample_id != response.sample_id {
        return Err(EvalError::SampleMismatch {
            expected: sample.sample_id.clone(),
            got: response.sample_id.clone(),
        });
    }
    let n = sample.instruction_ids.len();
    let expected_outputs = sample.expected.outputs();

    let verdicts: Vec<Verdict> = if response.status == ResponseStatus::TransportError {
        vec![Verdict::Missing; n]
    } else {
        match sample.mode {
            Mode::Prompt => {
                let text = response.text.as_deref().unwrap_or("");
                let parsed = parse_answers(text, n);
                (1..=n)
                    .map(|index| verdict_at(&parsed, index, &expected_outputs[index - 1]))
                    .collect()
            }
            Mode::Chat => {
                let empty = Vec::new();
                let turns = response.turns.as_ref().unwrap_or(&empty);
                (1..=n)
                    .map(|index| match turns.get(index - 1) {
                        None => Verdict::Missing,
                        Some(turn) => {
                            let parsed = parse_answers(turn, n);
                            verdict_at(&parsed, index, &expected_outputs[index - 1])
                        }
                    })
                    .collect()
            }
        }
    };

    let all_correct = verdicts.iter().all(|v| *v == Verdict::Correct);
    let error_category = if response.status == ResponseStatus::TransportError {
        Some(ErrorCategory::TransportError)
    } else if verdicts.contains(&Verdict::Duplicate) {
        Some(ErrorCategory::DuplicateTags)
    } else if verdicts.contains(&Verdict::Missing) {
        Some(ErrorCategory::InsufficientAnswer)
    } else if verdicts.contains(&Verdict::TypeMismatch) {
        Some(ErrorCategory::TypeMismatch)
    } else {
        None
    };

    Ok(SampleEvaluation {
        sample_id: sample.sample_id.clone(),
        verdicts,
        all_correct,
        error_category,
    })
}

fn verdict_at(parsed: &ParsedAnswers, index: usize, expected: &Value) -> Verdict {
    if let Some(span) = parsed.entries.get(&index) {
        return compare(span, expected);
    }
    match parsed.anomalies.iter().find(|a| a.index == index) {
        Some(anomaly) if anomaly.kind == AnomalyKind::Duplicate => Verdict::Duplicate,
        _ => Verdict::Missing,
    }
}

/// Folds per-sample evaluations into the report.
///
/// Instruction-level accuracy is computed as one exact division,
/// total correct over (samples x instructions), which equals the mean of
/// per-sample fractions because every sample has the same chain length.
pub fn aggregate(
    benchmark: &Benchmark,
    evaluations: &[SampleEvaluation],
) -> Result<EvaluationReport, EvalError> {
    if benchmark.samples.is_empty() {
        return Err(EvalError::EmptyBenchmark);
    }
    if benchmark.samples.len() != evaluations.len() {
        return Err(EvalError::CountMismatch {
            expected: benchmark.samples.len(),
            got: evaluations.len(),
        });
    }
    let n = benchmark.config.n_instructions as usize;

    let mut fully_correct: u64 = 0;
    let mut correct_instructions: u64 = 0;
    let mut per_instruction: BTreeMap<String, (u64, u64)> = BTreeMap::new();
    let mut error_category_counts: BTreeMap<ErrorCategory, u64> =
        ErrorCategory::ALL.into_iter().map(|c| (c, 0)).collect();

    for (sample, evaluation) in benchmark.samples.iter().zip(evaluations) {
        if sample.sample_id != evaluation.sample_id {
            return Err(EvalError::SampleMismatch {
                expected: sample.sample_id.clone(),
                got: evaluation.sample_id.clone(),
            });
        }
        if evaluation.verdicts.len() != n {
            return Err(EvalError::VerdictCountMismatch {
                sample_id: sample.sample_id.clone(),
                expected: n,
                got: evaluation.verdicts.len(),
            });
        }
        fully_correct += u64::from(evaluation.all_correct);
        for (id, verdict) in sample.instruction_ids.iter().zip(&evaluation.verdicts) {
            let (correct, total) = per_instruction.entry(id.clone()).or_insert((0, 0));
            *total += 1;
            if *verdict == Verdict::Correct {
                *correct += 1;
                correct_instructions += 1;
            }
        }
        if let Some(category) = evaluation.error_category {
            *error_category_counts
                .get_mut(&category)
                .expect("all categories present") += 1;
        }
    }

    let sample_count = benchmark.samples.len() as u64;
    Ok(EvaluationReport {
        format_version: crate::FORMAT_VERSION,
        config: benchmark.config.clone(),
        model: None,
        prompt_level_accuracy: fully_correct as f64 / sample_count as f64,
        instruction_level_accuracy: correct_instructions as f64 / (sample_count * n as u64) as f64,
        per_instruction_accuracy: per_instruction
            .into_iter()
            .map(|(id, (correct, total))| (id, correct as f64 / total as f64))
            .collect(),
        error_category_counts,
        per_sample: evaluations.to_vec(),
    })
}
