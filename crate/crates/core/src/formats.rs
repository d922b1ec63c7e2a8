//! File formats: benchmark JSONL, responses JSONL, report JSON, and the
//! flat CSV export.
//!
//! All formats are UTF-8 with LF line endings, and every reader is the
//! exact inverse of its writer. Seeds and chain values are serialized as
//! decimal strings so no JSON parser anywhere in a pipeline can round
//! them through floating point.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eval::{EvaluationReport, Verdict};
use crate::generator::{Benchmark, GenerationConfig, Sample};
use crate::inference::ModelResponse;
use crate::FORMAT_VERSION;

/// Serializes a `u64` as a decimal string; accepts strings, integers, and
/// the arbitrary-precision number form on the way back in. Used for seeds,
/// which would otherwise lose bits in float-based JSON parsers.
pub mod u64_as_string {
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &u64, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<u64, D::Error> {
        struct Flexible;

        impl<'de> de::Visitor<'de> for Flexible {
            type Value = u64;

            fn expecting(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str("a u64 as an integer or a decimal string")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<u64, E> {
                Ok(v)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<u64, E> {
                u64::try_from(v).map_err(|_| E::custom("seed must be non-negative"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<u64, E> {
                v.parse()
                    .map_err(|_| E::custom(format!("not a u64: {v:?}")))
            }

            fn visit_map<A: de::MapAccess<'de>>(self, map: A) -> Result<u64, A::Error> {
                let number =
                    serde_json::Number::deserialize(de::value::MapAccessDeserializer::new(map))?;
                number
                    .as_u64()
                    .ok_or_else(|| de::Error::custom(format!("not a u64: {number}")))
            }
        }

        deserializer.deserialize_any(Flexible)
    }
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("empty file: expected a header line")]
    MissingHeader,
    #[error("line {line} does not parse")]
    Json {
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("report does not parse")]
    Report(#[source] serde_json::Error),
    #[error("file has format version {found}, this build supports {expected}")]
    VersionMismatch { found: u32, expected: u32 },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("csv export failed: {0}")]
    Csv(#[from] csv::Error),
}

fn json_line_error(line: usize) -> impl FnOnce(serde_json::Error) -> FormatError {
    move |source| FormatError::Json { line, source }
}

#[derive(Serialize, Deserialize)]
struct BenchmarkHeader {
    format_version: u32,
    created_at: Option<String>,
    config: GenerationConfig,
}

/// Renders a benchmark as JSON Lines: a header object, then one sample
/// per line.
pub fn benchmark_to_jsonl(benchmark: &Benchmark) -> String {
    let header = BenchmarkHeader {
        format_version: FORMAT_VERSION,
        created_at: benchmark.created_at.clone(),
        config: benchmark.config.clone(),
    };
    let mut out = String::new();
    writeln!(
        out,
        "{}",
        serde_json::to_string(&header).expect("header serializes")
    )
    .expect("string write");
    for sample in &benchmark.samples {
        writeln!(
            out,
            "{}",
            serde_json::to_string(sample).expect("sample serializes")
        )
        .expect("string write");
    }
    out
}

/// Parses a benchmark file. `version_check` rejects files written by a
/// different format version; disable it only to salvage data.
pub fn benchmark_from_jsonl(text: &str, version_check: bool) -> Result<Benchmark, FormatError> {
    let mut lines = text.lines().enumerate();
    let (_, header_line) = lines.next().ok_or(FormatError::MissingHeader)?;
    let header: BenchmarkHeader = serde_json::from_str(header_line).map_err(json_line_error(1))?;
    if version_check && header.format_version != FORMAT_VERSION {
        return Err(FormatError::VersionMismatch {
            found: header.format_version,
            expected: FORMAT_VERSION,
        });
    }
    let mut samples = Vec::new();
    for (index, line) in lines {
        if line.is_empty() {
            continue;
        }
        let sample: Sample = serde_json::from_str(line).map_err(json_line_error(index + 1))?;
        samples.push(sample);
    }
    Ok(Benchmark {
        config: header.config,
        created_at: header.created_at,
        samples,
    })
}

/// Renders responses as JSON Lines, optionally starting with a metadata
/// header (any object without a `sample_id` key; typically model name and
/// endpoint settings).
pub fn responses_to_jsonl(
    responses: &[ModelResponse],
    metadata: Option<&serde_json::Value>,
) -> String {
    let mut out = String::new();
    if let Some(metadata) = metadata {
        writeln!(
            out,
            "{}",
            serde_json::to_string(metadata).expect("metadata serializes")
        )
        .expect("string write");
    }
    for response in responses {
        writeln!(
            out,
            "{}",
            serde_json::to_string(response).expect("response serializes")
        )
        .expect("string write");
    }
    out
}

/// Parses a responses file, returning the optional metadata header and
/// the response rows. A first line without a `sample_id` key is the
/// header; anywhere else such a line is malformed.
pub fn responses_from_jsonl(
    text: &str,
) -> Result<(Option<serde_json::Value>, Vec<ModelResponse>), FormatError> {
    let mut metadata = None;
    let mut responses = Vec::new();
    for (index, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let value: serde_json::Value =
            serde_json::from_str(line).map_err(json_line_error(index + 1))?;
        let has_sample_id = value.get("sample_id").is_some();
        if has_sample_id {
            let response: ModelResponse =
                serde_json::from_str(line).map_err(json_line_error(index + 1))?;
            responses.push(response);
        } else if index == 0 {
            metadata = Some(value);
        } else {
            return Err(FormatError::Malformed {
                line: index + 1,
                message: "expected a response row with a sample_id key".to_string(),
            });
        }
    }
    Ok((metadata, responses))
}

/// Renders a report as pretty-printed JSON.
pub fn report_to_json(report: &EvaluationReport) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serializes");
    out.push('\n');
    out
}

/// Parses a report, optionally enforcing the format version stamped into
/// it at aggregation time.
pub fn report_from_json(text: &str, version_check: bool) -> Result<EvaluationReport, FormatError> {
    let report: EvaluationReport = serde_json::from_str(text).map_err(FormatError::Report)?;
    if version_check && report.format_version != FORMAT_VERSION {
        return Err(FormatError::VersionMismatch {
            found: report.format_version,
            expected: FORMAT_VERSION,
        });
    }
    Ok(report)
}

/// Renders the flat per-instruction CSV export: one row per
/// (sample, instruction index), carrying the verdict and the expected
/// value so downstream analysis needs no other file.
pub fn evaluation_to_csv(
    report: &EvaluationReport,
    benchmark: &Benchmark,
) -> Result<String, FormatError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record([
        "sample_id",
        "language",
        "instruction_index",
        "instruction_id",
        "verdict",
        "expected_kind",
        "expected_value",
    ])?;
    for (sample, evaluation) in benchmark.samples.iter().zip(&report.per_sample) {
        let outputs = sample.expected.outputs();
        for (position, verdict) in evaluation.verdicts.iter().enumerate() {
            writer.write_record([
                sample.sample_id.as_str(),
                sample.language.key(),
                &(position + 1).to_string(),
                sample.instruction_ids[position].as_str(),
                &verdict.to_string(),
                &outputs[position].kind().to_string(),
                &outputs[position].render(),
            ])?;
        }
    }
    let bytes = writer.into_inner().expect("csv buffer recovers");
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Verdict::Correct => "correct",
            Verdict::Wrong => "wrong",
            Verdict::Missing => "missing",
            Verdict::TypeMismatch => "type_mismatch",
            Verdict::Duplicate => "duplicate",
        };
        f.write_str(name)
    }
}
