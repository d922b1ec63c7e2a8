//! Benchmark generator and evaluation harness for typed instruction chains.
//!
//! A benchmark is a set of samples. Each sample starts from a random initial
//! value (a number or a string) and applies a chain of typed instructions,
//! where every instruction consumes the previous output. Expected values are
//! computed by a native execution oracle, so model responses can be scored by
//! simple, deterministic comparison without any judge model.
//!
//! The crate is organized along the pipeline:
//!
//! - [`pool`]: the instruction registry (22 built-ins plus manifest extensions)
//! - [`oracle`]: exact execution of chains and the length metric
//! - [`generator`]: seeded, reproducible benchmark construction with
//!   length-aware difficulty steering
//! - [`render`]: prompt-mode and chat-mode text rendering
//! - [`inference`]: chat-completions client with bounded concurrency, plus
//!   replay and synthetic-response sources
//! - [`eval`]: answer-tag parsing, verdicts, and the two accuracy metrics
//! - [`formats`]: JSONL/JSON/CSV readers and writers

pub mod builtins;
pub mod eval;
pub mod formats;
pub mod generator;
pub mod inference;
pub mod oracle;
pub mod pool;
pub mod render;
pub mod rng;
pub mod value;

/// Version stamp written into every benchmark, responses, and report file.
///
/// Bumped whenever a file format or a rendering template changes
/// incompatibly.
pub const FORMAT_VERSION: u32 = 1;

pub use generator::{generate, Benchmark, GenerationConfig, Sample};
pub use oracle::{apply, length_metric, run_chain, Trace};
pub use pool::{InstructionSpec, Language, LengthEffect, Pool, SemanticsRegistry};
pub use render::{InstructionType, Mode, RenderedPrompt};
pub use value::{Value, ValueType};
