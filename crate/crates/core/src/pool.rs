//! The typed instruction registry: built-ins plus manifest-based extensions.
//!
//! A pool is an ordered, immutable collection of instructions. Each entry
//! pairs the instruction's metadata (types, length effect, natural-language
//! text, per-language code snippets, test vectors) with its executable
//! semantics. Semantics are never parsed out of snippet text; they are bound
//! by id to implementations registered in a [`SemanticsRegistry`], and every
//! stored test vector is re-executed at load time.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::builtins;
use crate::oracle::ApplyError;
use crate::value::{Value, ValueType};

/// Programming languages the benchmark can target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Language {
    #[serde(rename = "python")]
    Python,
    #[serde(rename = "java")]
    Java,
    #[serde(rename = "cpp")]
    Cpp,
}

impl Language {
    pub const ALL: [Language; 3] = [Language::Python, Language::Java, Language::Cpp];

    /// Canonical ordinal mixed into per-sample seed derivation.
    pub fn ordinal(self) -> u64 {
        match self {
            Language::Python => 0,
            Language::Java => 1,
            Language::Cpp => 2,
        }
    }

    /// Lowercase key used in sample ids and file formats.
    pub fn key(self) -> &'static str {
        match self {
            Language::Python => "python",
            Language::Java => "java",
            Language::Cpp => "cpp",
        }
    }

    /// Human-readable name substituted for `{prog_lang}` in prompts.
    pub fn display_name(self) -> &'static str {
        match self {
            Language::Python => "Python",
            Language::Java => "Java",
            Language::Cpp => "C++",
        }
    }
}

/// Static tag describing an instruction's typical effect on the length
/// metric of its output relative to its input. Tags only bias candidate
/// selection during generation; the oracle verifies actual values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthEffect {
    Expand,
    Shrink,
    Neutral,
}

/// One instruction's metadata. The executable semantics live next to it in a
/// [`PoolEntry`].
#[derive(Debug, Clone)]
pub struct InstructionSpec {
    /// Stable short identifier, e.g. `"shift_back"`. Unique within a pool.
    pub id: String,
    /// Positive ordering index; built-ins use 1..=22.
    pub display_index: u32,
    pub input_type: ValueType,
    pub output_type: ValueType,
    pub length_effect: LengthEffect,
    /// The instruction phrased in natural language.
    pub nl_text: String,
    /// Display-only code snippet per language; never executed.
    pub code_snippets: BTreeMap<Language, String>,
    /// (input, expected output) pairs re-executed at pool load.
    pub test_vectors: Vec<(Value, Value)>,
}

/// Executable semantics of one instruction.
pub type SemanticsFn = Arc<dyn Fn(&Value) -> Result<Value, ApplyError> + Send + Sync>;

/// Maps instruction ids to executable semantics. Manifest entries resolve
/// against this registry; hosts extend the pool by registering an
/// implementation and shipping a manifest entry with the same id.
pub struct SemanticsRegistry {
    map: BTreeMap<String, SemanticsFn>,
}

impl SemanticsRegistry {
    /// A registry containing the 22 built-in implementations.
    pub fn with_builtins() -> Self {
        let mut registry = SemanticsRegistry {
            map: BTreeMap::new(),
        };
        for (id, semantics) in builtins::semantics_table() {
            registry.map.insert(id.to_string(), semantics);
        }
        registry
    }

    /// Registers (or replaces) the semantics for `id`.
    pub fn register<F>(&mut self, id: &str, semantics: F)
    where
        F: Fn(&Value) -> Result<Value, ApplyError> + Send + Sync + 'static,
    {
        self.map.insert(id.to_string(), Arc::new(semantics));
    }

    pub fn get(&self, id: &str) -> Option<SemanticsFn> {
        self.map.get(id).cloned()
    }
}

/// An instruction ready for use: metadata plus bound semantics.
pub struct PoolEntry {
    pub spec: InstructionSpec,
    pub semantics: SemanticsFn,
}

impl std::fmt::Debug for PoolEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PoolEntry")
            .field("spec", &self.spec)
            .finish_non_exhaustive()
    }
}

/// An ordered, immutable instruction collection: the 22 built-ins (in
/// display order) followed by manifest extras (in manifest order).
pub struct Pool {
    entries: Vec<PoolEntry>,
}

impl std::fmt::Debug for Pool {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ids: Vec<&str> = self.entries.iter().map(|e| e.spec.id.as_str()).collect();
        f.debug_struct("Pool").field("ids", &ids).finish()
    }
}

/// Serialized form of an extension instruction. `in`/`out` vector values are
/// JSON integers (any size) or JSON strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub id: String,
    pub display_index: u32,
    pub input_type: ValueType,
    pub output_type: ValueType,
    pub length_effect: LengthEffect,
    pub nl_text: String,
    pub code_snippets: BTreeMap<Language, String>,
    pub test_vectors: Vec<ManifestVector>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ManifestVector {
    #[serde(rename = "in")]
    pub input: ManifestValue,
    pub out: ManifestValue,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ManifestValue {
    Int(serde_json::Number),
    Str(String),
}

impl ManifestValue {
    fn to_value(&self, id: &str) -> Result<Value, PoolError> {
        match self {
            ManifestValue::Str(s) => Ok(Value::Text(s.clone())),
            ManifestValue::Int(n) => {
                let digits = n.to_string();
                BigInt::from_str(&digits).map(Value::Number).map_err(|_| {
                    PoolError::NonIntegerVector {
                        id: id.to_string(),
                        literal: digits,
                    }
                })
            }
        }
    }
}

/// A parsed extension manifest: zero or more entries to append to the
/// built-in pool.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PoolManifest {
    pub entries: Vec<ManifestEntry>,
}

impl PoolManifest {
    /// An empty manifest; loading it yields exactly the built-ins.
    pub fn empty() -> Self {
        PoolManifest::default()
    }

    /// Parses a manifest from its JSON text (a top-level array).
    pub fn from_json(text: &str) -> Result<Self, PoolError> {
        serde_json::from_str(text).map_err(PoolError::Parse)
    }
}

#[derive(Debug, Error)]
pub enum PoolError {
    #[error("manifest does not parse")]
    Parse(#[source] serde_json::Error),
    #[error("instruction {id}: test vector value {literal:?} is not an integer")]
    NonIntegerVector { id: String, literal: String },
    #[error("duplicate instruction id {0:?}")]
    DuplicateId(String),
    #[error("instruction {0:?} has no registered semantics")]
    UnresolvedInstruction(String),
    #[error("instruction {id}: display_index must be positive")]
    InvalidDisplayIndex { id: String },
    #[error("instruction {id}: missing {language:?} snippet")]
    MissingSnippet { id: String, language: Language },
    #[error("instruction {id}: test vector {index} expected {expected}, got {got}")]
    VectorMismatch {
        id: String,
        index: usize,
        expected: String,
        got: String,
    },
    #[error("pool has no instruction accepting {input_type} input")]
    EmptyCandidates { input_type: ValueType },
}

/// Builds a pool from the built-ins plus `manifest` extras, resolving
/// semantics through `registry` and re-executing every test vector.
/// Fails on the first violation; use [`validate_manifest`] to collect all of
/// them.
pub fn load_pool(manifest: &PoolManifest, registry: &SemanticsRegistry) -> Result<Pool, PoolError> {
    let mut entries = Vec::new();
    for spec in builtins::specs() {
        let entry = bind_entry(spec, registry)?;
        verify_entry(&entry)?;
        entries.push(entry);
    }
    let mut pool = Pool { entries };
    for manifest_entry in &manifest.entries {
        let entry = bind_manifest_entry(manifest_entry, registry)?;
        if pool.get(&entry.spec.id).is_some() {
            return Err(PoolError::DuplicateId(entry.spec.id.clone()));
        }
        verify_entry(&entry)?;
        pool.entries.push(entry);
    }
    Ok(pool)
}

/// Checks every manifest entry independently and returns one result per
/// entry, in manifest order. Used by batch installation, which must report
/// all failures rather than stop at the first.
pub fn validate_manifest(
    manifest: &PoolManifest,
    registry: &SemanticsRegistry,
) -> Vec<(String, Result<(), PoolError>)> {
    let builtin_ids: Vec<String> = builtins::specs().into_iter().map(|s| s.id).collect();
    let mut seen: Vec<String> = Vec::new();
    let mut reports = Vec::new();
    for manifest_entry in &manifest.entries {
        let id = manifest_entry.id.clone();
        let result = if builtin_ids.contains(&id) || seen.contains(&id) {
            Err(PoolError::DuplicateId(id.clone()))
        } else {
            bind_manifest_entry(manifest_entry, registry).and_then(|entry| verify_entry(&entry))
        };
        seen.push(id.clone());
        reports.push((id, result));
    }
    reports
}

fn bind_entry(spec: InstructionSpec, registry: &SemanticsRegistry) -> Result<PoolEntry, PoolError> {
    let semantics = registry
        .get(&spec.id)
        .ok_or_else(|| PoolError::UnresolvedInstruction(spec.id.clone()))?;
    Ok(PoolEntry { spec, semantics })
}

fn bind_manifest_entry(
    manifest_entry: &ManifestEntry,
    registry: &SemanticsRegistry,
) -> Result<PoolEntry, PoolError> {
    if manifest_entry.display_index == 0 {
        return Err(PoolError::InvalidDisplayIndex {
            id: manifest_entry.id.clone(),
        });
    }
    let mut test_vectors = Vec::new();
    for vector in &manifest_entry.test_vectors {
        test_vectors.push((
            vector.input.to_value(&manifest_entry.id)?,
            vector.out.to_value(&manifest_entry.id)?,
        ));
    }
    let spec = InstructionSpec {
        id: manifest_entry.id.clone(),
        display_index: manifest_entry.display_index,
        input_type: manifest_entry.input_type,
        output_type: manifest_entry.output_type,
        length_effect: manifest_entry.length_effect,
        nl_text: manifest_entry.nl_text.clone(),
        code_snippets: manifest_entry.code_snippets.clone(),
        test_vectors,
    };
    bind_entry(spec, registry)
}

/// Checks snippet completeness and re-executes every test vector.
fn verify_entry(entry: &PoolEntry) -> Result<(), PoolError> {
    let spec = &entry.spec;
    for language in Language::ALL {
        if !spec.code_snippets.contains_key(&language) {
            return Err(PoolError::MissingSnippet {
                id: spec.id.clone(),
                language,
            });
        }
    }
    for (index, (input, expected)) in spec.test_vectors.iter().enumerate() {
        let mismatch = |got: String| PoolError::VectorMismatch {
            id: spec.id.clone(),
            index,
            expected: expected.render(),
            got,
        };
        if input.kind() != spec.input_type {
            return Err(mismatch(format!("{} input", input.kind())));
        }
        match (entry.semantics)(input) {
            Ok(actual) if actual == *expected => {}
            Ok(actual) => return Err(mismatch(actual.render())),
            Err(error) => return Err(mismatch(error.to_string())),
        }
    }
    Ok(())
}

impl Pool {
    /// The built-in pool: exactly the 22 bundled instructions.
    pub fn builtin() -> Pool {
        load_pool(&PoolManifest::empty(), &SemanticsRegistry::with_builtins())
            .expect("built-in pool must load")
    }

    #[cfg(test)]
    pub(crate) fn from_entries(entries: Vec<PoolEntry>) -> Pool {
        Pool { entries }
    }

    pub fn entries(&self) -> &[PoolEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&PoolEntry> {
        self.entries.iter().find(|entry| entry.spec.id == id)
    }

    /// Instructions applicable to a value of type `current`, optionally
    /// biased toward a length effect and excluding one id (the previously
    /// applied instruction).
    ///
    /// The effect filter is advisory: when it would empty the list, the
    /// type-filtered list is returned instead. The exclusion always holds.
    /// Only a pool with no instruction for `current` at all yields
    /// [`PoolError::EmptyCandidates`]; the built-in pool covers all four
    /// type pairs.
    pub fn candidates(
        &self,
        current: ValueType,
        effect: Option<LengthEffect>,
        exclude: Option<&str>,
    ) -> Result<Vec<&PoolEntry>, PoolError> {
        let typed: Vec<&PoolEntry> = self
            .entries
            .iter()
            .filter(|entry| entry.spec.input_type == current)
            .collect();
        if typed.is_empty() {
            return Err(PoolError::EmptyCandidates {
                input_type: current,
            });
        }
        let available: Vec<&PoolEntry> = typed
            .into_iter()
            .filter(|entry| Some(entry.spec.id.as_str()) != exclude)
            .collect();
        if let Some(effect) = effect {
            let steered: Vec<&PoolEntry> = available
                .iter()
                .copied()
                .filter(|entry| entry.spec.length_effect == effect)
                .collect();
            if !steered.is_empty() {
                return Ok(steered);
            }
        }
        Ok(available)
    }
}
