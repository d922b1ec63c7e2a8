//! Host-side extension semantics and pool assembly.

use std::fs;
use std::path::Path;

use anyhow::Context;
use chainbench::pool::{load_pool, Pool, PoolManifest, SemanticsRegistry};
use chainbench::value::Value;

use crate::error::CliError;

/// The semantics this binary can bind manifest entries to: the built-ins
/// plus one demonstration extension, `reverse`, matching the entry shipped
/// in manifests/reverse.json. New instructions are added by registering
/// their implementation here and describing them in a manifest.
pub fn registry() -> SemanticsRegistry {
    let mut registry = SemanticsRegistry::with_builtins();
    registry.register("reverse", |value| match value {
        Value::Text(s) => Ok(Value::Text(s.chars().rev().collect())),
        Value::Number(_) => unreachable!("input type checked before semantics run"),
    });
    registry
}

/// Reads and parses an extension manifest file.
pub fn read_manifest(path: &Path) -> Result<PoolManifest, CliError> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read manifest {}", path.display()))
        .map_err(CliError::Usage)?;
    PoolManifest::from_json(&text)
        .map_err(anyhow::Error::from)
        .with_context(|| format!("manifest {} does not parse", path.display()))
        .map_err(CliError::Usage)
}

/// Builds the instruction pool, overlaying `manifest_path` when given.
pub fn load_overlay_pool(manifest_path: Option<&Path>) -> Result<Pool, CliError> {
    let manifest = match manifest_path {
        None => PoolManifest::empty(),
        Some(path) => read_manifest(path)?,
    };
    load_pool(&manifest, &registry()).map_err(CliError::usage)
}
