//! Ground-truth execution of instruction chains.
//!
//! [`apply`] runs one instruction with strict type checking on both sides of
//! the call; [`run_chain`] folds a whole chain and records every intermediate
//! value in a [`Trace`]. [`length_metric`] is the size measure the generator
//! steers by: character count for text, bit length for numbers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pool::{Pool, PoolEntry};
use crate::value::{Value, ValueType};

/// Failure of a single instruction application.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApplyError {
    #[error("instruction `{id}` expected a {expected} input, got a {got}")]
    TypeMismatch {
        id: String,
        expected: ValueType,
        got: ValueType,
    },
    #[error("instruction `{id}` rejected input {value:?}")]
    PreconditionViolated { id: String, value: Value },
}

/// Failure of a chain execution, located at the offending step.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("step {step}: unknown instruction `{id}`")]
    UnknownInstruction { step: usize, id: String },
    #[error("step {step}: {source}")]
    Apply {
        step: usize,
        #[source]
        source: ApplyError,
    },
}

/// Every value a chain passes through: `steps[0]` is the initial value,
/// `steps[k]` the output of instruction `k - 1`. Serializes as the bare
/// step array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Trace {
    pub steps: Vec<Value>,
}

impl Trace {
    /// The chain's final value.
    pub fn final_value(&self) -> &Value {
        self.steps
            .last()
            .expect("trace always holds the initial value")
    }

    /// Outputs only, in instruction order (the initial value is skipped).
    pub fn outputs(&self) -> &[Value] {
        &self.steps[1..]
    }
}

/// Runs one instruction, checking the input type before the semantics and
/// the output type after.
pub fn apply(entry: &PoolEntry, input: &Value) -> Result<Value, ApplyError> {
    let spec = &entry.spec;
    if input.kind() != spec.input_type {
        return Err(ApplyError::TypeMismatch {
            id: spec.id.clone(),
            expected: spec.input_type,
            got: input.kind(),
        });
    }
    let output = (entry.semantics)(input)?;
    if output.kind() != spec.output_type {
        return Err(ApplyError::TypeMismatch {
            id: spec.id.clone(),
            expected: spec.output_type,
            got: output.kind(),
        });
    }
    Ok(output)
}

/// Folds `ids` over `initial`, recording every intermediate value.
pub fn run_chain(pool: &Pool, initial: &Value, ids: &[String]) -> Result<Trace, ChainError> {
    let mut steps = Vec::with_capacity(ids.len() + 1);
    steps.push(initial.clone());
    let mut current = initial.clone();
    for (step, id) in ids.iter().enumerate() {
        let entry = pool.get(id).ok_or_else(|| ChainError::UnknownInstruction {
            step,
            id: id.clone(),
        })?;
        current = apply(entry, &current).map_err(|source| ChainError::Apply { step, source })?;
        steps.push(current.clone());
    }
    Ok(Trace { steps })
}

/// Size measure for steering: characters for text, bit length for numbers
/// (`length_metric(0) == 1` so the metric never reports an empty number).
pub fn length_metric(value: &Value) -> u64 {
    match value {
        Value::Text(s) => s.chars().count() as u64,
        Value::Number(n) => n.bits().max(1),
    }
}
