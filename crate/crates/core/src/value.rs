//! The payload type flowing through instruction chains.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// The two kinds of values an instruction can consume or produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ValueType {
    #[serde(rename = "number")]
    Number,
    #[serde(rename = "string")]
    Text,
}

impl fmt::Display for ValueType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueType::Number => write!(f, "number"),
            ValueType::Text => write!(f, "string"),
        }
    }
}

/// A chain value: an arbitrary-precision signed integer or a text string.
///
/// Numbers are unbounded so that adversarial extension chains cannot
/// overflow the oracle. Framework-generated text is printable ASCII by
/// construction, but the type itself carries any Unicode string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Number(BigInt),
    Text(String),
}

impl Value {
    pub fn kind(&self) -> ValueType {
        match self {
            Value::Number(_) => ValueType::Number,
            Value::Text(_) => ValueType::Text,
        }
    }

    /// Builds a number value from any machine integer.
    pub fn number(n: impl Into<BigInt>) -> Self {
        Value::Number(n.into())
    }

    pub fn text(s: impl Into<String>) -> Self {
        Value::Text(s.into())
    }

    /// The canonical textual form used in prompts, answers, and files:
    /// decimal digits (with sign) for numbers, the raw characters for text.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Number(n) => write!(f, "{n}"),
            Value::Text(s) => write!(f, "{s}"),
        }
    }
}

/// Wire form of a [`Value`]: the kind tag plus the rendered string. Numbers
/// travel as decimal strings so arbitrary precision survives any JSON
/// parser.
#[derive(Serialize, Deserialize)]
struct ValueRepr {
    kind: ValueType,
    value: String,
}

impl Serialize for Value {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ValueRepr {
            kind: self.kind(),
            value: self.render(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ValueRepr::deserialize(deserializer)?;
        match repr.kind {
            ValueType::Text => Ok(Value::Text(repr.value)),
            ValueType::Number => repr
                .value
                .parse::<BigInt>()
                .map(Value::Number)
                .map_err(|_| {
                    serde::de::Error::custom(format!(
                        "number value {:?} is not a decimal integer",
                        repr.value
                    ))
                }),
        }
    }
}
