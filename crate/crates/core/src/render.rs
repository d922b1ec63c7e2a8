//! Prompt construction from templates.
//!
//! Two templates are bundled as assets: a single-prompt form listing every
//! instruction up front, and a chat form that delivers one instruction per
//! user turn. Instructions render either as natural-language text or as a
//! code snippet in the benchmark's programming language. Any template edit
//! is a format change and must bump [`crate::FORMAT_VERSION`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pool::{InstructionSpec, Language};
use crate::value::Value;

/// The Prompt-mode template. Placeholders: `{prog_lang}`,
/// `{n_instructions}`, `{input_string}`, `{inst_string}`.
pub const PROMPT_TEMPLATE: &str = include_str!("../data/templates/prompt_mode.txt");

/// The Chat-mode template for the opening turn. Placeholders: `{prog_lang}`,
/// `{input_string}`, `{first_instruction}`.
pub const CHAT_TEMPLATE: &str = include_str!("../data/templates/chat_mode.txt");

/// How a sample reaches the model: one prompt carrying the whole chain, or
/// one chat turn per instruction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Prompt,
    Chat,
}

/// How instructions are phrased: code snippets or natural language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InstructionType {
    Code,
    Nl,
}

/// A rendered sample: the full prompt text, or the ordered user turns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RenderedPrompt {
    #[serde(rename = "prompt")]
    Prompt(String),
    #[serde(rename = "turns")]
    Chat(Vec<String>),
}

impl RenderedPrompt {
    pub fn mode(&self) -> Mode {
        match self {
            RenderedPrompt::Prompt(_) => Mode::Prompt,
            RenderedPrompt::Chat(_) => Mode::Chat,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("instruction index must be at least 1")]
    ZeroIndex,
    #[error("instruction `{id}` has no snippet for {language:?}")]
    MissingSnippet { id: String, language: Language },
    #[error("cannot render an empty chain")]
    EmptyChain,
}

/// Renders one instruction as a numbered block: a header line
/// `Instruction {index}:`, the body, then a blank line. `index` is
/// 1-based display numbering, not a chain offset.
pub fn render_instruction(
    spec: &InstructionSpec,
    index: usize,
    language: Language,
    instruction_type: InstructionType,
) -> Result<String, RenderError> {
    if index == 0 {
        return Err(RenderError::ZeroIndex);
    }
    let body = match instruction_type {
        InstructionType::Nl => spec.nl_text.trim_end(),
        InstructionType::Code => spec
            .code_snippets
            .get(&language)
            .ok_or_else(|| RenderError::MissingSnippet {
                id: spec.id.clone(),
                language,
            })?
            .trim_end(),
    };
    Ok(format!("Instruction {index}:\n{body}\n\n"))
}

/// Instantiates the mode's template for one sample.
///
/// The initial value renders as its decimal digits (numbers) or raw
/// characters (text), unquoted either way. `{inst_string}` is substituted
/// last so instruction bodies are never re-scanned for placeholders.
pub fn render(
    chain: &[&InstructionSpec],
    initial: &Value,
    language: Language,
    mode: Mode,
    instruction_type: InstructionType,
) -> Result<RenderedPrompt, RenderError> {
    if chain.is_empty() {
        return Err(RenderError::EmptyChain);
    }
    match mode {
        Mode::Prompt => {
            let mut inst_string = String::new();
            for (offset, spec) in chain.iter().enumerate() {
                inst_string.push_str(&render_instruction(
                    spec,
                    offset + 1,
                    language,
                    instruction_type,
                )?);
            }
            let text = PROMPT_TEMPLATE
                .replace("{prog_lang}", language.display_name())
                .replace("{n_instructions}", &chain.len().to_string())
                .replace("{input_string}", &initial.render())
                .replace("{inst_string}", inst_string.trim_end());
            Ok(RenderedPrompt::Prompt(text))
        }
        Mode::Chat => {
            let first = render_instruction(chain[0], 1, language, instruction_type)?;
            let opening = CHAT_TEMPLATE
                .replace("{prog_lang}", language.display_name())
                .replace("{input_string}", &initial.render())
                .replace("{first_instruction}", first.trim_end());
            let mut turns = vec![opening];
            for (offset, spec) in chain.iter().enumerate().skip(1) {
                let turn = render_instruction(spec, offset + 1, language, instruction_type)?;
                turns.push(turn.trim_end().to_string());
            }
            Ok(RenderedPrompt::Chat(turns))
        }
    }
}
