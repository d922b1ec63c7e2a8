//! Model inference: a chat-completions HTTP client with bounded
//! concurrency, plus a replay source for fully offline evaluation.
//!
//! The public entry point blocks and returns one response per sample in
//! sample order, whatever the completion order was, so downstream files
//! are a pure function of (benchmark, response source). Transient
//! transport failures retry with exponential backoff; a sample that
//! exhausts its retries is recorded as a transport error, never dropped.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use futures::stream::{self, StreamExt};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::generator::Benchmark;
use crate::render::RenderedPrompt;

/// Connection parameters for a chat-completions-style endpoint.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelEndpointConfig {
    pub base_url: String,
    pub model_name: String,
    /// Name of the environment variable holding the API key; empty means
    /// the endpoint needs no authentication. The key itself never appears
    /// in config files.
    #[serde(default)]
    pub api_key_env: String,
    #[serde(default = "default_max_in_flight")]
    pub max_in_flight: u32,
    #[serde(default = "default_max_retries")]
    pub max_retries: u32,
    #[serde(default = "default_timeout_secs")]
    pub timeout_secs: f64,
    #[serde(default)]
    pub temperature: f64,
    #[serde(default)]
    pub max_output_tokens: Option<u32>,
}

fn default_max_in_flight() -> u32 {
    4
}

fn default_max_retries() -> u32 {
    2
}

fn default_timeout_secs() -> f64 {
    30.0
}

impl ModelEndpointConfig {
    pub fn validate(&self) -> Result<(), InferenceError> {
        if self.base_url.is_empty() {
            return Err(InferenceError::InvalidConfig(
                "base_url must be set".to_string(),
            ));
        }
        if self.max_in_flight == 0 {
            return Err(InferenceError::InvalidConfig(
                "max_in_flight must be at least 1".to_string(),
            ));
        }
        if self.timeout_secs <= 0.0 || self.timeout_secs.is_nan() {
            return Err(InferenceError::InvalidConfig(
                "timeout_secs must be positive".to_string(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResponseStatus {
    Ok,
    TransportError,
}

/// One model answer, or the record of failing to get one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelResponse {
    pub sample_id: String,
    pub status: ResponseStatus,
    /// Full response text (Prompt mode).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    /// Assistant reply per turn (Chat mode).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub turns: Option<Vec<String>>,
    pub latency_secs: f64,
    pub attempt_count: u32,
}

impl ModelResponse {
    fn transport_failure(sample_id: &str, latency_secs: f64, attempt_count: u32) -> Self {
        ModelResponse {
            sample_id: sample_id.to_string(),
            status: ResponseStatus::TransportError,
            text: None,
            turns: None,
            latency_secs,
            attempt_count,
        }
    }
}

/// Where responses come from: a live endpoint, or a previously written
/// responses file keyed by sample id.
pub enum ResponseSource {
    Endpoint(ModelEndpointConfig),
    Replay(BTreeMap<String, ModelResponse>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InferenceError {
    #[error("endpoint config invalid: {0}")]
    InvalidConfig(String),
    #[error("environment variable {0} is not set (it must hold the API key)")]
    MissingApiKey(String),
}

/// Obtains one response per sample, in sample order.
///
/// Replay sources look each sample up by id; ids absent from the replay
/// map become transport errors. Endpoint sources run up to
/// `max_in_flight` samples concurrently on an internal runtime; this
/// call itself blocks until every sample is settled.
pub fn run_inference(
    benchmark: &Benchmark,
    source: &ResponseSource,
) -> Result<Vec<ModelResponse>, InferenceError> {
    match source {
        ResponseSource::Replay(map) => Ok(benchmark
            .samples
            .iter()
            .map(|sample| {
                map.get(&sample.sample_id)
                    .cloned()
                    .unwrap_or_else(|| ModelResponse::transport_failure(&sample.sample_id, 0.0, 0))
            })
            .collect()),
        ResponseSource::Endpoint(config) => {
            config.validate()?;
            let api_key = if config.api_key_env.is_empty() {
                None
            } else {
                Some(
                    std::env::var(&config.api_key_env)
                        .map_err(|_| InferenceError::MissingApiKey(config.api_key_env.clone()))?,
                )
            };
            let runtime = tokio::runtime::Builder::new_multi_thread()
                .enable_all()
                .build()
                .expect("tokio runtime construction");
            runtime.block_on(async {
                let client = reqwest::Client::builder()
                    .timeout(Duration::from_secs_f64(config.timeout_secs))
                    .build()
                    .expect("reqwest client construction");
                let mut indexed: Vec<(usize, ModelResponse)> = stream::iter(
                    benchmark.samples.iter().enumerate(),
                )
                .map(|(position, sample)| {
                    let client = client.clone();
                    let api_key = api_key.as_deref();
                    async move { (position, run_sample(&client, config, api_key, sample).await) }
                })
                .buffer_unordered(config.max_in_flight as usize)
                .collect()
                .await;
                indexed.sort_by_key(|(position, _)| *position);
                Ok(indexed.into_iter().map(|(_, response)| response).collect())
            })
        }
    }
}

#[derive(Serialize, Clone)]
struct ChatMessage {
    role: &'static str,
    content: String,
}

#[derive(Serialize)]
struct ChatRequest<'a> {
    model: &'a str,
    messages: &'a [ChatMessage],
    temperature: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_tokens: Option<u32>,
}

#[derive(Deserialize)]
struct ChatCompletion {
    choices: Vec<ChatChoice>,
}

#[derive(Deserialize)]
struct ChatChoice {
    message: ChatReply,
}

#[derive(Deserialize)]
struct ChatReply {
    content: String,
}

async fn run_sample(
    client: &reqwest::Client,
    config: &ModelEndpointConfig,
    api_key: Option<&str>,
    sample: &crate::generator::Sample,
) -> ModelResponse {
    let start = Instant::now();
    let mut attempts = 0u32;
    match &sample.rendered {
        RenderedPrompt::Prompt(text) => {
            let messages = [ChatMessage {
                role: "user",
                content: text.clone(),
            }];
            match request_with_retries(client, config, api_key, &messages, &mut attempts).await {
                Ok(reply) => ModelResponse {
                    sample_id: sample.sample_id.clone(),
                    status: ResponseStatus::Ok,
                    text: Some(reply),
                    turns: None,
                    latency_secs: start.elapsed().as_secs_f64(),
                    attempt_count: attempts,
                },
                Err(()) => ModelResponse::transport_failure(
                    &sample.sample_id,
                    start.elapsed().as_secs_f64(),
                    attempts,
                ),
            }
        }
        RenderedPrompt::Chat(user_turns) => {
            let mut messages: Vec<ChatMessage> = Vec::with_capacity(user_turns.len() * 2);
            let mut replies = Vec::with_capacity(user_turns.len());
            for turn in user_turns {
                messages.push(ChatMessage {
                    role: "user",
                    content: turn.clone(),
                });
                match request_with_retries(client, config, api_key, &messages, &mut attempts).await
                {
                    Ok(reply) => {
                        replies.push(reply.clone());
                        messages.push(ChatMessage {
                            role: "assistant",
                            content: reply,
                        });
                    }
                    Err(()) => {
                        return ModelResponse::transport_failure(
                            &sample.sample_id,
                            start.elapsed().as_secs_f64(),
                            attempts,
                        );
                    }
                }
            }
            ModelResponse {
                sample_id: sample.sample_id.clone(),
                status: ResponseStatus::Ok,
                text: None,
                turns: Some(replies),
                latency_secs: start.elapsed().as_secs_f64(),
                attempt_count: attempts,
            }
        }
    }
}

async fn request_with_retries(
    client: &reqwest::Client,
    config: &ModelEndpointConfig,
    api_key: Option<&str>,
    messages: &[ChatMessage],
    attempts: &mut u32,
) -> Result<String, ()> {
    let mut delay = Duration::from_millis(250);
    for attempt in 0..=config.max_retries {
        *attempts += 1;
        match send_once(client, config, api_key, messages).await {
            Ok(content) => return Ok(content),
            Err(retryable) => {
                if !retryable || attempt == config.max_retries {
                    return Err(());
                }
                tokio::time::sleep(delay).await;
                delay *= 2;
            }
        }
    }
    Err(())
}

/// One HTTP round trip. The error payload says whether retrying could
/// help: timeouts, connection failures, 429, and 5xx are transient;
/// anything else (other 4xx, malformed body) is final.
async fn send_once(
    client: &reqwest::Client,
    config: &ModelEndpointConfig,
    api_key: Option<&str>,
    messages: &[ChatMessage],
) -> Result<String, bool> {
    let url = format!("{}/chat/completions", config.base_url.trim_end_matches('/'));
    let body = ChatRequest {
        model: &config.model_name,
        messages,
        temperature: config.temperature,
        max_tokens: config.max_output_tokens,
    };
    let mut request = client.post(url).json(&body);
    if let Some(key) = api_key {
        request = request.bearer_auth(key);
    }
    let response = request
        .send()
        .await
        .map_err(|error| error.is_timeout() || error.is_connect())?;
    let status = response.status();
    if !status.is_success() {
        return Err(status.is_server_error() || status.as_u16() == 429);
    }
    let completion: ChatCompletion = response.json().await.map_err(|_| false)?;
    let choice = completion.choices.into_iter().next().ok_or(false)?;
    Ok(choice.message.content)
}

/// Builds the responses a flawless model would give, straight from the
/// expected traces. Useful for round-trip tests and for exercising the
/// evaluate pipeline offline.
pub fn perfect_responses(benchmark: &Benchmark) -> Vec<ModelResponse> {
    benchmark
        .samples
        .iter()
        .map(|sample| {
            let answers: Vec<String> = sample
                .expected
                .outputs()
                .iter()
                .enumerate()
                .map(|(i, value)| format!("[ANSWER][{}] {} [\\ANSWER]", i + 1, value.render()))
                .collect();
            let (text, turns) = match sample.rendered {
                RenderedPrompt::Prompt(_) => (Some(answers.join("\n") + "\n"), None),
                RenderedPrompt::Chat(_) => (None, Some(answers)),
            };
            ModelResponse {
                sample_id: sample.sample_id.clone(),
                status: ResponseStatus::Ok,
                text,
                turns,
                latency_secs: 0.0,
                attempt_count: 0,
            }
        })
        .collect()
}
