use std::path::PathBuf;

use chrono::NaiveDateTime;
use thiserror::Error;

use crate::building::ValidationError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: invalid JSON: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("{path}: invalid TOML: {message}")]
    Toml { path: PathBuf, message: String },

    #[error("unsupported schema version {found:?} (expected {expected:?})")]
    SchemaVersion { found: String, expected: String },

    #[error("building description is invalid:\n{}", format_validation(.0))]
    Validation(Vec<ValidationError>),

    #[error("line {line}: {message}")]
    Malformed { line: u64, message: String },

    #[error("line {line}: timestamp {timestamp} is not after the previous record")]
    NonMonotonic { line: u64, timestamp: NaiveDateTime },

    #[error("line {line}: {field} = {value} is outside [{min}, {max}]")]
    OutOfRange {
        line: u64,
        field: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("weather series has {} missing hour(s): {}", .0.len(), format_hours(.0))]
    WeatherGaps(Vec<NaiveDateTime>),

    #[error("{0}")]
    InvalidInput(String),

    #[error("catalogue checksum mismatch: expected {expected}, computed {computed}")]
    Checksum { expected: String, computed: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

fn format_validation(errors: &[ValidationError]) -> String {
    errors.iter().map(|e| format!("  - {e}")).collect::<Vec<_>>().join("\n")
}

fn format_hours(hours: &[NaiveDateTime]) -> String {
    const SHOWN: usize = 10;
    let mut listed: Vec<String> = hours
        .iter()
        .take(SHOWN)
        .map(|h| h.format("%Y-%m-%dT%H:%M").to_string())
        .collect();
    if hours.len() > SHOWN {
        listed.push(format!("... ({} more)", hours.len() - SHOWN));
    }
    listed.join(", ")
}
