//! Crate-wide error type. Verdicts (holds / fails / indeterminate) are values,
//! not errors; an `Error` means the inputs were unusable or a configured bound
//! was exceeded, never "the property fails".

use thiserror::Error;

/// A single violated law, naming the offending tuple.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Violation {
    pub law: String,
    pub tuple: Vec<String>,
}

impl Violation {
    pub fn new(law: impl Into<String>, tuple: &[&str]) -> Self {
        Violation {
            law: law.into(),
            tuple: tuple.iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} at ({})", self.law, self.tuple.join(", "))
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("validation failed: {}", format_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("search bound exceeded: {0}")]
    SearchBound(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

impl Error {
    pub fn schema(msg: impl Into<String>) -> Self {
        Error::Schema(msg.into())
    }

    pub fn dimension(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub fn not_applicable(msg: impl Into<String>) -> Self {
        Error::NotApplicable(msg.into())
    }

    pub fn invalid(violations: Vec<Violation>) -> Self {
        Error::Invalid(violations)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
