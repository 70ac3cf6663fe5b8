use std::fmt;
use std::process::ExitCode;

use cbord_core::Error;
use serde::Serialize;
use serde_json::Value;

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    PartialFailure = 1,
    InputError = 2,
    BudgetExceeded = 3,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        ExitCode::from(s as u8)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub status: Status,
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            status: Status::InputError,
            kind: "input",
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (status, kind) = match &e {
            Error::BudgetExceeded { .. } => (Status::BudgetExceeded, "budget"),
            Error::Parse { .. } => (Status::InputError, "parse"),
            Error::Hypothesis(_) => (Status::InputError, "hypothesis"),
            Error::GenusKind(_) => (Status::InputError, "genus_kind"),
            _ => (Status::InputError, "input"),
        };
        Self {
            status,
            kind,
            message: e.to_string(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorRecord {
    pub kind: &'static str,
    pub message: String,
    pub exit_code: u8,
}

/// The JSON envelope shared by every command.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    /// Normalized echo of the input.
    pub input: String,
    pub results: Value,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorRecord>,
}

impl Report {
    pub fn new(command: &str, input: impl Into<String>, results: Value) -> Self {
        Self {
            command: command.to_string(),
            input: input.into(),
            results,
            warnings: Vec::new(),
            error: None,
        }
    }

    pub fn failed(command: &str, input: impl Into<String>, err: &CliError) -> Self {
        Self {
            command: command.to_string(),
            input: input.into(),
            results: Value::Null,
            warnings: Vec::new(),
            error: Some(ErrorRecord {
                kind: err.kind,
                message: err.message.clone(),
                exit_code: err.status as u8,
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// A report plus its human-readable rendering.
pub struct Outcome {
    pub report: Report,
    pub text: String,
}
