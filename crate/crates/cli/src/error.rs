use hopfgal_core::Error as CoreError;
use thiserror::Error;

/// Failures that abort a command before any report is produced.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> CliError {
        CliError::Input(msg.into())
    }

    /// Wraps a core error raised while building the object at `path`.
    pub fn at(path: &str, e: CoreError) -> CliError {
        let msg = match e {
            CoreError::Input(m) => m,
            other => other.to_string(),
        };
        CliError::Input(format!("{path}: {msg}"))
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
