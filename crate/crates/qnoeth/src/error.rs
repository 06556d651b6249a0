use std::path::PathBuf;

use thiserror::Error;

/// A parse failure, with the 1-based line it occurred on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl FormatError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        FormatError {
            line,
            message: message.into(),
        }
    }
}

/// Everything that makes a command exit with status 2.
#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format {
        path: PathBuf,
        #[source]
        source: FormatError,
    },
    #[error("{0}")]
    Model(qnoeth_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl From<qnoeth_core::Error> for InputError {
    fn from(e: qnoeth_core::Error) -> Self {
        InputError::Model(e)
    }
}
