use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    /// Structural problem in an input file (missing section, ragged rows, ...).
    #[error("format error at line {line}: {message}")]
    Format { line: usize, message: String },
    /// A token that should be a number is not one.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// An operation was called on an object that is not in the right state,
    /// e.g. transforming with an unfitted SFA configuration.
    #[error("invalid state: {0}")]
    State(String),
    #[error("unsupported model version {found} (expected {expected})")]
    UnsupportedVersion { found: u64, expected: u64 },
    #[error("model file error: {0}")]
    Model(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
