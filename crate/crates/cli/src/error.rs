use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },

    #[error("invalid channel, row {row}: {msg}")]
    Invariant { row: usize, msg: String },

    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },

    #[error("{0} check(s) failed")]
    ChecksFailed(usize),

    #[error(transparent)]
    Numeric(#[from] e0_extremal::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) | Self::Parse { .. } | Self::Invariant { .. } | Self::Io { .. } => 1,
            Self::ChecksFailed(_) => 2,
            Self::Numeric(_) => 3,
        }
    }

    pub fn io(path: impl Into<String>, source: io::Error) -> Self {
        Self::Io { path: path.into(), source }
    }
}

pub type CliResult<T> = Result<T, CliError>;
