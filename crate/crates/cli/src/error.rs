use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("cannot write output: {0}")]
    Write(#[from] std::io::Error),

    #[error("invalid molecule file {path}: {message}")]
    Parse { path: PathBuf, message: String },

    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Model(#[from] morse_nu::Error),
}

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const IO_OR_PARSE: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const TOLERANCE: u8 = 3;
    pub const SOLVER: u8 = 4;
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Write(_) | CliError::Parse { .. } => exit::IO_OR_PARSE,
            CliError::Usage(_) => exit::USAGE,
            CliError::Model(_) => exit::SOLVER,
        }
    }
}
