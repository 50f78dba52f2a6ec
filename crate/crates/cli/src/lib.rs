//! Library side of the `preassoc` command-line tool.

pub mod commands;
pub mod format;
pub mod report;

use std::path::PathBuf;

use thiserror::Error;

use preassoc::{EnumerateError, FactorizeError, FamilyError, QuasiInverseError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

/// Input and usage errors; all map to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("field `{field}`: {message}")]
    Invalid { field: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Factorize(#[from] FactorizeError),
    #[error(transparent)]
    QuasiInverse(#[from] QuasiInverseError),
}
