use std::io;
use std::path::PathBuf;

use seqcolor::chromatic_sum::SumError;
use seqcolor::coloring::{AcquireError, ColoringError};
use seqcolor::oracle::OracleError;
use seqcolor::{GraphError, SequentialError};
use thiserror::Error;

/// Exit statuses. Every failure maps to a nonzero code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Ok = 0,
    VerificationFailed = 1,
    Invalid = 2,
    ClassTwo = 3,
    Unknown = 4,
    Io = 5,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("reading standard input: {0}")]
    Stdin(io::Error),
    #[error("writing output: {0}")]
    Write(io::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Sequential(#[from] SequentialError),
    #[error(transparent)]
    Acquire(#[from] AcquireError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
}

impl From<SumError> for CliError {
    fn from(e: SumError) -> Self {
        match e {
            SumError::Sequential(e) => e.into(),
            SumError::Oracle(e) => e.into(),
            SumError::Coloring(e) => e.into(),
            violation @ SumError::ChainViolation { .. } => CliError::Failed(violation.to_string()),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Io { .. } | CliError::Stdin(_) | CliError::Write(_) => ExitCode::Io,
            CliError::Failed(_) => ExitCode::VerificationFailed,
            CliError::Acquire(e) | CliError::Sequential(SequentialError::Acquire(e)) => match e {
                AcquireError::ClassTwo { .. } => ExitCode::ClassTwo,
                AcquireError::Unknown { .. } => ExitCode::Unknown,
            },
            CliError::Graph(_)
            | CliError::Coloring(_)
            | CliError::Sequential(_)
            | CliError::Oracle(_)
            | CliError::Usage(_) => ExitCode::Invalid,
        }
    }
}
