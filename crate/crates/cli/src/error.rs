use std::process::ExitCode;

use thiserror::Error;

/// Exit status of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    /// A verification failed: a fuzz mismatch, an invalid path handed to
    /// `check`, or a solver failure.
    Failed = 1,
    Usage = 2,
    /// A forbidden condition held and `--strict` was given.
    Forbidden = 3,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> ExitCode {
        ExitCode::from(s as u8)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Solver(#[from] supergrid::Error),

    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },

    #[error("line {line}: {source}")]
    Instance {
        line: usize,
        source: serde_json::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Write(#[from] std::io::Error),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Solver(
                supergrid::Error::InvalidShape(_)
                | supergrid::Error::OutOfShape(_)
                | supergrid::Error::Precondition(_)
                | supergrid::Error::Budget(_),
            ) => Status::Usage,
            CliError::Solver(_) | CliError::Write(_) => Status::Failed,
            CliError::Usage(_)
            | CliError::Read { .. }
            | CliError::Instance { .. }
            | CliError::Json(_) => Status::Usage,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
