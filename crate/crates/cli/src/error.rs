use std::path::PathBuf;

use symsig_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed file {path}: {message}")]
    Format { path: PathBuf, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    /// 2 input error, 3 resource limit, 4 internal consistency failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(
                CoreError::ResourceLimitExceeded { .. } | CoreError::ClosureCapExceeded { .. },
            ) => 3,
            CliError::Core(
                CoreError::DisagreementBetweenMethods(_)
                | CoreError::Internal(_)
                | CoreError::NonIntegerCoefficient { .. },
            ) => 4,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
