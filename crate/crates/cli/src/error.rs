use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Input {
        path: PathBuf,
        #[source]
        source: ksi_core::Error,
    },
    #[error(transparent)]
    Core(#[from] ksi_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
    #[error("serializing output: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

fn core_code(e: &ksi_core::Error) -> i32 {
    use ksi_core::Error::*;
    match e {
        NoConvergence(_) => 1,
        EndpointOutOfRange { .. }
        | NodeOutOfRange { .. }
        | Parse { .. }
        | Parameter(_)
        | UndefinedInput(_)
        | Capacity { .. }
        | NotGraphical(_) => 2,
    }
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    /// 2 for anything the caller can fix by changing the invocation or the
    /// input file, 1 for failures while running.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input { source, .. } | CliError::Core(source) => core_code(source),
            CliError::Io { source, .. } if source.kind() == std::io::ErrorKind::NotFound => 2,
            CliError::Io { .. } | CliError::Output(_) | CliError::Json(_) => 1,
        }
    }
}
