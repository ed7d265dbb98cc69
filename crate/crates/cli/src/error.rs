use std::process::ExitCode;

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Validation = 1,
    OracleMismatch = 2,
    ToleranceBreach = 3,
    Internal = 4,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        ExitCode::from(s as u8)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Validation(String),
    #[error(transparent)]
    Core(#[from] graphspec_core::Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn status(&self) -> Status {
        use graphspec_core::Error as E;
        match self {
            CliError::Validation(_) => Status::Validation,
            CliError::Core(E::NoConvergence { .. } | E::TraceMismatch { .. }) => Status::Internal,
            CliError::Core(_) => Status::Validation,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => Status::Internal,
        }
    }
}
