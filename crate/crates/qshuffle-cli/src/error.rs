use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] qshuffle::error::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Exit code when a check fails.
pub const EXIT_FAILURE: i32 = 1;
/// Exit code for usage errors and anything that stops a command before it can report.
pub const EXIT_USAGE: i32 = 2;
