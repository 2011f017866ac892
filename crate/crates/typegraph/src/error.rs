use std::io;
use std::path::PathBuf;

pub type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] typegraph_core::Error),
    #[error("invalid argument: {0}")]
    Usage(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{}: {source}", path.display())]
    File { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// Process exit status: 2 for invalid input, 4 for an exhausted budget,
    /// 1 for IO and serialisation failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(typegraph_core::Error::BudgetExceeded { .. }) => 4,
            CliError::Core(_) | CliError::Usage(_) | CliError::Parse { .. } => 2,
            CliError::File { .. } | CliError::Io(_) | CliError::Json(_) | CliError::Csv(_) => 1,
        }
    }
}
