use flagcav_core::FlagError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] FlagError),
    #[error("{0}")]
    Usage(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("write: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for bad input, 3 for anything that points at the program itself.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_input() => 2,
            CliError::Usage(_) => 2,
            _ => 3,
        }
    }
}
