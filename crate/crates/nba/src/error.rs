use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error("malformed JSON in {}: {source}", path.display())]
    Json { path: PathBuf, source: serde_json::Error },

    #[error(transparent)]
    Invalid(#[from] nba_core::Error),

    #[error("{0}")]
    Format(String),
}

impl CliError {
    /// 2 for usage and file errors, 1 for objects that load but are invalid.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Json { .. } => 2,
            CliError::Invalid(_) | CliError::Format(_) => 1,
        }
    }
}
