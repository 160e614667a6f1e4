use oadlc_core::error::Error as CoreError;

/// Failure of a CLI command, carrying its process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unreadable or malformed configuration, or inconsistent arguments.
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Infeasible(String),
    #[error("{0}")]
    Numeric(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Infeasible(_) => 3,
            CliError::Numeric(_) => 4,
        }
    }

    /// A library error raised while building inputs from the configuration.
    pub fn invalid(key: &str, err: CoreError) -> Self {
        CliError::Config(format!("{key}: {err}"))
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        match err {
            CoreError::Infeasible(_) | CoreError::FabricationLimit { .. } => CliError::Infeasible(err.to_string()),
            CoreError::DegenerateBox(_) | CoreError::DegenerateGeometry(_) => CliError::Config(err.to_string()),
            CoreError::Domain(_) | CoreError::PatternFormat(_) => CliError::Numeric(err.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err.to_string())
    }
}
