#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("{0}")]
    Io(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("invalid datum: {0}")]
    Datum(cmtate::Error),
    #[error("{0}")]
    Internal(cmtate::Error),
}

impl From<cmtate::Error> for CliError {
    fn from(e: cmtate::Error) -> Self {
        match e {
            cmtate::Error::InternalInconsistency(_) => CliError::Internal(e),
            other => CliError::Datum(other),
        }
    }
}

impl CliError {
    /// 1: malformed input or usage, 2: datum validation, 3: internal inconsistency.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Malformed(_) | CliError::Io(_) | CliError::Usage(_) => 1,
            CliError::Datum(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}
