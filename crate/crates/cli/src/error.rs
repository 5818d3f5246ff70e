use banddet::Error;

/// A failed run, carrying its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::InvalidSpec(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::LengthMismatch { .. }
            | Error::ZeroLeadingCoefficient
            | Error::ZeroTrailingCoefficient
            | Error::NoSuperdiagonal
            | Error::ModulusDividesLeadingCoefficient { .. }
            | Error::ModulusDividesDenominator { .. }
            | Error::NotTridiagonal { .. } => CliError::InvalidSpec(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
