use eigmatch_core::{AlgebraError, FamilyError, GraphError, ParseError, SpectralError};
use eigmatch_harness::HarnessError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("invalid eigenvalue: {0}")]
    Lambda(#[from] AlgebraError),
    #[error("not an eigenvalue of the input graph")]
    NotAnEigenvalue,
    #[error("{0}")]
    Family(#[from] FamilyError),
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Spectral(SpectralError),
    #[error("{0}")]
    Harness(#[from] HarnessError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("output error: {0}")]
    Output(String),
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        match e {
            SpectralError::NotAnEigenvalue => CliError::NotAnEigenvalue,
            other => CliError::Spectral(other),
        }
    }
}

impl CliError {
    /// 2 for bad input, 3 for a value that is not an eigenvalue, 4 for
    /// runtime failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Lambda(_) | CliError::Family(_) | CliError::Graph(_) => 2,
            CliError::Harness(HarnessError::UnknownCheck(_) | HarnessError::Config(_) | HarnessError::Graph6 { .. }) => 2,
            CliError::NotAnEigenvalue => 3,
            _ => 4,
        }
    }
}
