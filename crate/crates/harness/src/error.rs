use std::path::PathBuf;

use eigmatch_core::ParseError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("order {n} outside the supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{path}:{line}: {source}")]
    Graph6 { path: PathBuf, line: usize, source: ParseError },
    #[error("i/o error on {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("could not serialize report: {0}")]
    Serialize(String),
}
