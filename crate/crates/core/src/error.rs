use thiserror::Error;

use crate::verify::VerificationReport;

pub type Result<T, E = PdaError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum PdaError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("not a placement delivery array: {}", .0.summary())]
    InvalidGrid(Box<VerificationReport>),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogId(String),

    #[error("protocol violation at node {node}, row {row}: {message}")]
    ProtocolViolation { node: usize, row: usize, message: String },
}
