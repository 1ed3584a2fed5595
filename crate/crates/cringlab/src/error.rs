//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("unknown reference: {0}")]
    UnknownReference(String),
    #[error("duplicate name: {0}")]
    DuplicateName(String),
    #[error("dimension {dim} of {what} exceeds the cap {cap}")]
    DimensionCap { what: String, dim: usize, cap: usize },
    #[error("not a coideal: {0}")]
    NotACoideal(String),
    #[error("not a coalgebra map: {0}")]
    NotACoalgebraMap(String),
    #[error("structure checks failed: {0}")]
    ChecksFailed(String),
    #[error("context not verified: {0}")]
    ContextNotVerified(String),
    #[error("firmness failure: {0}")]
    NotFirm(String),
    #[error("unknown command: {0}")]
    UnknownCommand(String),
    #[error("enumeration refused: {0}")]
    EnumerationRefused(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
