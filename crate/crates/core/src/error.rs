use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid path: {msg} (step {index})")]
    InvalidPath { index: usize, msg: String },
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("invalid tiling: {0}")]
    InvalidTiling(String),
    #[error("outside the supported domain: {0}")]
    Domain(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("size bound exceeded: {what} = {got} > {max}")]
    TooLarge { what: &'static str, got: usize, max: usize },
    #[error("inexact division: {0}")]
    Inexact(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
