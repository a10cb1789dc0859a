use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("set has no elements in [1, {bound}]")]
    EmptyWindow { bound: u64 },

    #[error("bound {requested} exceeds the materialized window {window}")]
    WindowExceeded { requested: u64, window: u64 },

    #[error("factor length {n} exceeds word length {len}")]
    OutOfRange { n: usize, len: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("function is defined off the set: {0}")]
    Domain(String),

    #[error("refused: {reason}")]
    Refused { reason: String },

    #[error("construction failed at level {level}: {reason}")]
    Construction { level: usize, reason: String },

    #[error("enumeration of {words} words exceeds the limit {limit}")]
    EnumerationLimit { words: u128, limit: u128 },
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
