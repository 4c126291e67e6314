use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid cyclotomic order {0}: must be positive")]
    InvalidOrder(usize),

    #[error("cannot lift a value of order {from} into order {to}: {to} is not a multiple of {from}")]
    InvalidLift { from: usize, to: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("group of order {order} exceeds the configured size bound {bound}")]
    SizeLimit { order: usize, bound: usize },

    #[error("domain mismatch: {0}")]
    Domain(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("integrality violation: {0}")]
    Integrality(String),

    #[error("constructive oracle failed: {0}")]
    OracleFailure(String),

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    #[error("character table failed validation: {0}")]
    Validation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Integrality(_) | Error::OracleFailure(_) | Error::InternalConsistency(_) => 2,
            Error::Validation(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
