use thiserror::Error;

/// Crate-wide error type. The CLI maps variants onto exit codes, so new
/// failure modes should pick the variant that matches their cause.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration supplied by the user (bad schedule parameters,
    /// malformed fractions, inconsistent model shapes, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// A function was called with arguments that violate its contract
    /// (shape mismatches and the like).
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Malformed or unreadable input data (dataset files, score CSVs).
    #[error("data error: {0}")]
    Data(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Non-finite values where finite ones are required; signals divergence.
    #[error("numerical error: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
