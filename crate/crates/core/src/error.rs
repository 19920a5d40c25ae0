use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HurwitzError {
    /// Caller broke an operation's contract (bad index, out-of-range query).
    #[error("usage error: {0}")]
    Usage(String),
    /// A series operation was applied outside its domain (e.g. exp of a unit).
    #[error("domain error: {0}")]
    Domain(String),
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: String, right: String },
    #[error("fixed-point iteration did not converge: {0}")]
    Convergence(String),
    /// Problem exceeds what an enumeration method is willing to attempt.
    #[error("size error: {0}")]
    Size(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// An extracted count that must be an integer was not.
    #[error("integrality violated: {0}")]
    Integrality(String),
}

pub type Result<T> = std::result::Result<T, HurwitzError>;
