use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Integrity` signals a violated mathematical invariant (e.g. an inner
/// product that fails to be a non-negative rational integer). It is never
/// expected on valid inputs; seeing one means an oracle bug.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("integrity violation: {0}")]
    Integrity(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
