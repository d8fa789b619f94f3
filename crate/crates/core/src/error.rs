use thiserror::Error;

use crate::exactval::ExactError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// An inequality the index count depends on failed; indicates a bug.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
