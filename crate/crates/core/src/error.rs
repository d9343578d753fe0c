use thiserror::Error;

use crate::Natural;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A composite cofactor could not be split within the factorization budget.
    #[error("factorization cap exceeded on cofactor {cofactor}")]
    CapExceeded { cofactor: Natural },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The descriptor does not name a finite simple group.
    #[error("not simple: {0}")]
    NotSimple(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A custom class rule accepted a group whose prime spectrum escapes the class spectrum.
    #[error("inconsistent class: {0}")]
    InconsistentClass(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
