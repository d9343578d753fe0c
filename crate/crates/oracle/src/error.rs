use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("cap exceeded: {what} passed {limit}")]
    CapExceeded { what: &'static str, limit: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("generators act on different degrees ({0} and {1})")]
    DegreeMismatch(usize, usize),
    #[error("no simple group of order {0} in the lookup table")]
    UnrecognizedSimpleGroup(u64),
    #[error(transparent)]
    Core(#[from] hall_verdict::Error),
}

pub type Result<T> = std::result::Result<T, OracleError>;
