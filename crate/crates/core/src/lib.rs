pub mod arith;
pub mod catalog;
pub mod classifier;
pub mod conditions;
mod error;
pub mod groups;
pub mod primes;

pub use error::{Error, Result};
pub use primes::PrimeSet;

/// Exact arbitrary-precision natural number.
pub type Natural = num_bigint::BigUint;
