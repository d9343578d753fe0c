//! Finite and cofinite sets of primes.

use std::fmt;
use std::str::FromStr;

use crate::arith::is_prime;
use crate::{Error, Natural, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PrimeSet {
    /// Exactly the listed primes.
    Finite(Vec<Natural>),
    /// Every prime except the listed ones.
    Cofinite(Vec<Natural>),
}

fn checked(primes: impl IntoIterator<Item = Natural>) -> Result<Vec<Natural>> {
    let mut v: Vec<Natural> = primes.into_iter().collect();
    if let Some(bad) = v.iter().find(|p| !is_prime(p)) {
        return Err(Error::InvalidInput(format!("{bad} is not prime")));
    }
    v.sort();
    v.dedup();
    Ok(v)
}

impl PrimeSet {
    pub fn finite(primes: impl IntoIterator<Item = Natural>) -> Result<Self> {
        Ok(PrimeSet::Finite(checked(primes)?))
    }

    pub fn cofinite(excluded: impl IntoIterator<Item = Natural>) -> Result<Self> {
        Ok(PrimeSet::Cofinite(checked(excluded)?))
    }

    /// Convenience constructor for small literal sets; panics on non-primes.
    pub fn of(primes: &[u64]) -> Self {
        Self::finite(primes.iter().map(|&p| Natural::from(p))).expect("literal primes")
    }

    pub fn contains(&self, p: &Natural) -> bool {
        match self {
            PrimeSet::Finite(v) => v.binary_search(p).is_ok(),
            PrimeSet::Cofinite(v) => is_prime(p) && v.binary_search(p).is_err(),
        }
    }

    pub fn contains_u64(&self, p: u64) -> bool {
        self.contains(&Natural::from(p))
    }

    /// Members of `self` among `others`, keeping the order of `others`.
    pub fn intersect(&self, others: &[Natural]) -> Vec<Natural> {
        others.iter().filter(|p| self.contains(p)).cloned().collect()
    }

    pub fn contains_all(&self, others: &[Natural]) -> bool {
        others.iter().all(|p| self.contains(p))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, PrimeSet::Finite(_))
    }

    /// The listed primes of a finite set.
    pub fn as_finite(&self) -> Option<&[Natural]> {
        match self {
            PrimeSet::Finite(v) => Some(v),
            PrimeSet::Cofinite(_) => None,
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<Natural>> {
    let body = s.trim().trim_start_matches('{').trim_end_matches('}');
    body.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Natural>().map_err(|_| Error::Parse(format!("bad prime {t:?}"))))
        .collect()
}

impl FromStr for PrimeSet {
    type Err = Error;

    /// `2,3,7`, `{2,3}`, or `excluded:7,11` for a cofinite set.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.strip_prefix("excluded:") {
            Some(rest) => PrimeSet::cofinite(parse_list(rest)?),
            None => PrimeSet::finite(parse_list(s)?),
        }
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Natural]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        match self {
            PrimeSet::Finite(v) => write!(f, "{{{}}}", join(v)),
            PrimeSet::Cofinite(v) => write!(f, "excluded:{}", join(v)),
        }
    }
}
