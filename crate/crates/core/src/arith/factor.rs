//! Exact factorization: trial division over the sieve, then Brent's variant of
//! Pollard rho under an iteration budget.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::primality::{is_prime, mul_mod_u64, small_primes};
use crate::{Error, Natural, Result};

/// Budget and limits for [`prime_factorization_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorConfig {
    /// Trial division runs over all primes up to this bound (at most the sieve limit).
    pub trial_limit: u32,
    /// Total rho iterations allowed per composite cofactor.
    pub rho_iterations: u64,
    /// Composite cofactors wider than this many bits are rejected outright.
    pub cofactor_cap_bits: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig { trial_limit: super::primality::SIEVE_LIMIT, rho_iterations: 1 << 21, cofactor_cap_bits: 128 }
    }
}

/// Prime factorization, ascending by prime, exponents at least one.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(Natural, u32)>,
}

impl Factorization {
    fn from_unsorted(mut raw: Vec<Natural>) -> Self {
        raw.sort();
        let mut factors: Vec<(Natural, u32)> = Vec::new();
        for p in raw {
            match factors.last_mut() {
                Some((last, e)) if *last == p => *e += 1,
                _ => factors.push((p, 1)),
            }
        }
        Factorization { factors }
    }

    pub fn factors(&self) -> &[(Natural, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &Natural> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn exponent_of(&self, p: &Natural) -> u32 {
        self.factors.iter().find(|(q, _)| q == p).map(|(_, e)| *e).unwrap_or(0)
    }

    pub fn product(&self) -> Natural {
        self.factors.iter().fold(Natural::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), *e as usize))
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.factors.iter().map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") }).collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// Factor `n` with the default budget.
pub fn prime_factorization(n: &Natural) -> Result<Factorization> {
    prime_factorization_with(n, &FactorConfig::default())
}

pub fn prime_factorization_with(n: &Natural, cfg: &FactorConfig) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::InvalidInput("cannot factor 0".into()));
    }
    let mut found = Vec::new();
    let mut rest = n.clone();

    for &p in small_primes() {
        if p > cfg.trial_limit {
            break;
        }
        if let Some(small) = rest.to_u64() {
            if (p as u64) * (p as u64) > small {
                break;
            }
        }
        while (&rest % p).is_zero() {
            rest /= p;
            found.push(Natural::from(p));
        }
        if rest.is_one() {
            break;
        }
    }

    if !rest.is_one() {
        split_cofactor(rest, cfg, &mut found)?;
    }
    Ok(Factorization::from_unsorted(found))
}

fn split_cofactor(n: Natural, cfg: &FactorConfig, out: &mut Vec<Natural>) -> Result<()> {
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            out.push(m);
            continue;
        }
        if m.bits() > cfg.cofactor_cap_bits {
            return Err(Error::CapExceeded { cofactor: m });
        }
        let d = match m.to_u64() {
            Some(small) => rho_u64(small, cfg.rho_iterations).map(Natural::from),
            None => rho_big(&m, cfg.rho_iterations),
        };
        match d {
            Some(d) => {
                let other = &m / &d;
                stack.push(d);
                stack.push(other);
            }
            None => return Err(Error::CapExceeded { cofactor: m }),
        }
    }
    Ok(())
}

/// Brent rho on a word-sized odd composite. Returns a proper factor.
fn rho_u64(n: u64, budget: u64) -> Option<u64> {
    if n % 2 == 0 {
        return Some(2);
    }
    let mut spent = 0u64;
    for c in 1u64.. {
        if spent >= budget {
            return None;
        }
        let f = |x: u64| ((x as u128 * x as u128 + c as u128) % n as u128) as u64;
        let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
        let mut x = y;
        let mut ys = y;
        let mut g = 1u64;
        const BLOCK: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BLOCK.min(r - k) {
                    y = f(y);
                    q = mul_mod_u64(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += BLOCK;
            }
            spent += r;
            r *= 2;
            if spent >= budget {
                break;
            }
        }
        if g == n {
            // backtrack one step at a time from the last saved point
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g > 1 && g < n {
            return Some(g);
        }
    }
    None
}

fn rho_big(n: &BigUint, budget: u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let one = BigUint::one();
    let mut spent = 0u64;
    for c in 1u32.. {
        if spent >= budget {
            return None;
        }
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut q = one.clone();
        let mut g = one.clone();
        let mut r = 1u64;
        const BLOCK: u64 = 128;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BLOCK.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += BLOCK;
            }
            spent += r;
            r *= 2;
            if spent >= budget {
                break;
            }
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && &g != n {
            return Some(g);
        }
    }
    None
}

/// Quick word-sized helper used by callers that only deal with small numbers.
pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1);
    let f = prime_factorization(&Natural::from(n)).expect("u64 inputs always factor");
    f.factors().iter().map(|(p, e)| (p.to_u64().unwrap(), *e)).collect()
}

/// Distinct primes of a word-sized number, ascending.
pub fn prime_divisors_u64(n: u64) -> Vec<u64> {
    factor_u64(n).into_iter().map(|(p, _)| p).collect()
}
