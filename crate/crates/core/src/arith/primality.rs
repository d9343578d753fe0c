//! Primality testing and the small-prime sieve.
//!
//! Inputs below 2^64 are decided deterministically with Miller-Rabin over the
//! first twelve prime bases. Larger inputs run strong-pseudoprime rounds over
//! the first twenty-four primes, which is probabilistic but reproducible.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::Natural;

const BASES_64: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const BASES_BIG: [u64; 24] =
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89];

/// Upper end (inclusive) of the precomputed prime table.
pub const SIEVE_LIMIT: u32 = 1_000_000;

/// All primes up to [`SIEVE_LIMIT`], ascending.
pub fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve(SIEVE_LIMIT))
}

/// Eratosthenes up to `limit` inclusive.
pub fn sieve(limit: u32) -> Vec<u32> {
    let n = limit as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u32);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

#[inline]
pub(crate) fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

fn strong_probable_prime_u64(n: u64, a: u64) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    let mut x = pow_mod_u64(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod_u64(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &BASES_64 {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    BASES_64.iter().all(|&a| strong_probable_prime_u64(n, a))
}

fn strong_probable_prime_big(n: &BigUint, a: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == n_minus_one {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_one {
            return true;
        }
    }
    false
}

/// Primality of an arbitrary natural number.
pub fn is_prime(n: &Natural) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &BASES_BIG {
        if (n % p).is_zero() {
            return false;
        }
    }
    if n.is_even() {
        return false;
    }
    BASES_BIG.iter().all(|&a| strong_probable_prime_big(n, &BigUint::from(a)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_matches_trial_division() {
        let primes = sieve(2000);
        for n in 0u64..2000 {
            let naive = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(primes.binary_search(&(n as u32)).is_ok(), naive, "n = {n}");
            assert_eq!(is_prime_u64(n), naive, "n = {n}");
        }
    }

    #[test]
    fn known_pseudoprimes_rejected() {
        // Carmichael numbers and a strong pseudoprime to several small bases
        for n in [561u64, 1105, 1729, 2465, 3215031751, 3825123056546413051] {
            assert!(!is_prime_u64(n), "{n}");
        }
        assert!(is_prime_u64(18446744073709551557)); // largest prime below 2^64
    }

    #[test]
    fn big_primes() {
        let m127 = (BigUint::one() << 127) - 1u32;
        assert!(is_prime(&m127));
        let m128 = (BigUint::one() << 128) - 1u32;
        assert!(!is_prime(&m128));
        // 2^89 - 1 is prime, 2^83 - 1 is not
        assert!(is_prime(&((BigUint::one() << 89) - 1u32)));
        assert!(!is_prime(&((BigUint::one() << 83) - 1u32)));
    }
}
