//! Exact number-theoretic primitives: r-parts, multiplicative orders, the
//! parity-adjusted order map, and closed forms for r-parts of products of
//! `q^i - 1` and `q^i - (-1)^i`.
//!
//! The counting helpers are generic over any exact integer type (`u64`,
//! `u128`, [`Natural`]); everything that needs modular exponentiation or
//! factorization works on [`Natural`].

mod factor;
mod primality;

use std::fmt::Debug;

use num_integer::Integer;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};

pub use factor::{
    factor_u64, prime_divisors_u64, prime_factorization, prime_factorization_with, FactorConfig, Factorization,
};
pub use primality::{is_prime, is_prime_u64, sieve, small_primes, SIEVE_LIMIT};

use crate::{Error, Natural, Result};

/// Exact unsigned integer types the counting helpers accept.
pub trait Exact: Integer + Clone + FromPrimitive + ToPrimitive + Debug {}
impl<T: Integer + Clone + FromPrimitive + ToPrimitive + Debug> Exact for T {}

/// A sign `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `(-1)^k`.
    pub fn parity_of<T: Exact>(k: &T) -> Sign {
        if k.is_even() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

fn small<T: Exact>(v: u64) -> T {
    T::from_u64(v).expect("small constant fits every exact type")
}

/// Exponent of the prime `r` in `n`. `n` must be nonzero.
pub fn valuation<T: Exact>(n: &T, r: &T) -> u64 {
    assert!(!n.is_zero(), "valuation of zero");
    assert!(*r > T::one(), "valuation base must exceed one");
    let mut k = 0;
    let mut rest = n.clone();
    loop {
        let (q, rem) = rest.div_rem(r);
        if !rem.is_zero() {
            return k;
        }
        rest = q;
        k += 1;
    }
}

/// `(n)_r`: the largest power of `r` dividing `n`.
pub fn r_part<T: Exact>(n: &T, r: &T) -> T {
    num_traits::pow(r.clone(), valuation(n, r) as usize)
}

/// Legendre's exponent `sum_i [n / r^i]`, the exponent of `r` in `n!`.
pub fn legendre_exponent<T: Exact>(n: &T, r: &T) -> T {
    let mut total = T::zero();
    let mut term = n.div_floor(r);
    while !term.is_zero() {
        total = total + term.clone();
        term = term.div_floor(r);
    }
    total
}

/// `(n!)_r` from the Legendre sum; `n!` is never formed.
pub fn factorial_r_part<T: Exact>(n: &T, r: &T) -> T {
    let alpha = legendre_exponent(n, r).to_usize().expect("factorial exponent fits in usize");
    num_traits::pow(r.clone(), alpha)
}

/// The map `e -> e*`: `2e` for odd `e`, `e` when `4 | e`, `e/2` when `e ≡ 2 (mod 4)`.
pub fn e_star<T: Exact>(e: &T) -> T {
    assert!(!e.is_zero(), "e* is defined for e >= 1");
    let two: T = small(2);
    let four: T = small(4);
    if e.is_odd() {
        e.clone() * two
    } else if e.mod_floor(&four).is_zero() {
        e.clone()
    } else {
        e.div_floor(&two)
    }
}

/// `ε(q)`: the sign with `q ≡ ε (mod 4)`, for odd `q`.
pub fn epsilon_of<T: Exact>(q: &T) -> Result<Sign> {
    if q.is_even() {
        return Err(Error::InvalidInput(format!("ε(q) needs odd q, got {q:?}")));
    }
    let four: T = small(4);
    if q.mod_floor(&four).is_one() {
        Ok(Sign::Plus)
    } else {
        Ok(Sign::Minus)
    }
}

/// Is `t` a Fermat prime, i.e. prime of the form `2^(2^k) + 1`.
pub fn fermat_prime_test(t: &Natural) -> bool {
    if *t <= Natural::from(2u32) || !is_prime(t) {
        return false;
    }
    let m = t - 1u32;
    // t - 1 a power of two; primality then forces the exponent itself to be a power of two
    m.count_ones() == 1
}

fn check_odd_prime(r: &Natural) -> Result<()> {
    if *r == Natural::from(2u32) || !is_prime(r) {
        return Err(Error::InvalidInput(format!("{r} is not an odd prime")));
    }
    Ok(())
}

/// `e(q, r)`: the multiplicative order of `q` modulo the odd prime `r`.
pub fn mult_order(q: &Natural, r: &Natural) -> Result<Natural> {
    check_odd_prime(r)?;
    if (q % r).is_zero() {
        return Err(Error::InvalidInput(format!("{r} divides {q}")));
    }
    let group_order = r - 1u32;
    let mut e = group_order.clone();
    for (f, _) in prime_factorization(&group_order)?.factors() {
        while (&e % f).is_zero() {
            let candidate = &e / f;
            if q.modpow(&candidate, r).is_one() {
                e = candidate;
            } else {
                break;
            }
        }
    }
    Ok(e)
}

/// `(q^k - sign)_r` for a prime `r` not dividing `q`, without forming `q^k`.
pub fn power_sign_r_part(q: &Natural, k: &Natural, r: &Natural, sign: Sign) -> Natural {
    assert!(!k.is_zero(), "exponent must be positive");
    let mut modulus = r.clone();
    let mut part = Natural::one();
    loop {
        let v = q.modpow(k, &modulus);
        let hit = match sign {
            Sign::Plus => v.is_one(),
            Sign::Minus => v == &modulus - 1u32,
        };
        if !hit {
            return part;
        }
        part *= r;
        modulus *= r;
    }
}

/// r-part of `prod_{i=1..n} (q^i - 1)` (`signed = false`) or of
/// `prod_{i=1..n} (q^i - (-1)^i)` (`signed = true`) for an odd prime `r ∤ q`.
///
/// Uses `(q^e - 1)_r^[n/e] ([n/e]!)_r` with `e = e(q, r)`, and the same shape
/// with `e*` and `q^{e*} - (-1)^{e*}` in the signed case.
pub fn prod_r_part(q: &Natural, n: u64, r: &Natural, signed: bool) -> Result<Natural> {
    check_odd_prime(r)?;
    if (q % r).is_zero() {
        return Err(Error::InvalidInput(format!("{r} divides {q}")));
    }
    if *q < Natural::from(2u32) {
        return Err(Error::InvalidInput("q must be at least 2".into()));
    }
    let e = mult_order(q, r)?;
    let (period, sign) = if signed {
        let es = e_star(&e);
        let sign = Sign::parity_of(&es);
        (es, sign)
    } else {
        (e, Sign::Plus)
    };
    let blocks = Natural::from(n) / &period;
    if blocks.is_zero() {
        return Ok(Natural::one());
    }
    let base = power_sign_r_part(q, &period, r, sign);
    let count = blocks.to_usize().expect("block count bounded by n");
    Ok(num_traits::pow(base, count) * factorial_r_part(&blocks, r))
}

/// The three-conjunct criterion for `prod (q^i - 1)_r = (n!)_r` (unsigned) and
/// its `e*` analogue for `prod (q^i - (-1)^i)_r` (signed):
/// `e = r - 1` (resp. `e* = r - 1`), `(q^{r-1} - 1)_r = r`, and `[n/r] = [n/(r-1)]`.
///
/// Exact whenever `n >= r - 1`. Below that `(n!)_r = 1` and the equality
/// holds exactly when `n < e` (resp. `n < e*`), which the criterion misses.
pub fn factorial_equality_criterion(q: &Natural, n: u64, r: &Natural, signed: bool) -> Result<bool> {
    check_odd_prime(r)?;
    let e = mult_order(q, r)?;
    let r_minus_one = r - 1u32;
    let order_ok = if signed { e_star(&e) == r_minus_one } else { e == r_minus_one };
    if !order_ok {
        return Ok(false);
    }
    let part_ok = power_sign_r_part(q, &r_minus_one, r, Sign::Plus) == *r;
    let n = Natural::from(n);
    let floors_ok = &n / r == &n / &r_minus_one;
    Ok(part_ok && floors_ok)
}
