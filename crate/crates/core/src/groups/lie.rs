use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::Sign;
use crate::{Error, Natural, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieFamily {
    A,
    TwistedA,
    B,
    C,
    D,
    TwistedD,
    E6,
    TwistedE6,
    E7,
    E8,
    F4,
    G2,
    TwistedG2,
    TrialityD4,
    TwistedB2,
    TwistedF4,
}

impl LieFamily {
    pub const ALL: [LieFamily; 16] = [
        LieFamily::A,
        LieFamily::TwistedA,
        LieFamily::B,
        LieFamily::C,
        LieFamily::D,
        LieFamily::TwistedD,
        LieFamily::E6,
        LieFamily::TwistedE6,
        LieFamily::E7,
        LieFamily::E8,
        LieFamily::F4,
        LieFamily::G2,
        LieFamily::TwistedG2,
        LieFamily::TrialityD4,
        LieFamily::TwistedB2,
        LieFamily::TwistedF4,
    ];

    pub fn code(self) -> &'static str {
        match self {
            LieFamily::A => "A",
            LieFamily::TwistedA => "2A",
            LieFamily::B => "B",
            LieFamily::C => "C",
            LieFamily::D => "D",
            LieFamily::TwistedD => "2D",
            LieFamily::E6 => "E6",
            LieFamily::TwistedE6 => "2E6",
            LieFamily::E7 => "E7",
            LieFamily::E8 => "E8",
            LieFamily::F4 => "F4",
            LieFamily::G2 => "G2",
            LieFamily::TwistedG2 => "2G2",
            LieFamily::TrialityD4 => "3D4",
            LieFamily::TwistedB2 => "2B2",
            LieFamily::TwistedF4 => "2F4",
        }
    }

    /// Families whose rank is part of the name.
    pub fn is_classical(self) -> bool {
        matches!(
            self,
            LieFamily::A | LieFamily::TwistedA | LieFamily::B | LieFamily::C | LieFamily::D | LieFamily::TwistedD
        )
    }

    pub fn is_twisted(self) -> bool {
        matches!(
            self,
            LieFamily::TwistedA
                | LieFamily::TwistedD
                | LieFamily::TwistedE6
                | LieFamily::TwistedG2
                | LieFamily::TrialityD4
                | LieFamily::TwistedB2
                | LieFamily::TwistedF4
        )
    }

    /// (stored rank, rank of the untwisted ambient root system) for exceptional families.
    pub(crate) fn fixed_ranks(self) -> Option<(u32, u32)> {
        match self {
            LieFamily::E6 => Some((6, 6)),
            LieFamily::TwistedE6 => Some((4, 6)),
            LieFamily::E7 => Some((7, 7)),
            LieFamily::E8 => Some((8, 8)),
            LieFamily::F4 => Some((4, 4)),
            LieFamily::G2 => Some((2, 2)),
            LieFamily::TwistedG2 => Some((1, 2)),
            LieFamily::TrialityD4 => Some((2, 4)),
            LieFamily::TwistedB2 => Some((1, 2)),
            LieFamily::TwistedF4 => Some((2, 4)),
            _ => None,
        }
    }
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for LieFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim();
        let key = match key {
            "²A" => "2A",
            "²D" => "2D",
            "²E6" => "2E6",
            "²G2" => "2G2",
            "³D4" => "3D4",
            "²B2" => "2B2",
            "²F4" => "2F4",
            other => other,
        };
        LieFamily::ALL
            .iter()
            .copied()
            .find(|f| f.code() == key)
            .ok_or_else(|| Error::Parse(format!("unknown Lie family {key:?}")))
    }
}

/// One presentation of a simple group as a group of Lie type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieRealization {
    pub family: LieFamily,
    pub rank: u32,
    pub q: Natural,
    /// Characteristic of the field of order `q`.
    pub p: Natural,
}

impl LieRealization {
    /// Split `q` into `p^k`; `None` if `q` is not a prime power.
    pub fn new(family: LieFamily, rank: u32, q: Natural) -> Result<Self> {
        let (p, _) =
            prime_power_parts(&q)?.ok_or_else(|| Error::NotSimple(format!("field size {q} is not a prime power")))?;
        Ok(LieRealization { family, rank, q, p })
    }

    /// Exponent `k` with `q = p^k`.
    pub fn field_degree(&self) -> u32 {
        let mut k = 0;
        let mut x = self.q.clone();
        while x > Natural::one() {
            x /= &self.p;
            k += 1;
        }
        k
    }
}

impl fmt::Display for LieRealization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.is_classical() {
            write!(f, "{}{}({})", self.family, self.rank, self.q)
        } else {
            write!(f, "{}({})", self.family, self.q)
        }
    }
}

/// `(p, k)` with `q = p^k`, `k >= 1`.
pub fn prime_power_parts(q: &Natural) -> Result<Option<(Natural, u32)>> {
    if *q < Natural::from(2u32) {
        return Ok(None);
    }
    let f = crate::arith::prime_factorization(q)?;
    match f.factors() {
        [(p, k)] => Ok(Some((p.clone(), *k))),
        _ => Ok(None),
    }
}

/// |W| for the untwisted ambient root system.
pub fn weyl_order(real: &LieRealization) -> Natural {
    let n = real.rank as u64;
    let fact = |k: u64| (1..=k).fold(Natural::one(), |acc, i| acc * i);
    match real.family {
        LieFamily::A | LieFamily::TwistedA => fact(n + 1),
        LieFamily::B | LieFamily::C => (Natural::one() << n) * fact(n),
        LieFamily::D | LieFamily::TwistedD => (Natural::one() << (n - 1)) * fact(n),
        LieFamily::TrialityD4 => Natural::from(192u32),
        LieFamily::E6 | LieFamily::TwistedE6 => Natural::from(51_840u32),
        LieFamily::E7 => Natural::from(2_903_040u32),
        LieFamily::E8 => Natural::from(696_729_600u32),
        LieFamily::F4 | LieFamily::TwistedF4 => Natural::from(1152u32),
        LieFamily::G2 | LieFamily::TwistedG2 => Natural::from(12u32),
        LieFamily::TwistedB2 => Natural::from(8u32),
    }
}

/// Order data `q^N * prod (q^i - sign)^mult / d`.
pub(crate) struct OrderShape {
    pub n: u64,
    /// `(i, sign, multiplicity)`; a negative multiplicity divides.
    pub terms: Vec<(u64, Sign, i32)>,
    pub center: Natural,
}

fn gcd_nat(a: u64, b: &Natural) -> Natural {
    Natural::from(a).gcd(b)
}

pub(crate) fn order_shape(family: LieFamily, rank: u32, q: &Natural) -> OrderShape {
    use Sign::{Minus, Plus};
    let l = rank as u64;
    let one = Natural::one();
    let qm1 = q - &one;
    let qp1 = q + &one;
    let plain = |is: &[u64]| is.iter().map(|&i| (i, Plus, 1)).collect::<Vec<_>>();
    match family {
        LieFamily::A => OrderShape {
            n: l * (l + 1) / 2,
            terms: (2..=l + 1).map(|i| (i, Plus, 1)).collect(),
            center: gcd_nat(l + 1, &qm1),
        },
        LieFamily::TwistedA => OrderShape {
            n: l * (l + 1) / 2,
            terms: (2..=l + 1).map(|i| (i, if i % 2 == 0 { Plus } else { Minus }, 1)).collect(),
            center: gcd_nat(l + 1, &qp1),
        },
        LieFamily::B | LieFamily::C => {
            OrderShape { n: l * l, terms: (1..=l).map(|i| (2 * i, Plus, 1)).collect(), center: gcd_nat(2, &qm1) }
        }
        LieFamily::D | LieFamily::TwistedD => {
            let sign = if family == LieFamily::D { Plus } else { Minus };
            let mut terms: Vec<_> = (1..l).map(|i| (2 * i, Plus, 1)).collect();
            terms.push((l, sign, 1));
            let qn = num_traits::pow(q.clone(), l as usize);
            let shifted = if sign == Plus { qn - &one } else { qn + &one };
            OrderShape { n: l * (l - 1), terms, center: gcd_nat(4, &shifted) }
        }
        LieFamily::G2 => OrderShape { n: 6, terms: plain(&[2, 6]), center: one },
        LieFamily::F4 => OrderShape { n: 24, terms: plain(&[2, 6, 8, 12]), center: one },
        LieFamily::E6 => OrderShape { n: 36, terms: plain(&[2, 5, 6, 8, 9, 12]), center: gcd_nat(3, &qm1) },
        LieFamily::TwistedE6 => OrderShape {
            n: 36,
            terms: vec![(2, Plus, 1), (5, Minus, 1), (6, Plus, 1), (8, Plus, 1), (9, Minus, 1), (12, Plus, 1)],
            center: gcd_nat(3, &qp1),
        },
        LieFamily::E7 => OrderShape { n: 63, terms: plain(&[2, 6, 8, 10, 12, 14, 18]), center: gcd_nat(2, &qm1) },
        LieFamily::E8 => OrderShape { n: 120, terms: plain(&[2, 8, 12, 14, 18, 20, 24, 30]), center: one },
        // q^8 + q^4 + 1 = (q^12 - 1) / (q^4 - 1)
        LieFamily::TrialityD4 => {
            OrderShape { n: 12, terms: vec![(12, Plus, 1), (4, Plus, -1), (6, Plus, 1), (2, Plus, 1)], center: one }
        }
        LieFamily::TwistedB2 => OrderShape { n: 2, terms: vec![(2, Minus, 1), (1, Plus, 1)], center: one },
        LieFamily::TwistedG2 => OrderShape { n: 3, terms: vec![(3, Minus, 1), (1, Plus, 1)], center: one },
        LieFamily::TwistedF4 => {
            OrderShape { n: 12, terms: vec![(6, Minus, 1), (4, Plus, 1), (3, Minus, 1), (1, Plus, 1)], center: one }
        }
    }
}

fn mobius(n: u64) -> i32 {
    let mut m = n;
    let mut result = 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if m > 1 {
        result = -result;
    }
    result
}

/// Cyclotomic value `Phi_n(x)` via Mobius inversion over `x^d - 1`.
pub fn cyclotomic_value(n: u64, x: &Natural) -> Natural {
    assert!(n >= 1);
    let mut num = Natural::one();
    let mut den = Natural::one();
    for d in (1..=n).filter(|d| n % d == 0) {
        let term = num_traits::pow(x.clone(), d as usize) - 1u32;
        match mobius(n / d) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Exponents `a_k` with `prod (q^i - sign)^mult = prod Phi_k(q)^{a_k}`.
pub(crate) fn cyclotomic_exponents(shape: &OrderShape) -> BTreeMap<u64, i64> {
    let mut out: BTreeMap<u64, i64> = BTreeMap::new();
    for &(i, sign, mult) in &shape.terms {
        let (modulus, skip) = match sign {
            Sign::Plus => (i, None),
            // q^i + 1 = (q^{2i} - 1) / (q^i - 1)
            Sign::Minus => (2 * i, Some(i)),
        };
        for k in (1..=modulus).filter(|k| modulus % k == 0) {
            if skip.is_some_and(|s| s % k == 0) {
                continue;
            }
            *out.entry(k).or_insert(0) += mult as i64;
        }
    }
    out.retain(|_, a| *a != 0);
    out
}

/// Order before dividing by the center; increasing in `q` for fixed family and rank.
pub(crate) fn universal_order(family: LieFamily, rank: u32, q: &Natural) -> Natural {
    let shape = order_shape(family, rank, q);
    &shape.center * lie_order(family, rank, q)
}

pub(crate) fn lie_order(family: LieFamily, rank: u32, q: &Natural) -> Natural {
    let shape = order_shape(family, rank, q);
    let mut acc = num_traits::pow(q.clone(), shape.n as usize);
    for (k, a) in cyclotomic_exponents(&shape) {
        assert!(a > 0, "order shape with net negative cyclotomic exponent");
        acc *= num_traits::pow(cyclotomic_value(k, q), a as usize);
    }
    debug_assert!((&acc % &shape.center).is_zero());
    acc / shape.center
}

/// Candidate primes for the order: `p` and the primes of each cyclotomic factor.
pub(crate) fn lie_spectrum(real: &LieRealization) -> Result<Vec<Natural>> {
    let shape = order_shape(real.family, real.rank, &real.q);
    let order = lie_order(real.family, real.rank, &real.q);
    let mut primes = vec![real.p.clone()];
    for k in cyclotomic_exponents(&shape).keys() {
        let v = cyclotomic_value(*k, &real.q);
        if v > Natural::one() {
            primes.extend(crate::arith::prime_factorization(&v)?.primes().cloned());
        }
    }
    primes.sort();
    primes.dedup();
    primes.retain(|r| (&order % r).is_zero());
    Ok(primes)
}

pub(crate) fn alternating_order(n: u64) -> Natural {
    (3..=n).fold(Natural::one(), |acc, i| acc * i)
}

/// Primes up to `n`, ascending.
pub(crate) fn primes_up_to(n: u64) -> Vec<Natural> {
    if n <= crate::arith::SIEVE_LIMIT as u64 {
        crate::arith::small_primes().iter().take_while(|&&p| p as u64 <= n).map(|&p| Natural::from(p)).collect()
    } else {
        (2..=n).filter(|&k| crate::arith::is_prime_u64(k)).map(Natural::from).collect()
    }
}
