//! Finite simple groups by name: validation, exceptional isomorphisms, orders,
//! prime spectra and Lie-type realizations.

mod lie;
mod parse;
mod sporadic;

use std::collections::BTreeSet;

use num_traits::{ToPrimitive, Zero};

pub(crate) use lie::primes_up_to;
pub use lie::{cyclotomic_value, prime_power_parts, weyl_order, LieFamily, LieRealization};
pub use sporadic::Sporadic;

use crate::arith::is_prime;
use crate::{Error, Natural, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SimpleGroupId {
    Cyclic(Natural),
    Alternating(u64),
    Sporadic(Sporadic),
    Lie { family: LieFamily, rank: u32, q: Natural },
}

impl SimpleGroupId {
    pub fn lie(family: LieFamily, rank: u32, q: u64) -> Self {
        SimpleGroupId::Lie { family, rank, q: Natural::from(q) }
    }

    pub fn is_abelian(&self) -> bool {
        matches!(self, SimpleGroupId::Cyclic(_))
    }
}

fn not_simple(msg: impl Into<String>) -> Error {
    Error::NotSimple(msg.into())
}

/// Check that the parameters name a simple group. Exceptional families may be
/// given with either their stored rank or the rank of the ambient root system;
/// the result always carries the stored rank.
pub fn validate(id: &SimpleGroupId) -> Result<SimpleGroupId> {
    match id {
        SimpleGroupId::Cyclic(p) => {
            if is_prime(p) {
                Ok(id.clone())
            } else {
                Err(not_simple(format!("cyclic group of order {p} is simple only for prime order")))
            }
        }
        SimpleGroupId::Alternating(n) => {
            if *n >= 5 {
                Ok(id.clone())
            } else {
                Err(not_simple(format!("Alt({n}) is solvable; simple alternating groups need n >= 5")))
            }
        }
        SimpleGroupId::Sporadic(_) => Ok(id.clone()),
        SimpleGroupId::Lie { family, rank, q } => {
            let (p, k) =
                prime_power_parts(q)?.ok_or_else(|| not_simple(format!("field size {q} is not a prime power")))?;
            let rank = validate_rank(*family, *rank)?;
            let small_q = q.to_u64();
            let pu = p.to_u64();
            let bad = |why: &str| Err(not_simple(format!("{family}{rank}({q}): {why}")));
            match family {
                LieFamily::A if rank == 1 && matches!(small_q, Some(2 | 3)) => {
                    return bad("PSL(2,q) is solvable for q <= 3");
                }
                LieFamily::TwistedA if rank == 2 && small_q == Some(2) => {
                    return bad("PSU(3,2) is solvable");
                }
                LieFamily::B | LieFamily::C if rank == 2 && small_q == Some(2) => {
                    return bad("PSp(4,2) is Sym(6), not simple");
                }
                LieFamily::G2 if small_q == Some(2) => return bad("G2(2) is not simple"),
                LieFamily::TwistedB2 | LieFamily::TwistedF4 => {
                    if pu != Some(2) || k % 2 == 0 {
                        return bad("q must be an odd power of 2");
                    }
                    if k == 1 {
                        return bad(if *family == LieFamily::TwistedB2 {
                            "2B2(2) is solvable"
                        } else {
                            "2F4(2) is not simple; its derived group is Spor(Tits)"
                        });
                    }
                }
                LieFamily::TwistedG2 => {
                    if pu != Some(3) || k % 2 == 0 {
                        return bad("q must be an odd power of 3");
                    }
                    if k == 1 {
                        return bad("2G2(3) is not simple");
                    }
                }
                _ => {}
            }
            Ok(SimpleGroupId::Lie { family: *family, rank, q: q.clone() })
        }
    }
}

fn validate_rank(family: LieFamily, rank: u32) -> Result<u32> {
    if let Some((stored, ambient)) = family.fixed_ranks() {
        return if rank == stored || rank == ambient {
            Ok(stored)
        } else {
            Err(not_simple(format!("{family} has rank {stored}, got {rank}")))
        };
    }
    let min = match family {
        LieFamily::A => 1,
        LieFamily::TwistedA | LieFamily::B | LieFamily::C => 2,
        _ => 4,
    };
    if rank < min {
        return Err(not_simple(format!(
            "{family}{rank}: rank must be at least {min}; smaller ranks are entered under their classical aliases"
        )));
    }
    Ok(rank)
}

/// Single representative for each isomorphism class. Expects a validated id.
pub fn canonicalize(id: &SimpleGroupId) -> SimpleGroupId {
    let SimpleGroupId::Lie { family, rank, q } = id else {
        return id.clone();
    };
    let small_q = q.to_u64();
    use LieFamily::*;
    match (family, rank, small_q) {
        (A, 1, Some(4 | 5)) => SimpleGroupId::Alternating(5),
        (A, 1, Some(9)) => SimpleGroupId::Alternating(6),
        (A, 3, Some(2)) => SimpleGroupId::Alternating(8),
        (A, 2, Some(2)) => SimpleGroupId::lie(A, 1, 7),
        (TwistedA, 3, Some(2)) => SimpleGroupId::lie(B, 2, 3),
        (B, n, _) if !q.bit(0) => SimpleGroupId::Lie { family: C, rank: *n, q: q.clone() },
        (C, 2, _) if q.bit(0) => SimpleGroupId::Lie { family: B, rank: 2, q: q.clone() },
        _ => id.clone(),
    }
}

/// Every presentation of the group as a group of Lie type, canonical one first.
pub fn lie_realizations(id: &SimpleGroupId) -> Vec<LieRealization> {
    use LieFamily::*;
    let canon = canonicalize(id);
    let mk = |family, rank, q: u64| LieRealization::new(family, rank, Natural::from(q)).expect("prime power");
    match &canon {
        SimpleGroupId::Alternating(5) => vec![mk(A, 1, 4), mk(A, 1, 5)],
        SimpleGroupId::Alternating(6) => vec![mk(A, 1, 9)],
        SimpleGroupId::Alternating(8) => vec![mk(A, 3, 2)],
        SimpleGroupId::Cyclic(_) | SimpleGroupId::Alternating(_) | SimpleGroupId::Sporadic(_) => Vec::new(),
        SimpleGroupId::Lie { family, rank, q } => {
            let own = LieRealization::new(*family, *rank, q.clone()).expect("validated field size");
            let mut out = vec![own.clone()];
            match (family, rank, q.to_u64()) {
                (A, 1, Some(7)) => out.push(mk(A, 2, 2)),
                (B, 2, Some(3)) => {
                    out.push(mk(C, 2, 3));
                    out.push(mk(TwistedA, 3, 2));
                }
                (B, 2, _) => out.push(LieRealization { family: C, ..own }),
                (C, n, _) if own.p == Natural::from(2u32) => out.push(LieRealization { family: B, rank: *n, ..own }),
                _ => {}
            }
            out
        }
    }
}

/// Exact group order. Expects a validated id.
pub fn order(id: &SimpleGroupId) -> Natural {
    match id {
        SimpleGroupId::Cyclic(p) => p.clone(),
        SimpleGroupId::Alternating(n) => lie::alternating_order(*n),
        SimpleGroupId::Sporadic(s) => s.order(),
        SimpleGroupId::Lie { family, rank, q } => lie::lie_order(*family, *rank, q),
    }
}

/// Primes dividing the order, ascending. Expects a validated id.
pub fn prime_spectrum(id: &SimpleGroupId) -> Result<Vec<Natural>> {
    match id {
        SimpleGroupId::Cyclic(p) => Ok(vec![p.clone()]),
        SimpleGroupId::Alternating(n) => Ok(lie::primes_up_to(*n)),
        SimpleGroupId::Sporadic(s) => Ok(s.prime_spectrum()),
        SimpleGroupId::Lie { family, rank, q } => {
            let real = LieRealization::new(*family, *rank, q.clone())?;
            lie::lie_spectrum(&real)
        }
    }
}

/// All nonabelian simple groups of order at most `bound`, canonical and
/// sorted by order.
pub fn enumerate_nonabelian_up_to(bound: &Natural) -> Vec<SimpleGroupId> {
    let mut seen: BTreeSet<(Natural, SimpleGroupId)> = BTreeSet::new();
    let mut push = |id: SimpleGroupId| {
        if let Ok(v) = validate(&id) {
            let c = canonicalize(&v);
            let o = order(&c);
            if o <= *bound {
                seen.insert((o, c));
            }
        }
    };

    let mut n = 5u64;
    while lie::alternating_order(n) <= *bound {
        push(SimpleGroupId::Alternating(n));
        n += 1;
    }
    for s in Sporadic::ALL {
        if s.order() <= *bound {
            push(SimpleGroupId::Sporadic(s));
        }
    }
    for family in LieFamily::ALL {
        let mut rank = match family.fixed_ranks() {
            Some((stored, _)) => stored,
            None => match family {
                LieFamily::A => 1,
                LieFamily::TwistedA | LieFamily::B | LieFamily::C => 2,
                _ => 4,
            },
        };
        loop {
            // the center is at most rank + 1 (or 4), so this cut never drops a group
            let slack = Natural::from(rank as u64 + 4) * bound;
            if lie::universal_order(family, rank, &Natural::from(2u32)) > slack {
                break;
            }
            let mut q = 2u64;
            loop {
                let qn = Natural::from(q);
                if lie::universal_order(family, rank, &qn) > slack {
                    break;
                }
                if crate::arith::prime_divisors_u64(q).len() == 1 {
                    push(SimpleGroupId::Lie { family, rank, q: qn });
                }
                q += 1;
            }
            if family.fixed_ranks().is_some() {
                break;
            }
            rank += 1;
        }
    }
    seen.into_iter().map(|(_, id)| id).collect()
}

/// `true` when `d` divides the order of `id`.
pub fn divides_order(id: &SimpleGroupId, d: &Natural) -> bool {
    !d.is_zero() && (order(id) % d).is_zero()
}
