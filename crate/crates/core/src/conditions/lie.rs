#![allow(non_snake_case)]

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{ConditionId, ConditionTrace, Options, Value};
use crate::arith::{epsilon_of, fermat_prime_test, mult_order, power_sign_r_part, prime_factorization, Sign};
use crate::groups::{self, LieFamily, LieRealization, SimpleGroupId};
use crate::primes::PrimeSet;
use crate::{Error, Natural, Result};

fn nat(n: u64) -> Natural {
    Natural::from(n)
}

fn intersection(real: &LieRealization, pi: &PrimeSet) -> Result<Vec<Natural>> {
    let id = SimpleGroupId::Lie { family: real.family, rank: real.rank, q: real.q.clone() };
    Ok(pi.intersect(&groups::prime_spectrum(&id)?))
}

fn divides(d: &Natural, n: &Natural) -> bool {
    (n % d).is_zero()
}

/// The `n` in names like `A_{n-1}(q)`, `B_n(q)`, `D_n(q)`.
fn name_parameter(real: &LieRealization) -> Option<Natural> {
    let rank = nat(real.rank as u64);
    match real.family {
        LieFamily::A | LieFamily::TwistedA => Some(rank + 1u32),
        LieFamily::B | LieFamily::C | LieFamily::D | LieFamily::TwistedD => Some(rank),
        _ => None,
    }
}

fn orders_mod(q: &Natural, primes: &[Natural]) -> Result<BTreeMap<Natural, Natural>> {
    primes.iter().map(|t| Ok((t.clone(), mult_order(q, t)?))).collect()
}

/// Shared opening of the two odd-characteristic-free conditions: 2 and p
/// outside π, at least two primes in π ∩ π(S), `r` the least of them.
struct OddSetup {
    r: Natural,
    tau: Vec<Natural>,
    e_r: Natural,
    e_tau: BTreeMap<Natural, Natural>,
}

fn odd_setup(
    t: &mut ConditionTrace,
    real: &LieRealization,
    pi: &PrimeSet,
) -> Result<std::result::Result<OddSetup, &'static str>> {
    t.nat("p", &real.p);
    t.nat("q", &real.q);
    if pi.contains_u64(2) {
        return Ok(Err("2 ∈ π"));
    }
    if pi.contains(&real.p) {
        return Ok(Err("p ∈ π"));
    }
    let inter = intersection(real, pi)?;
    t.set("pi_cap_S", &inter);
    if inter.len() < 2 {
        return Ok(Err("|π ∩ π(S)| < 2"));
    }
    let r = inter[0].clone();
    let tau = inter[1..].to_vec();
    let e_r = mult_order(&real.q, &r)?;
    let e_tau = orders_mod(&real.q, &tau)?;
    t.nat("r", &r);
    t.set("tau", &tau);
    t.bind("e_tau", Value::Map(e_tau.clone()));
    if let Some(n) = name_parameter(real) {
        t.nat("n", &n);
    }
    Ok(Ok(OddSetup { r, tau, e_r, e_tau }))
}

pub fn cond_III(real: &LieRealization, pi: &PrimeSet, opts: Options) -> Result<ConditionTrace> {
    let mut t = ConditionTrace::new(ConditionId::III, Some(real));
    let inter = intersection(real, pi)?;
    t.set("pi_cap_S", &inter);
    t.nat("p", &real.p);
    t.nat("q", &real.q);
    let w = groups::weyl_order(real);
    t.nat("weyl_order", &w);
    if real.family.is_twisted() {
        t.flags.push("weyl order taken from the untwisted ambient root system".into());
    }
    let tau: Vec<Natural> = inter.iter().filter(|r| **r != real.p).cloned().collect();
    t.set("tau", &tau);
    let literal_hits: Vec<Natural> = inter.iter().filter(|r| divides(r, &w)).cloned().collect();
    let reduced_hits: Vec<Natural> = literal_hits.iter().filter(|r| **r != real.p).cloned().collect();
    t.bind("reading", Value::Text(if opts.weyl_excludes_p { "characteristic excluded" } else { "literal" }.into()));
    t.set("weyl_hits", if opts.weyl_excludes_p { &reduced_hits } else { &literal_hits });

    if !pi.contains(&real.p) {
        return Ok(t.fail("p ∉ π"));
    }
    let q_minus_one = &real.q - 1u32;
    t.nat("q_minus_1", &q_minus_one);
    if !tau.iter().all(|s| divides(s, &q_minus_one)) {
        return Ok(t.fail("τ ⊄ π(q-1)"));
    }
    let literal = literal_hits.is_empty();
    let reduced = reduced_hits.is_empty();
    if literal != reduced {
        t.flags.push(format!(
            "readings disagree: literal {}, characteristic excluded {}",
            if literal { "holds" } else { "fails" },
            if reduced { "holds" } else { "fails" }
        ));
    }
    let ok = if opts.weyl_excludes_p { reduced } else { literal };
    Ok(if ok { t.succeed(None) } else { t.fail("a prime of π divides |W|") })
}

struct IvData<'a> {
    family: LieFamily,
    n: Option<&'a Natural>,
    r: &'a Natural,
    a: &'a Natural,
    b: &'a Natural,
    r_part: &'a Natural,
    e_tau: &'a BTreeMap<Natural, Natural>,
}

type Clause = std::result::Result<(), &'static str>;

fn need(ok: bool, clause: &'static str) -> Clause {
    if ok {
        Ok(())
    } else {
        Err(clause)
    }
}

impl IvData<'_> {
    fn n(&self) -> &Natural {
        self.n.expect("classical family carries n")
    }

    fn floors(&self) -> (Natural, Natural) {
        let r1 = self.r - 1u32;
        (self.n() / &r1, self.n() / self.r)
    }

    fn all_b(&self) -> Clause {
        need(self.e_tau.values().all(|e| e == self.b), "e(q,s) ≠ b for some s ∈ τ")
    }

    fn n_minus_one_mod_r(&self) -> Clause {
        need(((self.n() + 1u32) % self.r).is_zero(), "n ≢ -1 (mod r)")
    }

    fn linear(&self, plus_one: bool) -> Clause {
        need(self.family == LieFamily::A, "S is not A_{n-1}(q)")?;
        need(*self.a == self.r - 1u32, "a ≠ r-1")?;
        need(self.b == self.r, "b ≠ r")?;
        need(self.r_part == self.r, "(q^{r-1}-1)_r ≠ r")?;
        let (f1, f2) = self.floors();
        if plus_one {
            need(f1 == f2 + 1u32, "[n/(r-1)] ≠ [n/r]+1")?;
            self.n_minus_one_mod_r()?;
        } else {
            need(f1 == f2, "[n/(r-1)] ≠ [n/r]")?;
        }
        self.all_b()
    }

    fn unitary(&self, r_mod_4: u32, plus_one: bool) -> Clause {
        need(self.family == LieFamily::TwistedA, "S is not 2A_{n-1}(q)")?;
        need(self.r % 4u32 == nat(r_mod_4 as u64), if r_mod_4 == 1 { "r ≢ 1 (mod 4)" } else { "r ≢ 3 (mod 4)" })?;
        let r1 = self.r - 1u32;
        let want_a = if r_mod_4 == 1 { r1.clone() } else { &r1 / 2u32 };
        need(*self.a == want_a, if r_mod_4 == 1 { "a ≠ r-1" } else { "a ≠ (r-1)/2" })?;
        need(*self.b == self.r * 2u32, "b ≠ 2r")?;
        need(self.r_part == self.r, "(q^{r-1}-1)_r ≠ r")?;
        let (f1, f2) = self.floors();
        if plus_one {
            need(f1 == f2 + 1u32, "[n/(r-1)] ≠ [n/r]+1")?;
            self.n_minus_one_mod_r()?;
        } else {
            need(f1 == f2, "[n/(r-1)] ≠ [n/r]")?;
        }
        self.all_b()
    }

    fn orthogonal(&self, a_odd: bool) -> Clause {
        need(self.family == LieFamily::TwistedD, "S is not 2D_n(q)")?;
        if a_odd {
            need(self.a.is_odd(), "a is even")?;
            need(*self.n() == *self.b && *self.b == self.a * 2u32, "n = b = 2a fails")?;
        } else {
            need(self.b.is_odd(), "b is even")?;
            need(*self.n() == *self.a && *self.a == self.b * 2u32, "n = a = 2b fails")?;
        }
        need(self.e_tau.values().all(|e| e == self.a || e == self.b), "e(q,s) ∉ {a,b} for some s ∈ τ")
    }

    fn item(&self, k: u32) -> Clause {
        match k {
            1 => self.linear(false),
            2 => self.linear(true),
            3 => self.unitary(1, false),
            4 => self.unitary(3, false),
            5 => self.unitary(1, true),
            6 => self.unitary(3, true),
            7 => self.orthogonal(true),
            8 => self.orthogonal(false),
            _ => unreachable!(),
        }
    }
}

pub fn cond_IV(real: &LieRealization, pi: &PrimeSet) -> Result<ConditionTrace> {
    let mut t = ConditionTrace::new(ConditionId::IV, Some(real));
    let setup = match odd_setup(&mut t, real, pi)? {
        Ok(s) => s,
        Err(clause) => return Ok(t.fail(clause)),
    };
    let a = setup.e_r.clone();
    t.nat("a", &a);
    let r1 = &setup.r - 1u32;
    let r_part = power_sign_r_part(&real.q, &r1, &setup.r, Sign::Plus);
    t.nat("r_part_q^(r-1)-1", &r_part);
    let n = name_parameter(real);
    if let Some(n) = &n {
        t.nat("floor_n_over_r-1", &(n / &r1));
        t.nat("floor_n_over_r", &(n / &setup.r));
    }

    let mut candidates: Vec<Natural> = setup.e_tau.values().filter(|e| **e != a).cloned().collect();
    candidates.sort();
    candidates.dedup();
    if candidates.is_empty() {
        return Ok(t.fail("no t ∈ τ with e(q,t) ≠ a"));
    }
    let family_fits = matches!(real.family, LieFamily::A | LieFamily::TwistedA | LieFamily::TwistedD);
    let mut last = "S is not A_{n-1}(q), 2A_{n-1}(q) or 2D_n(q)";
    if family_fits {
        for b in &candidates {
            let data = IvData {
                family: real.family,
                n: n.as_ref(),
                r: &setup.r,
                a: &a,
                b,
                r_part: &r_part,
                e_tau: &setup.e_tau,
            };
            for k in 1..=8 {
                match data.item(k) {
                    Ok(()) => {
                        t.nat("b", b);
                        return Ok(t.succeed(Some(format!("IV.{k}"))));
                    }
                    Err(clause) => {
                        t.bind(&format!("fails.IV.{k}"), Value::Text(clause.into()));
                        last = clause;
                    }
                }
            }
        }
    }
    t.bind("b_candidates", Value::Set(candidates));
    Ok(t.fail(format!("no item of IV holds (last: {last})")))
}

fn every(tau: &[Natural], pred: impl Fn(&Natural) -> bool) -> bool {
    tau.iter().all(pred)
}

fn absent(tau: &[Natural], primes: &[u64]) -> bool {
    primes.iter().all(|p| !tau.contains(&nat(*p)))
}

/// Truth value of each numbered item of V, given that every `e(q,t)` equals `c`.
pub(super) fn fifth_items(real: &LieRealization, r: &Natural, c: &Natural, tau: &[Natural]) -> [(u32, bool); 15] {
    use LieFamily::*;
    let f = real.family;
    let n = name_parameter(real);
    let cs = |s: &Natural| c * s;
    let lt = |k: u32, s: &Natural| n.as_ref().map(|n| n * k < cs(s)).unwrap_or(false);
    let lt_scaled = |s: &Natural| n.as_ref().map(|n| *n < cs(s) * 2u32).unwrap_or(false);
    let le = |k: u32, s: &Natural| n.as_ref().map(|n| n * k <= cs(s)).unwrap_or(false);
    let c_mod_4 = c % 4u32;
    let c_odd = c.is_odd();
    let r_is = |v: u64| *r == nat(v);
    let c_in = |vs: &[u64]| vs.iter().any(|v| *c == nat(*v));
    let items: [(u32, bool); 15] = [
        (1, f == A && every(tau, |s| lt(1, s))),
        (2, f == TwistedA && c_mod_4 == nat(0) && every(tau, |s| lt(1, s))),
        (3, f == TwistedA && c_mod_4 == nat(2) && every(tau, |s| lt(2, s))),
        (4, f == TwistedA && c_odd && every(tau, lt_scaled)),
        (5, matches!(f, B | C | TwistedD) && c_odd && every(tau, |s| lt(2, s))),
        (6, matches!(f, B | C | D) && !c_odd && every(tau, |s| lt(1, s))),
        (7, f == D && !c_odd && every(tau, |s| le(2, s))),
        (8, f == TwistedD && c_odd && every(tau, |s| le(1, s))),
        (9, f == TrialityD4),
        (10, f == E6 && !(r_is(3) && c_in(&[1]) && !absent(tau, &[5, 13]))),
        (11, f == TwistedE6 && !(r_is(3) && c_in(&[2]) && !absent(tau, &[5, 13]))),
        (
            12,
            f == E7
                && !(r_is(3) && c_in(&[1, 2]) && !absent(tau, &[5, 7, 13]))
                && !(r_is(5) && c_in(&[1, 2]) && !absent(tau, &[7])),
        ),
        (
            13,
            f == E8
                && !(r_is(3) && c_in(&[1, 2]) && !absent(tau, &[5, 7, 13]))
                && !(r_is(5) && c_in(&[1, 2]) && !absent(tau, &[7, 31])),
        ),
        (14, f == G2),
        (15, f == F4 && !(r_is(3) && c_in(&[1]) && !absent(tau, &[13]))),
    ];
    items
}

pub fn cond_V(real: &LieRealization, pi: &PrimeSet) -> Result<ConditionTrace> {
    let mut t = ConditionTrace::new(ConditionId::V, Some(real));
    let setup = match odd_setup(&mut t, real, pi)? {
        Ok(s) => s,
        Err(clause) => return Ok(t.fail(clause)),
    };
    let c = setup.e_r.clone();
    t.nat("c", &c);
    if let Some((s, e)) = setup.e_tau.iter().find(|(_, e)| **e != c) {
        return Ok(t.fail(format!("e(q,{s}) = {e} ≠ c")));
    }
    let items = fifth_items(real, &setup.r, &c, &setup.tau);
    Ok(match items.iter().find(|(_, ok)| *ok).map(|(k, _)| *k) {
        Some(k) => t.succeed(Some(format!("V.{k}"))),
        None => t.fail("no item of V holds"),
    })
}

fn primes_of(n: &Natural) -> Result<Vec<Natural>> {
    if n.is_zero() {
        return Err(Error::InvalidInput("prime set of 0".into()));
    }
    Ok(prime_factorization(n)?.primes().cloned().collect())
}

/// The named prime sets of the sixth condition for a Suzuki or Ree group,
/// in the order listed. Empty for other families.
pub fn sixth_candidate_sets(real: &LieRealization) -> Result<Vec<(String, Vec<Natural>)>> {
    let k = real.field_degree();
    let q = &real.q;
    let one = Natural::one();
    let m = (k.saturating_sub(1) / 2) as usize;
    let pow2 = |e: usize| num_traits::pow(nat(2), e);
    let mut out = Vec::new();
    match real.family {
        LieFamily::TwistedB2 => {
            let s = pow2(m + 1);
            out.push(("q-1".to_string(), primes_of(&(q - &one))?));
            out.push(("q+2^(m+1)+1".to_string(), primes_of(&(q + &s + &one))?));
            out.push(("q-2^(m+1)+1".to_string(), primes_of(&(q - &s + &one))?));
        }
        LieFamily::TwistedG2 => {
            let s = num_traits::pow(nat(3), m + 1);
            let odd = |v: Vec<Natural>| v.into_iter().filter(|p| *p != nat(2)).collect::<Vec<_>>();
            out.push(("q-1 without 2".to_string(), odd(primes_of(&(q - &one))?)));
            out.push(("q+3^(m+1)+1 without 2".to_string(), odd(primes_of(&(q + &s + &one))?)));
            out.push(("q-3^(m+1)+1 without 2".to_string(), odd(primes_of(&(q - &s + &one))?)));
        }
        LieFamily::TwistedF4 => {
            let s = pow2(m + 1);
            let t = pow2(3 * m + 2);
            let q2 = q * q;
            out.push(("q^2+1".to_string(), primes_of(&(&q2 + &one))?));
            out.push(("q^2-1".to_string(), primes_of(&(&q2 - &one))?));
            out.push(("q+2^(m+1)+1".to_string(), primes_of(&(q + &s + &one))?));
            out.push(("q-2^(m+1)+1".to_string(), primes_of(&(q - &s + &one))?));
            out.push(("q^2+2^(3m+2)-2^(m+1)-1".to_string(), primes_of(&(&q2 + &t - &s - &one))?));
            out.push(("q^2-2^(3m+2)+2^(m+1)-1".to_string(), primes_of(&(&q2 + &s - &t - &one))?));
            // cyclic maximal tori q^2 ± sqrt(2)q^{3/2} + q ± sqrt(2q) + 1
            out.push(("q^2+2^(3m+2)+q+2^(m+1)+1".to_string(), primes_of(&(&q2 + &t + q + &s + &one))?));
            out.push(("q^2-2^(3m+2)+q-2^(m+1)+1".to_string(), primes_of(&(&q2 + q + &one - &t - &s))?));
        }
        _ => {}
    }
    Ok(out)
}

pub fn cond_VI(real: &LieRealization, pi: &PrimeSet) -> Result<ConditionTrace> {
    let mut t = ConditionTrace::new(ConditionId::VI, Some(real));
    let item = match real.family {
        LieFamily::TwistedB2 => 1,
        LieFamily::TwistedG2 => 2,
        LieFamily::TwistedF4 => 3,
        _ => return Ok(t.fail("S is not 2B2, 2G2 or 2F4")),
    };
    let inter = intersection(real, pi)?;
    t.set("pi_cap_S", &inter);
    t.nat("q", &real.q);
    t.bind("m", Value::Int((real.field_degree() as i64 - 1) / 2));
    let sets = sixth_candidate_sets(real)?;
    for (name, set) in &sets {
        t.set(&format!("set.{name}"), set);
    }
    for (name, set) in &sets {
        if inter.iter().all(|p| set.contains(p)) {
            t.bind("matched", Value::Text(name.clone()));
            return Ok(t.succeed(Some(format!("VI.{item}"))));
        }
    }
    Ok(t.fail("π ∩ π(S) lies in none of the listed sets"))
}

pub(super) fn seventh_items(real: &LieRealization, tau: &[Natural], phi: &[Natural]) -> [(u32, bool); 10] {
    use LieFamily::*;
    let f = real.family;
    let n = name_parameter(real);
    let above =
        |xs: &[Natural], k: u32, plus: u32| n.as_ref().map(|n| xs.iter().all(|s| *s > n * k + plus)).unwrap_or(false);
    let items: [(u32, bool); 10] = [
        (1, matches!(f, A | TwistedA) && above(tau, 1, 0) && above(phi, 1, 1)),
        (2, f == B && above(tau, 2, 1)),
        (3, f == C && above(tau, 1, 0) && above(phi, 2, 1)),
        (4, matches!(f, D | TwistedD) && above(tau, 2, 0)),
        (5, matches!(f, G2 | TwistedG2) && absent(tau, &[7])),
        (6, f == F4 && absent(tau, &[5, 7])),
        (7, matches!(f, E6 | TwistedE6) && absent(tau, &[5, 7])),
        (8, f == E7 && absent(tau, &[5, 7, 11])),
        (9, f == E8 && absent(tau, &[5, 7, 11, 13])),
        (10, f == TrialityD4 && absent(tau, &[7])),
    ];
    items
}

pub fn cond_VII(real: &LieRealization, pi: &PrimeSet) -> Result<ConditionTrace> {
    let mut t = ConditionTrace::new(ConditionId::VII, Some(real));
    t.nat("p", &real.p);
    t.nat("q", &real.q);
    if !pi.contains_u64(2) {
        return Ok(t.fail("2 ∉ π"));
    }
    if pi.contains_u64(3) {
        return Ok(t.fail("3 ∈ π"));
    }
    if pi.contains(&real.p) {
        return Ok(t.fail("p ∈ π"));
    }
    if real.q.is_even() {
        return Err(Error::HypothesisViolated(format!("q = {} is even although 2 ∈ π and p ∉ π", real.q)));
    }
    let inter = intersection(real, pi)?;
    t.set("pi_cap_S", &inter);
    let eps = epsilon_of(&real.q)?;
    t.bind("epsilon", Value::Int(eps.as_i8() as i64));
    let q_minus_eps = match eps {
        Sign::Plus => &real.q - 1u32,
        Sign::Minus => &real.q + 1u32,
    };
    t.nat("q_minus_epsilon", &q_minus_eps);
    let tau: Vec<Natural> = inter.iter().filter(|s| **s != nat(2)).cloned().collect();
    let phi: Vec<Natural> = tau.iter().filter(|s| fermat_prime_test(s)).cloned().collect();
    t.set("tau", &tau);
    t.set("phi", &phi);
    if let Some(n) = name_parameter(real) {
        t.nat("n", &n);
    }
    if !tau.iter().all(|s| divides(s, &q_minus_eps)) {
        return Ok(t.fail("τ ⊄ π(q-ε)"));
    }
    let items = seventh_items(real, &tau, &phi);
    Ok(match items.iter().find(|(_, ok)| *ok).map(|(k, _)| *k) {
        Some(k) => t.succeed(Some(format!("VII.{k}"))),
        None => t.fail("no item of VII holds"),
    })
}
