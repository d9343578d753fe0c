//! Textual descriptors: `Alt(n)`, `Spor(NAME)`, `Cyc(p)`, `Lie(FAM,rank,q)`,
//! plus `PSL(n,q)`, `PSU(n,q)`, `PSp(2n,q)`, `Sz(q)` and `Ree(q)`.

use std::fmt;
use std::str::FromStr;

use super::{LieFamily, SimpleGroupId, Sporadic};
use crate::{Error, Natural, Result};

fn parse_nat(s: &str) -> Result<Natural> {
    let t = s.trim();
    if let Some((base, exp)) = t.split_once('^') {
        let b: Natural = parse_nat(base)?;
        let e: u32 = exp.trim().parse().map_err(|_| Error::Parse(format!("bad exponent in {t:?}")))?;
        return Ok(num_traits::pow(b, e as usize));
    }
    t.parse::<Natural>().map_err(|_| Error::Parse(format!("expected a natural number, got {t:?}")))
}

fn parse_small(s: &str) -> Result<u64> {
    s.trim().parse::<u64>().map_err(|_| Error::Parse(format!("expected a small natural number, got {:?}", s.trim())))
}

fn parse_rank(s: &str) -> Result<u32> {
    s.trim().parse::<u32>().map_err(|_| Error::Parse(format!("expected a rank, got {:?}", s.trim())))
}

fn args_of<'a>(head: &str, s: &'a str) -> Option<Vec<&'a str>> {
    let rest = s.strip_prefix(head)?.trim_start();
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    Some(inner.split(',').collect())
}

fn arity<'a>(name: &str, args: Vec<&'a str>, n: usize) -> Result<Vec<&'a str>> {
    if args.len() == n {
        Ok(args)
    } else {
        Err(Error::Parse(format!("{name} takes {n} argument(s), got {}", args.len())))
    }
}

impl FromStr for SimpleGroupId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(a) = args_of("Alt", s) {
            let a = arity("Alt", a, 1)?;
            return Ok(SimpleGroupId::Alternating(parse_small(a[0])?));
        }
        if let Some(a) = args_of("Spor", s) {
            let a = arity("Spor", a, 1)?;
            return Ok(SimpleGroupId::Sporadic(a[0].parse::<Sporadic>()?));
        }
        if let Some(a) = args_of("Cyc", s) {
            let a = arity("Cyc", a, 1)?;
            return Ok(SimpleGroupId::Cyclic(parse_nat(a[0])?));
        }
        if let Some(a) = args_of("Lie", s) {
            let a = arity("Lie", a, 3)?;
            return Ok(SimpleGroupId::Lie {
                family: a[0].parse::<LieFamily>()?,
                rank: parse_rank(a[1])?,
                q: parse_nat(a[2])?,
            });
        }
        let linear = |family: LieFamily, a: Vec<&str>| -> Result<Self> {
            let dim = parse_rank(a[0])?;
            if dim < 2 {
                return Err(Error::Parse(format!("dimension {dim} too small for {family}")));
            }
            Ok(SimpleGroupId::Lie { family, rank: dim - 1, q: parse_nat(a[1])? })
        };
        if let Some(a) = args_of("PSL", s) {
            return linear(LieFamily::A, arity("PSL", a, 2)?);
        }
        if let Some(a) = args_of("PSU", s) {
            return linear(LieFamily::TwistedA, arity("PSU", a, 2)?);
        }
        if let Some(a) = args_of("PSp", s) {
            let a = arity("PSp", a, 2)?;
            let dim = parse_rank(a[0])?;
            if dim < 2 || dim % 2 != 0 {
                return Err(Error::Parse(format!("symplectic dimension must be even, got {dim}")));
            }
            return Ok(SimpleGroupId::Lie { family: LieFamily::C, rank: dim / 2, q: parse_nat(a[1])? });
        }
        if let Some(a) = args_of("Sz", s) {
            let a = arity("Sz", a, 1)?;
            return Ok(SimpleGroupId::Lie { family: LieFamily::TwistedB2, rank: 1, q: parse_nat(a[0])? });
        }
        if let Some(a) = args_of("Ree", s) {
            let a = arity("Ree", a, 1)?;
            return Ok(SimpleGroupId::Lie { family: LieFamily::TwistedG2, rank: 1, q: parse_nat(a[0])? });
        }
        Err(Error::Parse(format!("unrecognized group descriptor {s:?}")))
    }
}

impl fmt::Display for SimpleGroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleGroupId::Cyclic(p) => write!(f, "Cyc({p})"),
            SimpleGroupId::Alternating(n) => write!(f, "Alt({n})"),
            SimpleGroupId::Sporadic(s) => write!(f, "Spor({s})"),
            SimpleGroupId::Lie { family, rank, q } => write!(f, "Lie({family},{rank},{q})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SimpleGroupId {
        s.parse().unwrap()
    }

    #[test]
    fn grammar_and_aliases() {
        assert_eq!(p("Alt(7)"), SimpleGroupId::Alternating(7));
        assert_eq!(p(" Spor( M(24)' ) "), SimpleGroupId::Sporadic(Sporadic::Fi24));
        assert_eq!(p("Cyc(13)"), SimpleGroupId::Cyclic(Natural::from(13u32)));
        assert_eq!(p("Lie(2B2,1,8)"), SimpleGroupId::lie(LieFamily::TwistedB2, 1, 8));
        assert_eq!(p("PSL(2,7)"), SimpleGroupId::lie(LieFamily::A, 1, 7));
        assert_eq!(p("PSU(4,3)"), SimpleGroupId::lie(LieFamily::TwistedA, 3, 3));
        assert_eq!(p("PSp(6,2)"), SimpleGroupId::lie(LieFamily::C, 3, 2));
        assert_eq!(p("Sz(32)"), SimpleGroupId::lie(LieFamily::TwistedB2, 1, 32));
        assert_eq!(p("Ree(27)"), SimpleGroupId::lie(LieFamily::TwistedG2, 1, 27));
        assert_eq!(p("Lie(E8,8,2^5)"), SimpleGroupId::lie(LieFamily::E8, 8, 32));
    }

    #[test]
    fn display_round_trips() {
        for s in ["Alt(9)", "Spor(Fi24')", "Cyc(2)", "Lie(3D4,2,5)", "Lie(2A,4,2)"] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    #[test]
    fn malformed() {
        for s in ["Alt()", "Alt(x)", "PSp(5,3)", "Lie(Q,1,2)", "Foo(3)", "PSL(2)", "Spor(M13)"] {
            assert!(s.parse::<SimpleGroupId>().is_err(), "{s}");
        }
    }
}
