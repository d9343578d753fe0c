//! ATLAS-style structure strings such as `2^4:(3xAlt_5):2` or `Sym_4 wr Sym_2`.
//!
//! Operators: `:` split extension, `.` nonsplit or unspecified extension,
//! `x` direct product, `o` central product, `wr` wreath product by a
//! permutation group. Atoms: integers `n` (cyclic, or a label such as `2_2`),
//! prime powers `p^k` and `p^{1+4}`, `Alt_n`/`A_n`, `Sym_n`/`S_n`, `Q_n`,
//! `D_n`, `L_n(q)`, `U_n(q)` and the sporadic names.

use std::str::FromStr;

use num_traits::One;

use crate::groups::{self, LieFamily, SimpleGroupId, Sporadic};
use crate::{Error, Natural, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Join {
    Split,
    NonSplit,
    Direct,
    Central,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    /// `degree` is the natural permutation degree when the atom can act as a wreath top group.
    Atom {
        text: String,
        order: Natural,
        degree: Option<u64>,
    },
    Join(Join, Box<Structure>, Box<Structure>),
    Wreath(Box<Structure>, Box<Structure>),
}

impl Structure {
    /// Order implied by the structure. `None` for central products, whose
    /// order depends on the amalgamated centre.
    pub fn order(&self) -> Option<Natural> {
        match self {
            Structure::Atom { order, .. } => Some(order.clone()),
            Structure::Join(Join::Central, ..) => None,
            Structure::Join(_, a, b) => Some(a.order()? * b.order()?),
            Structure::Wreath(base, top) => {
                let Structure::Atom { degree: Some(d), .. } = **top else { return None };
                Some(num_traits::pow(base.order()?, d as usize) * top.order()?)
            }
        }
    }
}

impl FromStr for Structure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { s: s.as_bytes(), i: 0, src: s };
        let st = p.expr()?;
        p.skip_ws();
        if p.i != p.s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(st)
    }
}

const NAMES: [&str; 23] = [
    "Alt", "Sym", "McL", "Suz", "O'N", "ON", "Co", "Fi", "HS", "He", "Ru", "HN", "Ly", "Th", "A", "S", "Q", "D", "L",
    "U", "M", "J", "B",
];

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    src: &'a str,
}

fn factorial(n: u64) -> Natural {
    (1..=n).fold(Natural::one(), |acc, k| acc * k)
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("structure {:?}: {what} at offset {}", self.src, self.i))
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek() == Some(b' ') {
            self.i += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.s[self.i..].starts_with(tok.as_bytes()) {
            self.i += tok.len();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Structure> {
        let mut lhs = self.wreath()?;
        loop {
            let join = if self.eat(":") {
                Join::Split
            } else if self.eat(".") {
                Join::NonSplit
            } else if self.eat("x") {
                Join::Direct
            } else if self.eat("o") {
                Join::Central
            } else {
                return Ok(lhs);
            };
            let rhs = self.wreath()?;
            lhs = Structure::Join(join, Box::new(lhs), Box::new(rhs));
        }
    }

    fn wreath(&mut self) -> Result<Structure> {
        let base = self.term()?;
        if self.eat("wr") {
            let top = self.term()?;
            if !matches!(top, Structure::Atom { degree: Some(_), .. }) {
                return Err(self.err("wreath top group has no natural degree"));
            }
            return Ok(Structure::Wreath(Box::new(base), Box::new(top)));
        }
        Ok(base)
    }

    fn term(&mut self) -> Result<Structure> {
        if self.eat("(") {
            let inner = self.expr()?;
            if !self.eat(")") {
                return Err(self.err("expected ')'"));
            }
            return Ok(inner);
        }
        self.skip_ws();
        let start = self.i;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => self.number_atom(start),
            Some(c) if c.is_ascii_uppercase() => self.named_atom(start),
            _ => Err(self.err("expected a group")),
        }
    }

    fn digits(&mut self) -> Result<u64> {
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        self.src[start..self.i].parse().map_err(|_| self.err("expected a number"))
    }

    /// `_k` or `_{k}`.
    fn subscript(&mut self) -> Result<Option<u64>> {
        if self.peek() != Some(b'_') {
            return Ok(None);
        }
        self.i += 1;
        let braced = self.peek() == Some(b'{');
        if braced {
            self.i += 1;
        }
        let k = self.digits()?;
        if braced && !self.eat("}") {
            return Err(self.err("expected '}'"));
        }
        Ok(Some(k))
    }

    fn atom(&self, start: usize, order: Natural, degree: Option<u64>) -> Structure {
        Structure::Atom { text: self.src[start..self.i].to_string(), order, degree }
    }

    fn number_atom(&mut self, start: usize) -> Result<Structure> {
        let base = self.digits()?;
        let mut exp = 1u64;
        if self.peek() == Some(b'^') {
            self.i += 1;
            let braced = self.peek() == Some(b'{');
            if braced {
                self.i += 1;
            }
            exp = self.digits()?;
            while self.peek() == Some(b'+') {
                self.i += 1;
                exp += self.digits()?;
            }
            if braced && !self.eat("}") {
                return Err(self.err("expected '}'"));
            }
        }
        // a subscript on a cyclic factor is a label, e.g. 2_2
        self.subscript()?;
        let order = num_traits::pow(Natural::from(base), exp as usize);
        let degree = (exp == 1).then_some(base);
        Ok(self.atom(start, order, degree))
    }

    fn named_atom(&mut self, start: usize) -> Result<Structure> {
        let rest = &self.src[self.i..];
        let name = NAMES.iter().find(|n| rest.starts_with(**n)).ok_or_else(|| self.err("unknown group name"))?;
        self.i += name.len();
        let index = match self.subscript()? {
            Some(k) => Some(k),
            None if self.peek().is_some_and(|c| c.is_ascii_digit()) => Some(self.digits()?),
            None => None,
        };
        let mut field = None;
        if matches!(*name, "L" | "U") {
            if !self.eat("(") {
                return Err(self.err("expected '(' after a classical group name"));
            }
            field = Some(self.digits()?);
            if !self.eat(")") {
                return Err(self.err("expected ')'"));
            }
        }
        let prime_mark = self.peek() == Some(b'\'');
        if prime_mark {
            self.i += 1;
        }
        let need = |v: Option<u64>| v.ok_or_else(|| self.err("missing index"));
        let (order, degree) = match *name {
            "Alt" | "A" => {
                let n = need(index)?;
                (factorial(n) / 2u32, Some(n))
            }
            "Sym" | "S" => {
                let n = need(index)?;
                (factorial(n), Some(n))
            }
            "Q" | "D" => (Natural::from(need(index)?), None),
            "L" | "U" => {
                let n = need(index)? as u32;
                let fam = if *name == "L" { LieFamily::A } else { LieFamily::TwistedA };
                let q = Natural::from(field.unwrap_or_default());
                let id = groups::validate(&SimpleGroupId::Lie { family: fam, rank: n - 1, q })?;
                (groups::order(&id), None)
            }
            _ => {
                let mut key = name.to_string();
                if let Some(k) = index {
                    key.push_str(&k.to_string());
                }
                if prime_mark {
                    key.push('\'');
                }
                let g = Sporadic::from_str(&key).map_err(|_| self.err("unknown sporadic group"))?;
                (g.order(), None)
            }
        };
        Ok(self.atom(start, order, degree))
    }
}
