//! Permutations on at most 128 points, read and written in 1-based cycle notation.

use std::fmt;
use std::str::FromStr;

use crate::error::{OracleError, Result};

pub const MAX_DEGREE: usize = 128;

/// `images[i]` is the image of point `i` (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u8).collect() }
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i as usize >= images.len() || std::mem::replace(&mut seen[i as usize], true) {
                return Err(OracleError::Parse("images do not form a bijection".into()));
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&i| self.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                c.push(j);
                j = self.apply(j);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        use num_integer::Integer;
        self.cycles().iter().fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Pads with fixed points up to `degree`.
    pub fn extended(&self, degree: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..degree as u8);
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let bad = |why: &str| OracleError::Parse(format!("{s:?}: {why}"));
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
        let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let pts = body[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<usize>() {
                Ok(p) if (1..=MAX_DEGREE).contains(&p) => Ok(p - 1),
                _ => Err(bad("points must be integers in 1..=128")),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut sorted = pts.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != pts.len() {
            return Err(bad("repeated point in a cycle"));
        }
        cycles.push(pts);
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl FromStr for Permutation {
    type Err = OracleError;

    /// Disjoint or overlapping cycles, composed right to left: `(1 2)(2 3)` maps 3 to 1.
    fn from_str(s: &str) -> Result<Self> {
        let cycles = parse_cycles(s)?;
        let degree = cycles.iter().flatten().map(|p| p + 1).max().unwrap_or(0);
        let mut perm = Permutation::identity(degree);
        for c in cycles.iter().rev() {
            let mut cyc = Permutation::identity(degree);
            for (k, &p) in c.iter().enumerate() {
                cyc.images[p] = c[(k + 1) % c.len()] as u8;
            }
            perm = cyc.compose(&perm);
        }
        Ok(perm)
    }
}

/// Generator file: one permutation per line, `#` starts a comment. All
/// permutations are padded to the largest point mentioned.
pub fn parse_generators(text: &str) -> Result<Vec<Permutation>> {
    let perms = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::parse)
        .collect::<Result<Vec<Permutation>>>()?;
    let degree = perms.iter().map(Permutation::degree).max().unwrap_or(0);
    Ok(perms.into_iter().map(|p| p.extended(degree)).collect())
}
