//! Hall subgroups of symmetric and sporadic groups as tabulated data.

mod structure;

use std::fmt;

pub use structure::{Join, Structure};

use crate::groups::primes_up_to;
use crate::groups::Sporadic;
use crate::primes::PrimeSet;
use crate::{Error, Natural, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogGroup {
    Symmetric(u64),
    Sporadic(Sporadic),
}

impl fmt::Display for CatalogGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogGroup::Symmetric(n) => write!(f, "Sym({n})"),
            CatalogGroup::Sporadic(s) => write!(f, "Spor({})", s.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallRecord {
    pub group: CatalogGroup,
    pub pi_intersection: Vec<Natural>,
    /// As printed, in ASCII notation (see [`Structure`]).
    pub structure: String,
    pub conjugacy_note: Option<String>,
}

impl HallRecord {
    pub fn parsed(&self) -> Result<Structure> {
        self.structure.parse()
    }
}

struct Row {
    group: Sporadic,
    pi: &'static [u64],
    structure: &'static str,
}

const TWO_SHAPES: &str = "two nonisomorphic Hall subgroups for this set";

const SPORADIC_ROWS: [Row; 15] = [
    Row { group: Sporadic::M11, pi: &[2, 3], structure: "3^2:Q_8.2" },
    Row { group: Sporadic::M11, pi: &[2, 3, 5], structure: "Alt_6.2" },
    Row { group: Sporadic::M22, pi: &[2, 3, 5], structure: "2^4:Alt_6" },
    Row { group: Sporadic::M23, pi: &[2, 3], structure: "2^4:(3xA_4):2" },
    Row { group: Sporadic::M23, pi: &[2, 3, 5], structure: "2^4:Alt_6" },
    Row { group: Sporadic::M23, pi: &[2, 3, 5], structure: "2^4:(3xAlt_5):2" },
    Row { group: Sporadic::M23, pi: &[2, 3, 5, 7], structure: "L_3(4):2_2" },
    Row { group: Sporadic::M23, pi: &[2, 3, 5, 7], structure: "2^4:Alt_7" },
    Row { group: Sporadic::M23, pi: &[2, 3, 5, 7, 11], structure: "M_22" },
    Row { group: Sporadic::M24, pi: &[2, 3, 5], structure: "2^6:3.Sym_6" },
    Row { group: Sporadic::J1, pi: &[2, 3], structure: "2xAlt_4" },
    Row { group: Sporadic::J1, pi: &[2, 3, 5], structure: "2xAlt_5" },
    Row { group: Sporadic::J1, pi: &[2, 3, 7], structure: "2^3:7:3" },
    Row { group: Sporadic::J1, pi: &[2, 7], structure: "2^3:7" },
    Row { group: Sporadic::J4, pi: &[2, 3, 5], structure: "2^11:(2^6:3.Sym_6)" },
];

fn rows() -> impl Iterator<Item = &'static Row> {
    SPORADIC_ROWS.iter()
}

fn nats(v: &[u64]) -> Vec<Natural> {
    v.iter().map(|&p| Natural::from(p)).collect()
}

fn record(row: &Row) -> HallRecord {
    let twins = rows().filter(|r| r.group == row.group && r.pi == row.pi).count();
    HallRecord {
        group: CatalogGroup::Sporadic(row.group),
        pi_intersection: nats(row.pi),
        structure: row.structure.to_string(),
        conjugacy_note: (twins > 1).then(|| TWO_SHAPES.to_string()),
    }
}

/// Every printed row of the sporadic table, in order.
pub fn sporadic_table() -> Vec<HallRecord> {
    rows().map(record).collect()
}

fn hypothesis(msg: String) -> Error {
    Error::HypothesisViolated(msg)
}

/// The π-Hall subgroup of `Sym(n)`, if any, for `π` meeting `π(n!)` in at least
/// two primes but not containing it.
pub fn hall_symmetric(n: u64, pi: &PrimeSet) -> Result<Option<HallRecord>> {
    if n < 5 {
        return Err(hypothesis(format!("n = {n} < 5")));
    }
    let spectrum = primes_up_to(n);
    let inter = pi.intersect(&spectrum);
    if inter.len() <= 1 {
        return Err(hypothesis(format!("|π ∩ π({n}!)| <= 1")));
    }
    if inter.len() == spectrum.len() {
        return Err(hypothesis(format!("π({n}!) ⊆ π")));
    }
    let structure = if crate::arith::is_prime_u64(n) && inter == primes_up_to(n - 1) {
        format!("Sym_{}", n - 1)
    } else if n == 7 && inter == nats(&[2, 3]) {
        "Sym_3xSym_4".to_string()
    } else if n == 8 && inter == nats(&[2, 3]) {
        "Sym_4 wr Sym_2".to_string()
    } else {
        return Ok(None);
    };
    Ok(Some(HallRecord { group: CatalogGroup::Symmetric(n), pi_intersection: inter, structure, conjugacy_note: None }))
}

/// All tabulated π-Hall subgroups of a sporadic group (or the Tits group)
/// when `2 ∈ π`, `π(G) ⊄ π` and `|π ∩ π(G)| > 1`. An empty list means none exists.
pub fn hall_sporadic(g: Sporadic, pi: &PrimeSet) -> Result<Vec<HallRecord>> {
    let spectrum = g.prime_spectrum();
    let inter = pi.intersect(&spectrum);
    if !pi.contains_u64(2) {
        return Err(hypothesis("2 ∉ π".into()));
    }
    if inter.len() == spectrum.len() {
        return Err(hypothesis(format!("π({}) ⊆ π", g.name())));
    }
    if inter.len() <= 1 {
        return Err(hypothesis(format!("|π ∩ π({})| <= 1", g.name())));
    }
    Ok(rows().filter(|r| r.group == g && nats(r.pi) == inter).map(record).collect())
}
