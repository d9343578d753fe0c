//! The seven arithmetic conditions deciding when all π-maximal subgroups of a
//! nonabelian simple group are conjugate, each with an inspectable trace.

mod lie;
mod sporadic_items;

use std::collections::BTreeMap;
use std::fmt;

pub use lie::{cond_III, cond_IV, cond_V, cond_VI, cond_VII, sixth_candidate_sets};
pub use sporadic_items::{items as sporadic_items, SporadicItem};

use crate::groups::{self, LieRealization, SimpleGroupId};
use crate::primes::PrimeSet;
use crate::{Natural, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConditionId {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
}

impl ConditionId {
    pub const ALL: [ConditionId; 7] = [
        ConditionId::I,
        ConditionId::II,
        ConditionId::III,
        ConditionId::IV,
        ConditionId::V,
        ConditionId::VI,
        ConditionId::VII,
    ];

    pub fn numeral(self) -> &'static str {
        match self {
            ConditionId::I => "I",
            ConditionId::II => "II",
            ConditionId::III => "III",
            ConditionId::IV => "IV",
            ConditionId::V => "V",
            ConditionId::VI => "VI",
            ConditionId::VII => "VII",
        }
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.numeral())
    }
}

/// A named quantity recorded while evaluating a condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Nat(Natural),
    Int(i64),
    Bool(bool),
    Set(Vec<Natural>),
    /// Prime to value, e.g. `t -> e(q,t)`.
    Map(BTreeMap<Natural, Natural>),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(",");
        match self {
            Value::Nat(n) => write!(f, "{n}"),
            Value::Int(i) => write!(f, "{i}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Set(s) => write!(f, "{{{}}}", join(&mut s.iter().map(|p| p.to_string()))),
            Value::Map(m) => write!(f, "{{{}}}", join(&mut m.iter().map(|(k, v)| format!("{k}:{v}")))),
            Value::Text(t) => f.write_str(t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Satisfied,
    /// The first violated clause.
    Failed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionTrace {
    pub condition: ConditionId,
    /// Item label such as `IV.3`; set when the condition is satisfied through a numbered item.
    pub subcase: Option<String>,
    pub realization: Option<LieRealization>,
    pub bindings: BTreeMap<String, Value>,
    pub outcome: Outcome,
    /// Interpretation notes, e.g. which Weyl group reading was used.
    pub flags: Vec<String>,
}

impl ConditionTrace {
    pub(crate) fn new(condition: ConditionId, realization: Option<&LieRealization>) -> Self {
        ConditionTrace {
            condition,
            subcase: None,
            realization: realization.cloned(),
            bindings: BTreeMap::new(),
            outcome: Outcome::Failed(String::new()),
            flags: Vec::new(),
        }
    }

    pub fn satisfied(&self) -> bool {
        self.outcome == Outcome::Satisfied
    }

    /// `III`, `IV.1` and so on.
    pub fn label(&self) -> String {
        self.subcase.clone().unwrap_or_else(|| self.condition.to_string())
    }

    pub(crate) fn bind(&mut self, key: &str, value: Value) {
        self.bindings.insert(key.to_string(), value);
    }

    pub(crate) fn nat(&mut self, key: &str, n: &Natural) {
        self.bind(key, Value::Nat(n.clone()));
    }

    pub(crate) fn set(&mut self, key: &str, s: &[Natural]) {
        self.bind(key, Value::Set(s.to_vec()));
    }

    pub(crate) fn fail(mut self, reason: impl Into<String>) -> Self {
        self.outcome = Outcome::Failed(reason.into());
        self
    }

    pub(crate) fn succeed(mut self, subcase: Option<String>) -> Self {
        self.subcase = subcase;
        self.outcome = Outcome::Satisfied;
        self
    }
}

/// Interpretation switches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Options {
    /// Test only the primes of π other than the characteristic against the Weyl group order.
    pub weyl_excludes_p: bool,
}

/// `π ∩ π(S)`, ascending.
pub fn pi_intersection(s: &SimpleGroupId, pi: &PrimeSet) -> Result<Vec<Natural>> {
    Ok(pi.intersect(&groups::prime_spectrum(s)?))
}

#[allow(non_snake_case)]
pub fn cond_I(s: &SimpleGroupId, pi: &PrimeSet) -> Result<ConditionTrace> {
    let mut t = ConditionTrace::new(ConditionId::I, None);
    let inter = pi_intersection(s, pi)?;
    t.set("pi_cap_S", &inter);
    t.bind("size", Value::Int(inter.len() as i64));
    Ok(if inter.len() <= 1 { t.succeed(None) } else { t.fail("|π ∩ π(S)| > 1") })
}

#[allow(non_snake_case)]
pub fn cond_II(s: &SimpleGroupId, pi: &PrimeSet) -> Result<ConditionTrace> {
    let mut t = ConditionTrace::new(ConditionId::II, None);
    let SimpleGroupId::Sporadic(g) = s else {
        return Ok(t.fail("S is not sporadic"));
    };
    let inter = pi_intersection(s, pi)?;
    t.set("pi_cap_S", &inter);
    let mut listed = false;
    for item in sporadic_items() {
        if item.group != *g {
            continue;
        }
        listed = true;
        for set in item.sets {
            let set: Vec<Natural> = set.iter().map(|&p| Natural::from(p)).collect();
            if set == inter {
                t.bind("matched", Value::Set(set));
                return Ok(t.succeed(Some(format!("II.{}", item.number))));
            }
        }
    }
    Ok(if listed { t.fail("π ∩ π(S) is not one of the listed sets") } else { t.fail("S has no item in the list") })
}

/// Result of evaluating every condition on every realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub satisfied: bool,
    /// Index into `traces` of the first satisfied trace in the order I, II, then III-VII per realization.
    pub witness: Option<usize>,
    pub traces: Vec<ConditionTrace>,
    pub notes: Vec<String>,
}

impl ConditionReport {
    pub fn witness_trace(&self) -> Option<&ConditionTrace> {
        self.witness.map(|i| &self.traces[i])
    }
}

pub const TITS_NOTE: &str = "Conditions III-VII are not applied to the Tits group";

/// Evaluate I and II on `S`, and III-VII on each Lie realization of `S`.
/// Every trace is produced; nothing short-circuits.
pub fn satisfies_any(s: &SimpleGroupId, pi: &PrimeSet, opts: Options) -> Result<ConditionReport> {
    let s = groups::canonicalize(s);
    let mut traces = vec![cond_I(&s, pi)?, cond_II(&s, pi)?];
    let mut notes = Vec::new();
    if s == SimpleGroupId::Sporadic(groups::Sporadic::Tits) {
        notes.push(TITS_NOTE.to_string());
    }
    for real in groups::lie_realizations(&s) {
        traces.push(cond_III(&real, pi, opts)?);
        traces.push(cond_IV(&real, pi)?);
        traces.push(cond_V(&real, pi)?);
        traces.push(cond_VI(&real, pi)?);
        traces.push(cond_VII(&real, pi)?);
    }
    let witness = traces.iter().position(|t| t.satisfied());
    Ok(ConditionReport { satisfied: witness.is_some(), witness, traces, notes })
}
