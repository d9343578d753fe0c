//! Verdicts for simple groups and for groups given by their composition factors.

use std::fmt;
use std::sync::Arc;

use crate::conditions::{satisfies_any, ConditionReport, ConditionTrace, Options};
use crate::groups::{self, SimpleGroupId};
use crate::primes::PrimeSet;
use crate::{Error, Result};

type Predicate = Arc<dyn Fn(&SimpleGroupId) -> bool + Send + Sync>;

/// Which nonabelian simple π-groups belong to the class.
#[derive(Clone)]
pub enum SimpleRule {
    /// All π-groups.
    AllPiGroups,
    /// Solvable π-groups only.
    SolvableOnly,
    /// Caller-supplied membership for nonabelian simple groups. Closure of the
    /// resulting class under subgroups, quotients and extensions is the caller's business.
    Custom(Predicate),
}

impl fmt::Debug for SimpleRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl SimpleRule {
    pub fn name(&self) -> &'static str {
        match self {
            SimpleRule::AllPiGroups => "gpi",
            SimpleRule::SolvableOnly => "spi",
            SimpleRule::Custom(_) => "custom",
        }
    }
}

/// A complete class, described by its prime spectrum and its simple members.
#[derive(Debug, Clone)]
pub struct ClassSpec {
    pub pi: PrimeSet,
    pub rule: SimpleRule,
}

impl ClassSpec {
    pub fn all_pi(pi: PrimeSet) -> Self {
        ClassSpec { pi, rule: SimpleRule::AllPiGroups }
    }

    pub fn solvable(pi: PrimeSet) -> Self {
        ClassSpec { pi, rule: SimpleRule::SolvableOnly }
    }

    pub fn custom(pi: PrimeSet, f: impl Fn(&SimpleGroupId) -> bool + Send + Sync + 'static) -> Self {
        ClassSpec { pi, rule: SimpleRule::Custom(Arc::new(f)) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorStatus {
    InClass,
    /// `witness` is the first satisfied trace; `traces` holds all of them.
    ConditionMet {
        witness: ConditionTrace,
        traces: Vec<ConditionTrace>,
        notes: Vec<String>,
    },
    Failed {
        reason: String,
        traces: Vec<ConditionTrace>,
        notes: Vec<String>,
    },
}

impl FactorStatus {
    pub fn holds(&self) -> bool {
        !matches!(self, FactorStatus::Failed { .. })
    }

    pub fn witness(&self) -> Option<&ConditionTrace> {
        match self {
            FactorStatus::ConditionMet { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn traces(&self) -> &[ConditionTrace] {
        match self {
            FactorStatus::InClass => &[],
            FactorStatus::ConditionMet { traces, .. } | FactorStatus::Failed { traces, .. } => traces,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorVerdict {
    pub factor: SimpleGroupId,
    pub status: FactorStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub answer: bool,
    pub per_factor: Vec<FactorVerdict>,
}

impl Verdict {
    fn single(factor: SimpleGroupId, status: FactorStatus) -> Self {
        Verdict { answer: status.holds(), per_factor: vec![FactorVerdict { factor, status }] }
    }
}

fn is_pi_group(s: &SimpleGroupId, pi: &PrimeSet) -> Result<bool> {
    Ok(pi.contains_all(&groups::prime_spectrum(s)?))
}

pub fn in_class_simple(s: &SimpleGroupId, x: &ClassSpec) -> Result<bool> {
    if let SimpleGroupId::Cyclic(p) = s {
        return Ok(x.pi.contains(p));
    }
    match &x.rule {
        SimpleRule::AllPiGroups => is_pi_group(s, &x.pi),
        SimpleRule::SolvableOnly => Ok(false),
        SimpleRule::Custom(f) => {
            if !f(s) {
                return Ok(false);
            }
            if !is_pi_group(s, &x.pi)? {
                return Err(Error::InconsistentClass(format!(
                    "class with π = {} accepts {s}, whose order has primes outside π",
                    x.pi
                )));
            }
            Ok(true)
        }
    }
}

fn from_report(report: ConditionReport) -> FactorStatus {
    match report.witness_trace().cloned() {
        Some(witness) => FactorStatus::ConditionMet { witness, traces: report.traces, notes: report.notes },
        None => {
            FactorStatus::Failed { reason: "no condition holds".into(), traces: report.traces, notes: report.notes }
        }
    }
}

/// Whether all π-maximal subgroups of `s` are conjugate.
pub fn dpi_simple(s: &SimpleGroupId, pi: &PrimeSet, opts: Options) -> Result<Verdict> {
    let s = groups::canonicalize(s);
    if is_pi_group(&s, pi)? {
        return Ok(Verdict::single(s, FactorStatus::InClass));
    }
    let report = satisfies_any(&s, pi, opts)?;
    Ok(Verdict::single(s, from_report(report)))
}

/// Membership of `s` in the class of groups whose X-maximal subgroups are all conjugate.
pub fn dx_simple(s: &SimpleGroupId, x: &ClassSpec, opts: Options) -> Result<Verdict> {
    let s = groups::canonicalize(s);
    if in_class_simple(&s, x)? {
        return Ok(Verdict::single(s, FactorStatus::InClass));
    }
    if is_pi_group(&s, &x.pi)? {
        let status =
            FactorStatus::Failed { reason: "S is a π-group outside the class".into(), traces: vec![], notes: vec![] };
        return Ok(Verdict::single(s, status));
    }
    dpi_simple(&s, &x.pi, opts)
}

/// The same decision as [`dx_simple`], spelled out as one disjunction
/// without going through [`dpi_simple`].
pub fn dx_simple_direct(s: &SimpleGroupId, x: &ClassSpec, opts: Options) -> Result<bool> {
    let s = groups::canonicalize(s);
    let pi_group = is_pi_group(&s, &x.pi)?;
    Ok(in_class_simple(&s, x)? || (!pi_group && satisfies_any(&s, &x.pi, opts)?.satisfied))
}

/// Verdict for a group with the given composition factors. Every factor is
/// evaluated even after one fails.
pub fn dx_group(factors: &[SimpleGroupId], x: &ClassSpec, opts: Options) -> Result<Verdict> {
    let mut per_factor = Vec::with_capacity(factors.len());
    for f in factors {
        per_factor.extend(dx_simple(f, x, opts)?.per_factor);
    }
    let answer = per_factor.iter().all(|f| f.status.holds());
    Ok(Verdict { answer, per_factor })
}

pub fn dpi_group(factors: &[SimpleGroupId], pi: &PrimeSet, opts: Options) -> Result<Verdict> {
    dx_group(factors, &ClassSpec::all_pi(pi.clone()), opts)
}
