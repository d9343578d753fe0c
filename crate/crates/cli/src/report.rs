//! JSON rendering. Objects are `serde_json::Map`, which keeps keys sorted,
//! so output is byte-deterministic.

use hall_verdict::classifier::{ClassSpec, FactorStatus, FactorVerdict, Verdict};
use hall_verdict::conditions::{ConditionTrace, Outcome, Value};
use hall_verdict::{Natural, PrimeSet};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value as Json};

use crate::SCHEMA_VERSION;

pub fn render(mut body: Map<String, Json>) -> String {
    body.insert("schema".into(), json!(SCHEMA_VERSION));
    let mut s = serde_json::to_string_pretty(&Json::Object(body)).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Integers that fit in `u64` as numbers, larger ones as decimal strings.
pub fn nat(n: &Natural) -> Json {
    match n.to_u64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn nats(v: &[Natural]) -> Json {
    Json::Array(v.iter().map(nat).collect())
}

pub fn prime_set(pi: &PrimeSet) -> Json {
    match pi {
        PrimeSet::Finite(v) => json!({ "kind": "finite", "primes": nats(v) }),
        PrimeSet::Cofinite(v) => json!({ "kind": "cofinite", "excluded": nats(v) }),
    }
}

fn value(v: &Value) -> Json {
    match v {
        Value::Nat(n) => nat(n),
        Value::Int(i) => json!(i),
        Value::Bool(b) => json!(b),
        Value::Set(s) => nats(s),
        Value::Map(m) => Json::Object(m.iter().map(|(k, v)| (k.to_string(), nat(v))).collect()),
        Value::Text(t) => json!(t),
    }
}

fn bindings(t: &ConditionTrace) -> Json {
    Json::Object(t.bindings.iter().map(|(k, v)| (k.clone(), value(v))).collect())
}

fn trace(t: &ConditionTrace) -> Json {
    let (outcome, reason) = match &t.outcome {
        Outcome::Satisfied => ("satisfied", Json::Null),
        Outcome::Failed(r) => ("failed", json!(r)),
    };
    json!({
        "condition": t.condition.numeral(),
        "subcase": t.subcase,
        "label": t.label(),
        "realization": t.realization.as_ref().map(|r| r.to_string()),
        "outcome": outcome,
        "reason": reason,
        "bindings": bindings(t),
        "flags": t.flags,
    })
}

fn factor(f: &FactorVerdict) -> Json {
    let (status, reason, notes) = match &f.status {
        FactorStatus::InClass => ("in_class", Json::Null, vec![]),
        FactorStatus::ConditionMet { notes, .. } => ("condition_met", Json::Null, notes.clone()),
        FactorStatus::Failed { reason, notes, .. } => ("failed", json!(reason), notes.clone()),
    };
    let witness = f.status.witness();
    json!({
        "id": f.factor.to_string(),
        "status": status,
        "holds": f.status.holds(),
        "reason": reason,
        "witness_condition": witness.map(|w| w.label()),
        "witness_realization": witness.and_then(|w| w.realization.as_ref()).map(|r| r.to_string()),
        "bindings": witness.map(bindings).unwrap_or_else(|| json!({})),
        "traces": f.status.traces().iter().map(trace).collect::<Vec<_>>(),
        "notes": notes,
    })
}

pub fn verdict(v: &Verdict, class: &ClassSpec) -> Map<String, Json> {
    let mut m = Map::new();
    m.insert("verdict".into(), json!(v.answer));
    m.insert("class".into(), json!({ "pi": prime_set(&class.pi), "rule": class.rule.name() }));
    m.insert("factors".into(), Json::Array(v.per_factor.iter().map(factor).collect()));
    m
}
