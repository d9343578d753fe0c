use std::str::FromStr;

use hall_oracle::{composition_factors, load_generators, pi_maximal_classes, PermGroup, PiLattice};
use hall_verdict::arith::{self, Sign};
use hall_verdict::catalog::{self, HallRecord};
use hall_verdict::classifier::{dx_group, ClassSpec};
use hall_verdict::conditions::Options;
use hall_verdict::groups::{self, SimpleGroupId, Sporadic};
use hall_verdict::PrimeSet;
use serde_json::{json, Map, Value as Json};

use crate::args::{ArithCommand, Check, ClassKind, ClassifyArgs, Command, HallArgs, OracleArgs, PiArgs};
use crate::report::{self, nat, nats, prime_set};
use crate::CliError;

type Answer = Result<(bool, Map<String, Json>), CliError>;

pub fn dispatch(cmd: &Command) -> Answer {
    match cmd {
        Command::Classify(a) => classify(a),
        Command::Hall(a) => hall(a),
        Command::Arith(a) => arith_cmd(a),
        Command::Oracle(a) => oracle(a),
    }
}

fn object(v: Json) -> Map<String, Json> {
    match v {
        Json::Object(m) => m,
        _ => unreachable!("built with json!({{..}})"),
    }
}

fn require_pi(p: &PiArgs) -> Result<&PrimeSet, CliError> {
    p.get().ok_or_else(|| CliError::Usage("one of --pi or --cofinite-pi is required".into()))
}

/// Splits on commas outside parentheses, so `Lie(2B2,1,8),Cyc(2)` has two items.
pub fn split_factors(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out.retain(|t| !t.is_empty());
    out
}

fn parse_factors(s: &str) -> Result<Vec<SimpleGroupId>, CliError> {
    split_factors(s).into_iter().map(|t| Ok(groups::validate(&t.parse::<SimpleGroupId>()?)?)).collect()
}

fn names(v: &[SimpleGroupId]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn classify(a: &ClassifyArgs) -> Answer {
    let pi = require_pi(&a.pi)?.clone();
    let (factors, source) = match (&a.factors, &a.gens) {
        (Some(text), None) => {
            let f = parse_factors(text)?;
            let src = json!({ "factors": names(&f) });
            (f, src)
        }
        (None, Some(path)) => {
            let g = load_generators(path)?;
            let f = composition_factors(&g)?;
            let src = json!({ "gens": path.display().to_string(), "order": g.order(), "factors": names(&f) });
            (f, src)
        }
        _ => return Err(CliError::Usage("give exactly one of --factors or --gens".into())),
    };
    let class = match a.class {
        ClassKind::Gpi => ClassSpec::all_pi(pi),
        ClassKind::Spi => ClassSpec::solvable(pi),
    };
    let opts = Options { weyl_excludes_p: a.weyl_excludes_p };
    let v = dx_group(&factors, &class, opts)?;
    let mut m = report::verdict(&v, &class);
    m.insert("source".into(), source);
    m.insert("options".into(), json!({ "weyl_excludes_p": a.weyl_excludes_p }));
    Ok((v.answer, m))
}

fn record(r: &HallRecord) -> Json {
    json!({
        "group": r.group.to_string(),
        "pi_intersection": nats(&r.pi_intersection),
        "structure": r.structure,
        "order": r.parsed().ok().and_then(|s| s.order()).map(|o| nat(&o)),
        "conjugacy_note": r.conjugacy_note,
    })
}

fn hall(a: &HallArgs) -> Answer {
    let (group, records) = if a.table {
        if a.pi.get().is_some() {
            return Err(CliError::Usage("--table takes no prime set".into()));
        }
        ("table".to_string(), catalog::sporadic_table())
    } else {
        let pi = require_pi(&a.pi)?;
        match (a.symmetric, &a.sporadic) {
            (Some(n), None) => (format!("Sym({n})"), catalog::hall_symmetric(n, pi)?.into_iter().collect()),
            (None, Some(name)) => {
                let g = Sporadic::from_str(name)
                    .map_err(|_| CliError::Usage(format!("unknown sporadic group {name:?}")))?;
                (format!("Spor({})", g.name()), catalog::hall_sporadic(g, pi)?)
            }
            _ => return Err(CliError::Usage("give one of --symmetric, --sporadic or --table".into())),
        }
    };
    let mut m = object(json!({
        "group": group,
        "records": records.iter().map(record).collect::<Vec<_>>(),
    }));
    if let Some(pi) = a.pi.get() {
        m.insert("pi".into(), prime_set(pi));
    }
    Ok((!records.is_empty(), m))
}

fn arith_cmd(a: &ArithCommand) -> Answer {
    let (op, input, value, answer) = match a {
        ArithCommand::Factor { n } => {
            let f = arith::prime_factorization(n)?;
            let parts: Vec<Json> = f.factors().iter().map(|(p, k)| json!({ "prime": nat(p), "exponent": k })).collect();
            ("factor", json!({ "n": nat(n) }), Json::Array(parts), true)
        }
        ArithCommand::RPart { n, r } => {
            check_prime(r)?;
            ("rpart", json!({ "n": nat(n), "r": nat(r) }), nat(&arith::r_part(n, r)), true)
        }
        ArithCommand::Order { q, r } => {
            ("order", json!({ "q": nat(q), "r": nat(r) }), nat(&arith::mult_order(q, r)?), true)
        }
        ArithCommand::EStar { e } => {
            if e == &hall_verdict::Natural::from(0u32) {
                return Err(CliError::Usage("e must be at least 1".into()));
            }
            ("estar", json!({ "e": nat(e) }), nat(&arith::e_star(e)), true)
        }
        ArithCommand::Epsilon { q } => {
            let s = arith::epsilon_of(q)?;
            ("epsilon", json!({ "q": nat(q) }), json!(s.as_i8()), s == Sign::Plus)
        }
        ArithCommand::FactorialRPart { n, r } => {
            check_prime(r)?;
            ("factorial-rpart", json!({ "n": nat(n), "r": nat(r) }), nat(&arith::factorial_r_part(n, r)), true)
        }
        ArithCommand::ProdRPart { q, n, r, signed } => {
            let v = arith::prod_r_part(q, *n, r, *signed)?;
            ("prod-rpart", json!({ "q": nat(q), "n": n, "r": nat(r), "signed": signed }), nat(&v), true)
        }
        ArithCommand::EqualityCriterion { q, n, r, signed } => {
            let v = arith::factorial_equality_criterion(q, *n, r, *signed)?;
            ("equality-criterion", json!({ "q": nat(q), "n": n, "r": nat(r), "signed": signed }), json!(v), v)
        }
        ArithCommand::Fermat { t } => {
            let v = arith::fermat_prime_test(t);
            ("fermat", json!({ "t": nat(t) }), json!(v), v)
        }
    };
    Ok((answer, object(json!({ "op": op, "input": input, "value": value }))))
}

fn check_prime(r: &hall_verdict::Natural) -> Result<(), CliError> {
    match arith::is_prime(r) {
        true => Ok(()),
        false => Err(CliError::Usage(format!("{r} is not prime"))),
    }
}

fn maximal_report(g: &PermGroup, pi: &PrimeSet) -> Result<Vec<Json>, CliError> {
    let mut classes: Vec<(usize, usize)> = pi_maximal_classes(g, pi)?.iter().map(|c| (c.order(), c.size)).collect();
    classes.sort_by(|a, b| b.cmp(a));
    Ok(classes.into_iter().map(|(order, count)| json!({ "order": order, "count": count })).collect())
}

fn oracle(a: &OracleArgs) -> Answer {
    if a.check == Check::Factors && a.pi.get().is_some() {
        return Err(CliError::Usage("--check factors takes no prime set".into()));
    }
    let pi = match a.check {
        Check::Factors => None,
        _ => Some(require_pi(&a.pi)?),
    };
    let g = load_generators(&a.gens)?;
    let mut m = object(json!({ "group_order": g.order(), "degree": g.degree() }));
    let answer = match (a.check, pi) {
        (Check::Factors, _) => {
            m.insert("check".into(), json!("factors"));
            m.insert("factors".into(), json!(names(&composition_factors(&g)?)));
            true
        }
        (Check::Maximal, Some(pi)) => {
            m.insert("check".into(), json!("maximal"));
            m.insert("classes".into(), Json::Array(maximal_report(&g, pi)?));
            true
        }
        (Check::Dpi, Some(pi)) => {
            let classes = maximal_report(&g, pi)?;
            let dpi = classes.len() == 1;
            m.insert("check".into(), json!("dpi"));
            m.insert("dpi".into(), json!(dpi));
            m.insert("classes".into(), Json::Array(classes));
            dpi
        }
        (Check::Hall, Some(pi)) => {
            let lattice = PiLattice::compute(&g, pi)?;
            let found = lattice.maximal().any(|c| c.order() == lattice.pi_part);
            m.insert("check".into(), json!("hall"));
            m.insert("hall".into(), json!(found));
            m.insert("pi_part".into(), json!(lattice.pi_part));
            found
        }
        (_, None) => unreachable!("prime set checked above"),
    };
    if let Some(pi) = pi {
        m.insert("pi".into(), prime_set(pi));
    }
    Ok((answer, m))
}
