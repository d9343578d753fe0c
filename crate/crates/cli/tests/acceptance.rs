//! Acceptance criteria as one binary: a pass/fail line per criterion, exit
//! status 1 when any criterion fails.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use hall_oracle::{composition_factors, is_dpi, load_generators, PermGroup, Subgroup};
use hall_verdict::arith::{factorial_equality_criterion, factorial_r_part, is_prime_u64, prod_r_part, r_part};
use hall_verdict::catalog::{hall_sporadic, hall_symmetric, sporadic_table, CatalogGroup};
use hall_verdict::classifier::{dpi_simple, dx_group, dx_simple, dx_simple_direct, ClassSpec, FactorStatus};
use hall_verdict::conditions::{cond_II, sporadic_items, ConditionTrace, Options};
use hall_verdict::groups::{self, LieFamily, SimpleGroupId, Sporadic};
use hall_verdict::{Natural, PrimeSet};
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

struct Report {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Report {
    Report { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Report {
    Report { ok: false, detail: detail.into() }
}

fn nat(n: u64) -> Natural {
    Natural::from(n)
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../oracle/data").join(format!("{name}.gens"))
}

fn load(name: &str) -> PermGroup {
    load_generators(data(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn subsets<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    (0..1u64 << items.len())
        .map(|m| (0..items.len()).filter(|i| m >> i & 1 == 1).map(|i| items[i].clone()).collect())
        .collect()
}

fn spectrum_of_order(n: usize) -> Vec<Natural> {
    hall_verdict::arith::prime_divisors_u64(n as u64).into_iter().map(nat).collect()
}

fn finite(set: Vec<Natural>) -> PrimeSet {
    PrimeSet::finite(set).expect("primes")
}

fn id(s: &str) -> SimpleGroupId {
    groups::validate(&s.parse().unwrap()).unwrap()
}

fn condition_two_fidelity() -> Report {
    const PRINTED_POSITIVES: usize = 24;
    let mut positives = 0;
    let mut mismatches = Vec::new();
    for item in sporadic_items() {
        let s = SimpleGroupId::Sporadic(item.group);
        let spectrum = groups::prime_spectrum(&s).unwrap();
        for set in subsets(&spectrum).into_iter().filter(|v| v.len() <= 3) {
            let listed = item.sets.iter().any(|p| p.iter().map(|&x| nat(x)).collect::<Vec<_>>() == set);
            let got = cond_II(&s, &finite(set.clone())).unwrap().satisfied();
            if got != listed {
                mismatches.push(format!("{} {set:?}", item.group));
            }
            positives += got as usize;
        }
    }
    let detail = format!(
        "{} items, {positives} positive pairs (expected {PRINTED_POSITIVES}), {} set mismatches",
        sporadic_items().len(),
        mismatches.len()
    );
    match mismatches.is_empty() && positives == PRINTED_POSITIVES && sporadic_items().len() == 17 {
        true => pass(detail),
        false => fail(detail),
    }
}

fn shapes(v: &[hall_verdict::catalog::HallRecord]) -> Vec<&str> {
    v.iter().map(|r| r.structure.as_str()).collect()
}

fn table_fidelity() -> Report {
    let pi = PrimeSet::of;
    let mut bad = Vec::new();
    let symmetric: [(u64, &[u64], Option<&str>); 6] = [
        (7, &[2, 3], Some("Sym_3xSym_4")),
        (8, &[2, 3], Some("Sym_4 wr Sym_2")),
        (5, &[2, 3], Some("Sym_4")),
        (13, &[2, 3, 5, 7, 11], Some("Sym_12")),
        (9, &[2, 3], None),
        (10, &[2, 3, 5], None),
    ];
    for (n, set, want) in symmetric {
        let got = hall_symmetric(n, &pi(set)).ok().flatten().map(|r| r.structure);
        if got.as_deref() != want {
            bad.push(format!("Sym({n}) {set:?}"));
        }
    }
    // every prime n with π ∩ π(n!) = π((n-1)!)
    for n in (5..=60u64).filter(|&n| is_prime_u64(n)) {
        let below: Vec<u64> = (2..n).filter(|&p| is_prime_u64(p)).collect();
        if below.len() < 2 {
            continue;
        }
        let got = hall_symmetric(n, &pi(&below)).ok().flatten().map(|r| r.structure);
        if got != Some(format!("Sym_{}", n - 1)) {
            bad.push(format!("Sym({n}) primes below"));
        }
    }
    let table = sporadic_table();
    if table.len() != 15 {
        bad.push(format!("{} sporadic rows", table.len()));
    }
    for rec in &table {
        let CatalogGroup::Sporadic(g) = rec.group else { continue };
        let set = finite(rec.pi_intersection.clone());
        match hall_sporadic(g, &set) {
            Ok(v) if v.contains(rec) => {}
            _ => bad.push(format!("{g} {}", rec.structure)),
        }
    }
    let negatives: [(Sporadic, &[u64]); 3] =
        [(Sporadic::M12, &[2, 3]), (Sporadic::M22, &[2, 3]), (Sporadic::Co1, &[2, 3, 5])];
    for (g, set) in negatives {
        if !hall_sporadic(g, &pi(set)).map(|v| v.is_empty()).unwrap_or(false) {
            bad.push(format!("{g} {set:?} off-table"));
        }
    }
    // off-table everywhere: every admissible subset of a listed group that no row names
    for g in [Sporadic::M11, Sporadic::M22, Sporadic::M23, Sporadic::J1] {
        let spectrum = g.prime_spectrum();
        for set in subsets(&spectrum) {
            if !set.contains(&nat(2)) || set.len() < 2 || set.len() == spectrum.len() {
                continue;
            }
            let rows =
                table.iter().filter(|r| r.group == CatalogGroup::Sporadic(g) && r.pi_intersection == set).count();
            let got = hall_sporadic(g, &finite(set.clone())).map(|v| v.len()).unwrap_or(usize::MAX);
            if got != rows {
                bad.push(format!("{g} {set:?}"));
            }
        }
    }
    let m23 = hall_sporadic(Sporadic::M23, &pi(&[2, 3, 5])).unwrap();
    if shapes(&m23) != ["2^4:Alt_6", "2^4:(3xAlt_5):2"] {
        bad.push("M23 {2,3,5}".into());
    }
    match bad.is_empty() {
        true => pass(format!("{} sporadic rows and symmetric rows reproduced, negatives empty", table.len())),
        false => fail(format!("mismatches: {}", bad.join("; "))),
    }
}

fn arithmetic_suite() -> Report {
    let primes: Vec<u64> = (3..=37).filter(|&r| is_prime_u64(r)).collect();
    let (mut cases, mut product_mismatch, mut criterion_mismatch, mut below_domain) = (0, 0, 0, 0);
    for q in 2..=50u64 {
        for &r in primes.iter().filter(|&&r| q % r != 0) {
            let (qn, rn) = (nat(q), nat(r));
            for signed in [false, true] {
                let mut product = Natural::one();
                let mut power = Natural::one();
                for n in 1..=40u64 {
                    power *= q;
                    if signed && n % 2 == 1 {
                        product *= &power + 1u32;
                    } else {
                        product *= &power - 1u32;
                    }
                    cases += 1;
                    let closed = prod_r_part(&qn, n, &rn, signed).unwrap();
                    if closed != r_part(&product, &rn) {
                        product_mismatch += 1;
                    }
                    let equal = closed == factorial_r_part(&nat(n), &rn);
                    if factorial_equality_criterion(&qn, n, &rn, signed).unwrap() != equal {
                        criterion_mismatch += 1;
                        below_domain += (n < r - 1) as usize;
                    }
                }
            }
        }
    }
    let detail = format!(
        "{cases} cases: {product_mismatch} product mismatches, {criterion_mismatch} biconditional mismatches \
         ({below_domain} with n < r-1)"
    );
    match product_mismatch == 0 && criterion_mismatch == 0 {
        true => pass(detail),
        false => fail(detail),
    }
}

const CORPUS: [&str; 12] =
    ["a5", "s5", "a6", "s6", "psl27", "pgl27", "psl28", "psl211", "psl213", "sl25", "a7", "psl33"];

fn oracle_equivalence() -> Report {
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for name in CORPUS {
        let g = load(name);
        let factors = match composition_factors(&g) {
            Ok(f) => f,
            Err(e) => return fail(format!("{name}: {e}")),
        };
        for set in subsets(&spectrum_of_order(g.order())) {
            let pi = finite(set);
            let classified = dx_group(&factors, &ClassSpec::all_pi(pi.clone()), Options::default()).unwrap().answer;
            let brute = is_dpi(&g, &pi).unwrap();
            checked += 1;
            if classified != brute {
                mismatches.push(format!("{name} {pi}: classifier {classified}, oracle {brute}"));
            }
        }
    }
    match mismatches.is_empty() {
        true => pass(format!("{} groups, {checked} prime sets, 0 mismatches", CORPUS.len())),
        false => fail(format!("{} mismatches: {}", mismatches.len(), mismatches.join("; "))),
    }
}

fn extension_closure() -> Report {
    let cases: [(&str, fn(&PermGroup) -> Subgroup); 4] = [
        ("s5", PermGroup::derived_subgroup),
        ("pgl27", PermGroup::derived_subgroup),
        ("sl25", PermGroup::center),
        ("c2xa5", PermGroup::derived_subgroup),
    ];
    let mut bad = Vec::new();
    let mut checked = 0;
    let expected_normal = [60, 168, 2, 60];
    for ((name, pick), want) in cases.into_iter().zip(expected_normal) {
        let g = load(name);
        let n = pick(&g);
        if n.order() != want || !g.is_normal(&n) {
            bad.push(format!("{name}: normal subgroup of order {}", n.order()));
            continue;
        }
        let sub = g.subgroup_as_group(&n).unwrap();
        let quo = g.quotient(&n).unwrap();
        for set in subsets(&spectrum_of_order(g.order())) {
            let pi = finite(set);
            let whole = is_dpi(&g, &pi).unwrap();
            let parts = is_dpi(&sub, &pi).unwrap() && is_dpi(&quo, &pi).unwrap();
            checked += 1;
            if whole != parts {
                bad.push(format!("{name} {pi}"));
            }
        }
    }
    match bad.is_empty() {
        true => pass(format!("4 extensions, {checked} prime sets, 0 mismatches")),
        false => fail(format!("mismatches: {}", bad.join("; "))),
    }
}

fn random_simple(rng: &mut impl Rng) -> SimpleGroupId {
    const FIELDS: [u64; 22] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 49, 64, 81];
    loop {
        let text = match rng.gen_range(0..10) {
            0 => format!("Cyc({})", [2u64, 3, 5, 7, 11, 13, 101].choose(rng).unwrap()),
            1 => format!("Alt({})", rng.gen_range(5..=40)),
            2 => format!("Spor({})", Sporadic::ALL.choose(rng).unwrap().name()),
            3 => format!("Lie(2B2,1,{})", 1u64 << (2 * rng.gen_range(1..=6) + 1)),
            4 => format!("Lie(2G2,1,{})", 3u64.pow(2 * rng.gen_range(1..=3) + 1)),
            _ => {
                let fam = LieFamily::ALL.choose(rng).unwrap();
                let q = FIELDS.choose(rng).unwrap();
                let rank = match fam {
                    LieFamily::A | LieFamily::TwistedA => rng.gen_range(1..=6),
                    LieFamily::B | LieFamily::C => rng.gen_range(2..=5),
                    LieFamily::D | LieFamily::TwistedD => rng.gen_range(4..=6),
                    LieFamily::E6 => 6,
                    LieFamily::TwistedE6 | LieFamily::F4 => 4,
                    LieFamily::E7 => 7,
                    LieFamily::E8 => 8,
                    LieFamily::G2 | LieFamily::TrialityD4 | LieFamily::TwistedF4 => 2,
                    LieFamily::TwistedG2 | LieFamily::TwistedB2 => 1,
                };
                format!("Lie({fam},{rank},{q})")
            }
        };
        let Ok(parsed) = text.parse::<SimpleGroupId>() else { continue };
        let Ok(s) = groups::validate(&parsed) else { continue };
        if groups::prime_spectrum(&s).is_ok() {
            return s;
        }
    }
}

fn random_class(rng: &mut impl Rng, s: &SimpleGroupId) -> ClassSpec {
    let spectrum = groups::prime_spectrum(s).unwrap();
    let mut set: Vec<Natural> = spectrum.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
    for p in [2u64, 3, 5, 7, 11, 13] {
        if rng.gen_bool(0.2) {
            set.push(nat(p));
        }
    }
    let pi = finite(set);
    match rng.gen_range(0..3) {
        0 => ClassSpec::all_pi(pi),
        1 => ClassSpec::solvable(pi),
        _ => {
            let within = pi.clone();
            // alternating π-groups only
            ClassSpec::custom(pi, move |g| {
                matches!(g, SimpleGroupId::Alternating(_))
                    && groups::prime_spectrum(g).map(|v| within.contains_all(&v)).unwrap_or(false)
            })
        }
    }
}

fn verdict_paths_agree() -> Report {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut disagree, mut not_dpi, mut dx_true) = (Vec::new(), Vec::new(), 0);
    for _ in 0..500 {
        let s = random_simple(&mut rng);
        let x = random_class(&mut rng, &s);
        let opts = Options { weyl_excludes_p: rng.gen_bool(0.5) };
        let via_formula = dx_simple(&s, &x, opts).unwrap().answer;
        let direct = dx_simple_direct(&s, &x, opts).unwrap();
        if via_formula != direct {
            disagree.push(format!("{s} {}", x.pi));
        }
        if via_formula {
            dx_true += 1;
            if !dpi_simple(&s, &x.pi, opts).unwrap().answer {
                not_dpi.push(format!("{s} {}", x.pi));
            }
        }
    }
    let detail = format!(
        "500 pairs ({dx_true} in the class): {} path disagreements, {} dx without dpi",
        disagree.len(),
        not_dpi.len()
    );
    match disagree.is_empty() && not_dpi.is_empty() {
        true => pass(detail),
        false => fail(format!("{detail}: {}", disagree.iter().chain(&not_dpi).cloned().collect::<Vec<_>>().join("; "))),
    }
}

const CORPUS_SIMPLE: [&str; 8] =
    ["Alt(5)", "Alt(6)", "PSL(2,7)", "PSL(2,8)", "PSL(2,11)", "PSL(2,13)", "Alt(7)", "PSL(3,3)"];

fn downward_closure() -> Report {
    let mut bad = Vec::new();
    let mut checked = 0;
    for name in CORPUS_SIMPLE {
        let s = id(name);
        let spectrum = groups::prime_spectrum(&s).unwrap();
        for set in subsets(&spectrum) {
            if set.len() == spectrum.len() {
                continue;
            }
            let pi = finite(set.clone());
            if !dpi_simple(&s, &pi, Options::default()).unwrap().answer {
                continue;
            }
            for tau in subsets(&set) {
                checked += 1;
                let tau = finite(tau);
                if !dpi_simple(&s, &tau, Options::default()).unwrap().answer {
                    bad.push(format!("{name}: {pi} but not {tau}"));
                }
            }
        }
    }
    match bad.is_empty() {
        true => pass(format!("{} groups, {checked} subsets checked, 0 mismatches", CORPUS_SIMPLE.len())),
        false => fail(bad.join("; ")),
    }
}

fn satisfied_labels(status: &FactorStatus) -> Vec<String> {
    status.traces().iter().filter(|t| t.satisfied()).map(ConditionTrace::label).collect()
}

fn pinned_verdicts() -> Report {
    let cases: [(&str, &[u64], bool, Option<&str>); 5] = [
        ("PSL(2,7)", &[2, 3], false, None),
        ("PSL(2,7)", &[3, 7], true, Some("IV.1")),
        ("Lie(2B2,1,8)", &[2, 3], true, Some("I")),
        ("Alt(5)", &[2, 5], false, None),
        ("Lie(2B2,1,128)", &[5, 29], true, Some("VI.1")),
    ];
    let mut bad = Vec::new();
    for (name, set, want, label) in cases {
        let v = dpi_simple(&id(name), &PrimeSet::of(set), Options::default()).unwrap();
        let labels = satisfied_labels(&v.per_factor[0].status);
        let label_ok = label.is_none_or(|l| labels.iter().any(|x| x == l));
        if v.answer != want || !label_ok {
            bad.push(format!("{name} {set:?}: {} with {labels:?}", v.answer));
        }
    }
    match bad.is_empty() {
        true => pass("5 verdicts with their witness subcases"),
        false => fail(bad.join("; ")),
    }
}

type Criterion = (&'static str, fn() -> Report, Duration);

fn main() {
    let criteria: [Criterion; 8] = [
        ("Condition II fidelity", condition_two_fidelity, Duration::from_secs(1)),
        ("Hall subgroup tables", table_fidelity, Duration::from_secs(1)),
        ("arithmetic identities", arithmetic_suite, Duration::from_secs(30)),
        ("oracle and classifier agree", oracle_equivalence, Duration::from_secs(300)),
        ("extension closure", extension_closure, Duration::from_secs(60)),
        ("verdict paths agree", verdict_paths_agree, Duration::from_secs(60)),
        ("downward closure", downward_closure, Duration::from_secs(60)),
        ("pinned verdicts", pinned_verdicts, Duration::from_secs(1)),
    ];
    let mut failures = 0;
    for (i, (name, check, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut report = check();
        let elapsed = start.elapsed();
        if elapsed > budget {
            report.ok = false;
            report.detail.push_str(&format!(", over the {}s budget", budget.as_secs()));
        }
        failures += !report.ok as usize;
        let verdict = if report.ok { "PASS" } else { "FAIL" };
        println!("criterion {} {verdict} [{name}] {} ({:.2}s)", i + 1, report.detail, elapsed.as_secs_f64());
    }
    println!("{} of 8 criteria passed", 8 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
