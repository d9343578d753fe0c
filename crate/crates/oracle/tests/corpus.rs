use std::collections::BTreeMap;

use hall_oracle::*;
use hall_verdict::groups::{self, SimpleGroupId};
use hall_verdict::{Natural, PrimeSet};
use rand::SeedableRng;

fn load(name: &str) -> PermGroup {
    load_generators(format!("{}/data/{name}.gens", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn pi(ps: &[u64]) -> PrimeSet {
    PrimeSet::of(ps)
}

fn spectrum(n: usize) -> Vec<u64> {
    hall_verdict::arith::prime_divisors_u64(n as u64)
}

fn subsets(primes: &[u64]) -> Vec<Vec<u64>> {
    (0..1u32 << primes.len())
        .map(|m| (0..primes.len()).filter(|i| m >> i & 1 == 1).map(|i| primes[i]).collect())
        .collect()
}

fn id(s: &str) -> SimpleGroupId {
    groups::validate(&s.parse().unwrap()).unwrap()
}

const SIMPLE_FILES: [(&str, &str); 16] = [
    ("a5", "Alt(5)"),
    ("psl27", "PSL(2,7)"),
    ("a6", "Alt(6)"),
    ("psl28", "PSL(2,8)"),
    ("psl211", "PSL(2,11)"),
    ("psl213", "PSL(2,13)"),
    ("psl217", "PSL(2,17)"),
    ("a7", "Alt(7)"),
    ("psl219", "PSL(2,19)"),
    ("psl216", "PSL(2,16)"),
    ("psl33", "PSL(3,3)"),
    ("psu33", "PSU(3,3)"),
    ("psl223", "PSL(2,23)"),
    ("psl225", "PSL(2,25)"),
    ("m11", "Spor(M11)"),
    ("psl227", "PSL(2,27)"),
];

#[test]
fn simple_orders_match_formulas() {
    let expected = groups::enumerate_nonabelian_up_to(&Natural::from(10_000u32));
    assert_eq!(expected.len(), SIMPLE_FILES.len());
    for (file, name) in SIMPLE_FILES {
        let g = load(file);
        let s = id(name);
        assert!(expected.contains(&s), "{name}");
        assert_eq!(Natural::from(g.order()), groups::order(&s), "{file}");
        assert_eq!(composition_factors(&g).unwrap(), [s], "{file}");
    }
}

#[test]
fn generation_examples() {
    assert_eq!(load("a5").order(), 60);
    assert_eq!(load("s3").order(), 6);
    assert_eq!(load("psl27").order(), 168);
    assert_eq!(load("m11").order(), 7920);
}

#[test]
fn pi_subgroup_census() {
    let a5 = load("a5");
    let subs = pi_subgroups(&a5, &pi(&[2, 3])).unwrap();
    let mut by_order: BTreeMap<usize, usize> = BTreeMap::new();
    for s in &subs {
        *by_order.entry(s.order).or_default() += 1;
    }
    // 1, 15 C2, 10 C3, 5 V4, 10 Sym3, 5 Alt4
    assert_eq!(by_order, BTreeMap::from([(1, 1), (2, 15), (3, 10), (4, 5), (6, 10), (12, 5)]));
    assert_eq!(subs.len(), 46);
    assert_eq!(pi_subgroups(&load("s3"), &pi(&[3])).unwrap().len(), 2);
    assert_eq!(pi_subgroups(&a5, &pi(&[7])).unwrap().len(), 1);
}

/// All subgroups by brute force over generating pairs; every subgroup of
/// these small groups is 2-generated.
fn all_subgroups_bruteforce(g: &PermGroup) -> Vec<Subgroup> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for a in 0..g.order() as u32 {
        for b in a..g.order() as u32 {
            let s = g.closure([a, b]);
            if seen.insert(s.elements().to_vec()) {
                out.push(s);
            }
        }
    }
    out
}

#[test]
fn lattice_agrees_with_bruteforce() {
    for file in ["s4", "a5", "psl27", "s5"] {
        let g = load(file);
        let all = all_subgroups_bruteforce(&g);
        for set in subsets(&spectrum(g.order())) {
            let p = PrimeSet::of(&set);
            let is_pi = |h: &Subgroup| spectrum(h.order()).iter().all(|q| p.contains_u64(*q));
            let mut expected: Vec<Vec<u32>> = all.iter().filter(|h| is_pi(h)).map(|h| h.elements().to_vec()).collect();
            let mut got: Vec<Vec<u32>> = pi_subgroups(&g, &p).unwrap().into_iter().map(|r| r.elements).collect();
            expected.sort();
            got.sort();
            assert_eq!(got, expected, "{file} {p}");

            let pis: Vec<&Subgroup> = all.iter().filter(|h| is_pi(h)).collect();
            let maximal: Vec<&&Subgroup> =
                pis.iter().filter(|h| !pis.iter().any(|k| k.order() > h.order() && h.is_subgroup_of(k))).collect();
            let classes = pi_maximal_classes(&g, &p).unwrap();
            assert_eq!(classes.iter().map(|c| c.size).sum::<usize>(), maximal.len(), "{file} {p}");
        }
    }
}

#[test]
fn records_are_closed_conjugation_invariant_and_lagrange() {
    let g = load("s4");
    for set in subsets(&[2, 3]) {
        let recs = pi_subgroups(&g, &PrimeSet::of(&set)).unwrap();
        let keys: std::collections::HashSet<&Vec<u32>> = recs.iter().map(|r| &r.elements).collect();
        for r in &recs {
            assert_eq!(g.order() % r.order, 0);
            assert!(r.is_pi_group);
            for &a in &r.elements {
                for &b in &r.elements {
                    assert!(r.elements.binary_search(&g.mul(a, g.inv(b))).is_ok());
                }
            }
            for x in 0..g.order() as u32 {
                let mut c: Vec<u32> = r.elements.iter().map(|&e| g.conj(x, e)).collect();
                c.sort();
                assert!(keys.contains(&c));
            }
        }
    }
}

#[test]
fn maximal_class_examples() {
    let a5 = load("a5");
    let orders = |g: &PermGroup, p: &[u64]| {
        let mut v: Vec<(usize, usize)> =
            pi_maximal_classes(g, &pi(p)).unwrap().iter().map(|c| (c.order(), c.size)).collect();
        v.sort();
        v
    };
    assert_eq!(orders(&a5, &[2, 3]), [(6, 10), (12, 5)]);
    assert_eq!(orders(&a5, &[2, 5]), [(4, 5), (10, 6)]);
    assert_eq!(orders(&load("psl27"), &[3, 7]), [(21, 8)]);
    assert_eq!(orders(&load("psl27"), &[2, 3]), [(24, 7), (24, 7)]);
}

#[test]
fn maximal_classes_are_pairwise_nonconjugate_and_unextendable() {
    for file in ["a5", "s5", "psl27", "a6"] {
        let g = load(file);
        for set in subsets(&spectrum(g.order())) {
            let p = PrimeSet::of(&set);
            let classes = pi_maximal_classes(&g, &p).unwrap();
            for (i, a) in classes.iter().enumerate() {
                for b in &classes[i + 1..] {
                    assert!(g.conjugator(&a.representative, &b.representative).is_none());
                }
                for x in 0..g.order() as u32 {
                    if a.representative.contains(x) {
                        continue;
                    }
                    let k = g.extend(&a.representative, x);
                    assert!(spectrum(k.order()).iter().any(|q| !p.contains_u64(*q)), "{file} {p}");
                }
            }
        }
    }
}

#[test]
fn dpi_and_hall_examples() {
    let a5 = load("a5");
    assert!(is_dpi(&a5, &pi(&[2])).unwrap());
    assert!(!is_dpi(&a5, &pi(&[2, 3])).unwrap());
    assert!(is_dpi(&load("psl27"), &pi(&[3, 7])).unwrap());
    assert!(!hall_exists(&a5, &pi(&[2, 5])).unwrap());
    assert!(hall_exists(&load("s4"), &pi(&[2, 3])).unwrap());
    assert!(hall_exists(&a5, &pi(&[2, 3])).unwrap());
    assert!(is_dpi(&a5, &PrimeSet::cofinite([Natural::from(7u32)]).unwrap()).unwrap());
}

#[test]
fn sylow_and_hall_link_across_corpus() {
    for file in ["s4", "a5", "s5", "a6", "s6", "psl27", "pgl27", "psl28", "psl211", "psl213", "sl25", "c2xa5", "a7"] {
        let g = load(file);
        for p in spectrum(g.order()) {
            assert!(is_dpi(&g, &pi(&[p])).unwrap(), "{file} {p}");
        }
        for set in subsets(&spectrum(g.order())) {
            let p = PrimeSet::of(&set);
            let lattice = PiLattice::compute(&g, &p).unwrap();
            let classes: Vec<_> = lattice.maximal().collect();
            if classes.len() == 1 {
                assert_eq!(classes[0].order(), lattice.pi_part, "{file} {p}");
            }
        }
    }
}

#[test]
fn composition_factor_examples() {
    let names =
        |f: &str| -> Vec<String> { composition_factors(&load(f)).unwrap().iter().map(|s| s.to_string()).collect() };
    assert_eq!(names("s5"), ["Cyc(2)", "Alt(5)"]);
    assert_eq!(names("a5"), ["Alt(5)"]);
    assert_eq!(names("s4"), ["Cyc(2)", "Cyc(3)", "Cyc(2)", "Cyc(2)"]);
    assert_eq!(names("sl25"), ["Alt(5)", "Cyc(2)"]);
    assert_eq!(names("pgl27"), ["Cyc(2)", "Lie(A,1,7)"]);
    assert_eq!(names("s6"), ["Cyc(2)", "Alt(6)"]);
}

#[test]
fn composition_factors_do_not_depend_on_the_series() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for file in ["s4", "c2xa5", "sl25", "s5", "a4"] {
        let g = load(file);
        let mut base: Vec<String> = composition_factors(&g).unwrap().iter().map(|s| s.to_string()).collect();
        base.sort();
        for _ in 0..10 {
            let mut f: Vec<String> =
                composition_factors_random(&g, &mut rng).unwrap().iter().map(|s| s.to_string()).collect();
            f.sort();
            assert_eq!(f, base, "{file}");
        }
    }
}

#[test]
fn quotients_and_subgroups() {
    let s5 = load("s5");
    let a5 = s5.derived_subgroup();
    assert_eq!(s5.subgroup_as_group(&a5).unwrap().order(), 60);
    assert_eq!(s5.quotient(&a5).unwrap().order(), 2);
    let sl = load("sl25");
    let z = sl.center();
    assert_eq!(z.order(), 2);
    let q = sl.quotient(&z).unwrap();
    assert_eq!((q.order(), q.degree()), (60, 60));
    assert_eq!(composition_factors(&q).unwrap(), [SimpleGroupId::Alternating(5)]);
    assert!(s5.quotient(&s5.closure([1])).is_err() || s5.is_normal(&s5.closure([1])));
    assert!(matches!(load("psl27").quotient(&load("psl27").trivial()), Err(OracleError::CapExceeded { .. })));
}

#[test]
fn oversized_groups_are_refused() {
    let gens = parse_generators("(1 2 3 4 5 6 7 8)\n(1 2)").unwrap();
    assert!(matches!(PermGroup::generate(&gens), Err(OracleError::CapExceeded { .. })));
}
