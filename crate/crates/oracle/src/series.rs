//! Composition factors through a descending chain of maximal normal subgroups.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use hall_verdict::arith::is_prime_u64;
use hall_verdict::groups::{self, SimpleGroupId};
use hall_verdict::Natural;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{OracleError, Result};
use crate::group::{PermGroup, Subgroup, DEFAULT_ORDER_CAP};

/// Order of the two nonisomorphic simple groups `Alt(8)` and `PSL(3,4)`.
const COLLIDING_ORDER: u64 = 20_160;

fn simple_by_order() -> &'static HashMap<u64, SimpleGroupId> {
    static TABLE: OnceLock<HashMap<u64, SimpleGroupId>> = OnceLock::new();
    TABLE.get_or_init(|| {
        groups::enumerate_nonabelian_up_to(&Natural::from(DEFAULT_ORDER_CAP as u64))
            .into_iter()
            .filter(|s| groups::order(s).to_u64() != Some(COLLIDING_ORDER))
            .map(|s| (groups::order(&s).to_u64().unwrap(), s))
            .collect()
    })
}

/// All normal subgroups of `h`, as joins of normal closures of its classes.
fn normal_subgroups(g: &PermGroup, h: &Subgroup) -> Vec<Subgroup> {
    let mut found: Vec<Subgroup> = vec![g.trivial()];
    let mut keys: HashSet<Vec<u64>> = HashSet::from([g.trivial().bits]);
    for class in g.element_classes(h) {
        let mut n = g.trivial();
        for &c in &class {
            if !n.contains(c) {
                n = g.extend(&n, c);
            }
        }
        if keys.insert(n.bits.clone()) {
            found.push(n);
        }
    }
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            if found[i].is_subgroup_of(&found[j]) || found[j].is_subgroup_of(&found[i]) {
                continue;
            }
            let mut join = found[i].clone();
            for &x in found[j].generators() {
                if !join.contains(x) {
                    join = g.extend(&join, x);
                }
            }
            if keys.insert(join.bits.clone()) {
                found.push(join);
            }
        }
        i += 1;
    }
    found
}

fn maximal_normal(g: &PermGroup, h: &Subgroup, rng: Option<&mut (dyn rand::RngCore + '_)>) -> Subgroup {
    let proper: Vec<Subgroup> = normal_subgroups(g, h).into_iter().filter(|n| n.order() < h.order()).collect();
    let maximal: Vec<&Subgroup> =
        proper.iter().filter(|n| !proper.iter().any(|m| m.order() > n.order() && n.is_subgroup_of(m))).collect();
    let pick = match rng {
        Some(r) => maximal.choose(r),
        None => maximal.first(),
    };
    (*pick.expect("the trivial subgroup is normal")).clone()
}

/// The simple group `h/m` for a maximal normal subgroup `m`.
fn identify(g: &PermGroup, h: &Subgroup, m: &Subgroup) -> Result<SimpleGroupId> {
    let index = (h.order() / m.order()) as u64;
    if is_prime_u64(index) {
        return Ok(SimpleGroupId::Cyclic(Natural::from(index)));
    }
    if index == COLLIDING_ORDER {
        // element orders of the quotient: Alt(8) has 15, PSL(3,4) tops out at 7
        let coset_order = |x: u32| {
            let mut y = x;
            let mut k = 1;
            while !m.contains(y) {
                y = g.mul(y, x);
                k += 1;
            }
            k
        };
        let top = h.elements().iter().map(|&x| coset_order(x)).max().unwrap_or(1);
        let id = if top == 15 { "Alt(8)" } else { "PSL(3,4)" };
        return Ok(groups::validate(&id.parse()?)?);
    }
    simple_by_order().get(&index).cloned().ok_or(OracleError::UnrecognizedSimpleGroup(index))
}

fn factors(g: &PermGroup, mut rng: Option<&mut dyn rand::RngCore>) -> Result<Vec<SimpleGroupId>> {
    let mut out = Vec::new();
    let mut current = g.whole();
    while current.order() > 1 {
        let m = match rng.as_mut() {
            Some(r) => maximal_normal(g, &current, Some(&mut **r)),
            None => maximal_normal(g, &current, None),
        };
        out.push(identify(g, &current, &m)?);
        current = m;
    }
    Ok(out)
}

/// Composition factors from the top of the group down.
pub fn composition_factors(g: &PermGroup) -> Result<Vec<SimpleGroupId>> {
    factors(g, None)
}

/// Same multiset, with each maximal normal subgroup chosen at random.
pub fn composition_factors_random<R: Rng>(g: &PermGroup, rng: &mut R) -> Result<Vec<SimpleGroupId>> {
    factors(g, Some(rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_generators;

    fn group(text: &str) -> PermGroup {
        PermGroup::generate(&parse_generators(text).unwrap()).unwrap()
    }

    fn names(v: Vec<SimpleGroupId>) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn small_series() {
        assert_eq!(names(composition_factors(&group("(1 2 3 4 5)\n(1 2)")).unwrap()), ["Cyc(2)", "Alt(5)"]);
        assert_eq!(names(composition_factors(&group("(1 2 3 4 5)\n(3 4 5)")).unwrap()), ["Alt(5)"]);
        assert_eq!(
            names(composition_factors(&group("(1 2 3 4)\n(1 2)")).unwrap()),
            ["Cyc(2)", "Cyc(3)", "Cyc(2)", "Cyc(2)"]
        );
        assert!(composition_factors(&group("()")).unwrap().is_empty());
    }

    #[test]
    fn normal_lattice_of_sym4() {
        let g = group("(1 2 3 4)\n(1 2)");
        let mut orders: Vec<usize> = normal_subgroups(&g, &g.whole()).iter().map(Subgroup::order).collect();
        orders.sort();
        assert_eq!(orders, [1, 4, 12, 24]);
    }
}
