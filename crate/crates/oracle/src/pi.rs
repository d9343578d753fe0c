//! π-subgroups, their conjugacy classes, and the maximal ones.

use std::collections::HashMap;

use hall_verdict::arith::prime_divisors_u64;
use hall_verdict::PrimeSet;

use crate::error::{OracleError, Result};
use crate::group::{PermGroup, Subgroup};

pub const DEFAULT_SUBGROUP_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupRecord {
    /// Sorted element indices into the ambient group.
    pub elements: Vec<u32>,
    pub order: usize,
    pub is_pi_group: bool,
    pub class_id: usize,
}

/// One conjugacy class of π-subgroups.
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    pub id: usize,
    pub representative: Subgroup,
    /// Number of conjugates, `|G : N_G(H)|`.
    pub size: usize,
    /// No π-subgroup strictly contains a member.
    pub maximal: bool,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.order()
    }
}

/// Every conjugacy class of π-subgroups of `g`.
#[derive(Debug, Clone)]
pub struct PiLattice {
    pub classes: Vec<SubgroupClass>,
    pub pi_part: usize,
}

fn pi_number(n: u64, pi: &PrimeSet) -> bool {
    prime_divisors_u64(n).into_iter().all(|p| pi.contains_u64(p))
}

/// `|G|_π`.
pub fn pi_part(group_order: usize, pi: &PrimeSet) -> usize {
    let mut part = 1;
    let mut n = group_order;
    for p in prime_divisors_u64(group_order as u64) {
        while n % p as usize == 0 {
            n /= p as usize;
            if pi.contains_u64(p) {
                part *= p as usize;
            }
        }
    }
    part
}

type Fingerprint = (usize, Vec<u32>);

fn fingerprint(g: &PermGroup, h: &Subgroup) -> Fingerprint {
    let mut orders: Vec<u32> = h.elements().iter().map(|&e| g.element_order(e)).collect();
    orders.sort_unstable();
    (h.order(), orders)
}

/// Orbits on `G ∖ H` of the group generated by left multiplication by `H`
/// and conjugation by `N_G(H)`. Each entry is a representative and whether
/// the orbit holds only π-elements. `⟨H, x⟩` is constant on an orbit up to
/// conjugacy in `N_G(H)`.
fn extension_orbits(g: &PermGroup, h: &Subgroup, norm: &Subgroup, is_pi: &[bool]) -> Vec<(u32, bool)> {
    let n = g.order();
    let mut seen = vec![false; n];
    for &e in h.elements() {
        seen[e as usize] = true;
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n as u32 {
        if seen[start as usize] {
            continue;
        }
        seen[start as usize] = true;
        stack.push(start);
        let mut pure = true;
        while let Some(x) = stack.pop() {
            pure &= is_pi[x as usize];
            let left = h.generators().iter().map(|&s| g.mul(s, x));
            let conj = norm.generators().iter().map(|&m| g.conj(m, x));
            for y in left.chain(conj).collect::<Vec<_>>() {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    stack.push(y);
                }
            }
        }
        out.push((start, pure));
    }
    out
}

impl PiLattice {
    pub fn compute(g: &PermGroup, pi: &PrimeSet) -> Result<Self> {
        Self::compute_with_budget(g, pi, DEFAULT_SUBGROUP_BUDGET)
    }

    /// Saturation from the trivial subgroup: a class is extended by `⟨H, x⟩`
    /// for every orbit representative `x`, and the result is kept if it is a
    /// π-group. Every π-subgroup is reached this way one element at a time.
    pub fn compute_with_budget(g: &PermGroup, pi: &PrimeSet, budget: usize) -> Result<Self> {
        let limit = pi_part(g.order(), pi);
        let is_pi: Vec<bool> = (0..g.order() as u32).map(|e| pi_number(g.element_order(e) as u64, pi)).collect();
        let mut classes: Vec<SubgroupClass> = Vec::new();
        let mut by_print: HashMap<Fingerprint, Vec<usize>> = HashMap::new();
        let mut known: HashMap<Vec<u64>, usize> = HashMap::new();
        let mut work = 0usize;

        let trivial = g.trivial();
        known.insert(trivial.bits.clone(), 0);
        by_print.entry(fingerprint(g, &trivial)).or_default().push(0);
        classes.push(SubgroupClass { id: 0, size: 1, maximal: true, representative: trivial });

        let mut next = 0;
        while next < classes.len() {
            let h = classes[next].representative.clone();
            let norm = g.normalizer(&h);
            classes[next].size = g.order() / norm.order();
            for (x, pure) in extension_orbits(g, &h, &norm, &is_pi) {
                if !pure {
                    continue;
                }
                work += 1;
                if work > budget {
                    return Err(OracleError::CapExceeded { what: "π-subgroup search", limit: budget });
                }
                let Some(k) = g.extend_checked(&h, x, |e| is_pi[e as usize], limit) else { continue };
                classes[next].maximal = false;
                if known.contains_key(&k.bits) {
                    continue;
                }
                let print = fingerprint(g, &k);
                let same = by_print.entry(print).or_default();
                let hit = same.iter().copied().find(|&c| g.conjugator(&k, &classes[c].representative).is_some());
                let id = match hit {
                    Some(c) => c,
                    None => {
                        let id = classes.len();
                        same.push(id);
                        classes.push(SubgroupClass { id, size: 0, maximal: true, representative: k.clone() });
                        id
                    }
                };
                known.insert(k.bits, id);
            }
            next += 1;
        }
        Ok(PiLattice { classes, pi_part: limit })
    }

    pub fn maximal(&self) -> impl Iterator<Item = &SubgroupClass> {
        self.classes.iter().filter(|c| c.maximal)
    }
}

/// Every π-subgroup, each conjugacy class expanded.
pub fn pi_subgroups(g: &PermGroup, pi: &PrimeSet) -> Result<Vec<SubgroupRecord>> {
    let lattice = PiLattice::compute(g, pi)?;
    let total: usize = lattice.classes.iter().map(|c| c.size).sum();
    if total > DEFAULT_SUBGROUP_BUDGET {
        return Err(OracleError::CapExceeded { what: "π-subgroup count", limit: DEFAULT_SUBGROUP_BUDGET });
    }
    let mut out = Vec::with_capacity(total);
    for c in &lattice.classes {
        for h in g.conjugates(&c.representative) {
            out.push(SubgroupRecord {
                order: h.order(),
                elements: h.elements().to_vec(),
                is_pi_group: true,
                class_id: c.id,
            });
        }
    }
    Ok(out)
}

/// Conjugacy classes of inclusion-maximal π-subgroups.
pub fn pi_maximal_classes(g: &PermGroup, pi: &PrimeSet) -> Result<Vec<SubgroupClass>> {
    Ok(PiLattice::compute(g, pi)?.maximal().cloned().collect())
}

/// All maximal π-subgroups are conjugate.
pub fn is_dpi(g: &PermGroup, pi: &PrimeSet) -> Result<bool> {
    Ok(pi_maximal_classes(g, pi)?.len() == 1)
}

/// Some π-subgroup has order `|G|_π`.
pub fn hall_exists(g: &PermGroup, pi: &PrimeSet) -> Result<bool> {
    let lattice = PiLattice::compute(g, pi)?;
    let found = lattice.maximal().any(|c| c.order() == lattice.pi_part);
    Ok(found)
}
