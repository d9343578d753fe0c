//! Permutation groups by full element enumeration.

use std::collections::HashMap;

use crate::error::{OracleError, Result};
use crate::perm::{Permutation, MAX_DEGREE};

pub const DEFAULT_ORDER_CAP: usize = 20_000;
/// Groups up to this order get a full multiplication table (`u16` entries).
const TABLE_LIMIT: usize = 6_100;

/// Element indices of a subgroup: a membership bitset, the sorted element
/// list and a small generating set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    pub(crate) bits: Vec<u64>,
    pub(crate) elems: Vec<u32>,
    pub(crate) gens: Vec<u32>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn contains(&self, e: u32) -> bool {
        self.bits[e as usize / 64] >> (e % 64) & 1 == 1
    }

    /// Sorted element indices.
    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    fn insert(&mut self, e: u32) {
        self.bits[e as usize / 64] |= 1 << (e % 64);
        self.elems.push(e);
    }

    fn finish(mut self) -> Self {
        self.elems.sort_unstable();
        self
    }
}

pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    gen_idx: Vec<u32>,
    identity: u32,
    table: Option<Vec<u16>>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>())
            .finish()
    }
}

impl PermGroup {
    pub fn generate(gens: &[Permutation]) -> Result<Self> {
        Self::generate_capped(gens, DEFAULT_ORDER_CAP)
    }

    /// Breadth-first closure; elements are then sorted so that indices do
    /// not depend on generator order.
    pub fn generate_capped(gens: &[Permutation], cap: usize) -> Result<Self> {
        let degree = gens.iter().map(Permutation::degree).max().unwrap_or(0);
        if degree > MAX_DEGREE {
            return Err(OracleError::CapExceeded { what: "degree", limit: MAX_DEGREE });
        }
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(OracleError::DegreeMismatch(g.degree(), degree));
        }
        let id = Permutation::identity(degree);
        let mut bfs = vec![id.clone()];
        // (generator, parent) for every element after the identity
        let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
        let mut seen: HashMap<Permutation, usize> = HashMap::from([(id, 0)]);
        let mut i = 0;
        while i < bfs.len() {
            for (k, s) in gens.iter().enumerate() {
                let y = s.compose(&bfs[i]);
                if !seen.contains_key(&y) {
                    if bfs.len() >= cap {
                        return Err(OracleError::CapExceeded { what: "group order", limit: cap });
                    }
                    seen.insert(y.clone(), bfs.len());
                    bfs.push(y);
                    parent.push((k, i));
                }
            }
            i += 1;
        }
        let n = bfs.len();
        let mut sorted: Vec<usize> = (0..n).collect();
        sorted.sort_by(|&a, &b| bfs[a].cmp(&bfs[b]));
        let mut pos = vec![0u32; n];
        for (new, &old) in sorted.iter().enumerate() {
            pos[old] = new as u32;
        }
        let elements: Vec<Permutation> = sorted.iter().map(|&old| bfs[old].clone()).collect();
        let index: HashMap<Permutation, u32> =
            elements.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elements.iter().map(|p| p.order() as u32).collect();
        let gen_idx = gens.iter().map(|g| index[g]).collect();
        let identity = index[&Permutation::identity(degree)];

        let table = (n <= TABLE_LIMIT).then(|| {
            // left multiplication by each generator, in sorted indices
            let left: Vec<Vec<u16>> =
                gens.iter().map(|s| elements.iter().map(|x| index[&s.compose(x)] as u16).collect()).collect();
            let mut t = vec![0u16; n * n];
            for old in 0..n {
                let row = pos[old] as usize;
                if old == 0 {
                    for b in 0..n {
                        t[row * n + b] = b as u16;
                    }
                    continue;
                }
                // x = s ∘ x', so x ∘ b = s ∘ (x' ∘ b)
                let (k, par) = parent[old];
                let prow = pos[par] as usize;
                for b in 0..n {
                    t[row * n + b] = left[k][t[prow * n + b] as usize];
                }
            }
            t
        });

        Ok(PermGroup { degree, generators: gens.to_vec(), elements, index, gen_idx, identity, table, inverse, orders })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[u32] {
        &self.gen_idx
    }

    pub fn element(&self, i: u32) -> &Permutation {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    /// `a ∘ b`.
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t[a as usize * self.order() + b as usize] as u32,
            None => self.index[&self.elements[a as usize].compose(&self.elements[b as usize])],
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub fn element_order(&self, a: u32) -> u32 {
        self.orders[a as usize]
    }

    /// `x a x⁻¹`.
    #[inline]
    pub fn conj(&self, x: u32, a: u32) -> u32 {
        self.mul(self.mul(x, a), self.inv(x))
    }

    fn empty_subgroup(&self) -> Subgroup {
        Subgroup { bits: vec![0; self.order().div_ceil(64)], elems: vec![], gens: vec![] }
    }

    pub fn trivial(&self) -> Subgroup {
        let mut s = self.empty_subgroup();
        s.insert(self.identity);
        s
    }

    pub fn whole(&self) -> Subgroup {
        let mut s = self.empty_subgroup();
        for e in 0..self.order() as u32 {
            s.insert(e);
        }
        s.gens = self.gen_idx.clone();
        s
    }

    /// `⟨base, g⟩`, or `None` as soon as an element rejected by `accept`
    /// appears or the order would pass `limit`.
    pub fn extend_checked(
        &self,
        base: &Subgroup,
        g: u32,
        accept: impl Fn(u32) -> bool,
        limit: usize,
    ) -> Option<Subgroup> {
        if base.contains(g) {
            return Some(base.clone());
        }
        let mut s = base.clone();
        s.gens.push(g);
        let mut i = 0;
        while i < s.elems.len() {
            let e = s.elems[i];
            for k in 0..s.gens.len() {
                let p = self.mul(e, s.gens[k]);
                if !s.contains(p) {
                    if !accept(p) || s.elems.len() >= limit {
                        return None;
                    }
                    s.insert(p);
                }
            }
            i += 1;
        }
        Some(s.finish())
    }

    pub fn extend(&self, base: &Subgroup, g: u32) -> Subgroup {
        self.extend_checked(base, g, |_| true, usize::MAX).expect("unbounded closure")
    }

    /// Subgroup generated by element indices.
    pub fn closure(&self, gens: impl IntoIterator<Item = u32>) -> Subgroup {
        gens.into_iter().fold(self.trivial(), |s, g| self.extend(&s, g))
    }

    /// The subgroups `x H x⁻¹` for all `x`, without repeats.
    pub fn conjugates(&self, h: &Subgroup) -> Vec<Subgroup> {
        let norm = self.normalizer(h);
        let mut out: Vec<Subgroup> = Vec::new();
        let mut done = self.empty_subgroup();
        for x in 0..self.order() as u32 {
            if done.contains(x) {
                continue;
            }
            // the coset x N(H) gives a single conjugate
            for &n in &norm.elems {
                let xn = self.mul(x, n);
                if !done.contains(xn) {
                    done.insert(xn);
                }
            }
            out.push(self.conjugate(h, x));
        }
        out
    }

    pub fn conjugate(&self, h: &Subgroup, x: u32) -> Subgroup {
        let mut s = self.empty_subgroup();
        for &e in &h.elems {
            s.insert(self.conj(x, e));
        }
        s.gens = h.gens.iter().map(|&g| self.conj(x, g)).collect();
        s.finish()
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let elems = (0..self.order() as u32).filter(|&x| h.gens.iter().all(|&g| h.contains(self.conj(x, g))));
        self.from_elements(elems)
    }

    /// Some `x` with `x H x⁻¹ = K`, for subgroups of equal order.
    pub fn conjugator(&self, h: &Subgroup, k: &Subgroup) -> Option<u32> {
        if h.order() != k.order() {
            return None;
        }
        (0..self.order() as u32).find(|&x| h.gens.iter().all(|&g| k.contains(self.conj(x, g))))
    }

    /// Wrap a set already known to be a subgroup, choosing generators greedily.
    pub(crate) fn from_elements(&self, elems: impl IntoIterator<Item = u32>) -> Subgroup {
        let mut s = self.empty_subgroup();
        for e in elems {
            s.insert(e);
        }
        let mut span = self.trivial();
        let mut gens = Vec::new();
        for &e in &s.elems {
            if !span.contains(e) {
                span = self.extend(&span, e);
                gens.push(e);
            }
            if span.order() == s.order() {
                break;
            }
        }
        s.gens = gens;
        s.finish()
    }

    pub fn center(&self) -> Subgroup {
        let elems =
            (0..self.order() as u32).filter(|&x| self.gen_idx.iter().all(|&g| self.mul(x, g) == self.mul(g, x)));
        self.from_elements(elems)
    }

    /// Normal closure of the commutators of all pairs (element, generator).
    pub fn derived_subgroup(&self) -> Subgroup {
        let mut d = self.trivial();
        for x in 0..self.order() as u32 {
            for &g in &self.gen_idx {
                let c = self.mul(self.mul(x, g), self.mul(self.inv(x), self.inv(g)));
                if !d.contains(c) {
                    d = self.extend(&d, c);
                }
            }
        }
        d
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.gen_idx.iter().all(|&x| h.gens.iter().all(|&g| h.contains(self.conj(x, g))))
    }

    /// A subgroup as a group in its own right, on the same points.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> Result<PermGroup> {
        let gens: Vec<Permutation> = h.gens.iter().map(|&g| self.element(g).clone()).collect();
        let gens = if gens.is_empty() { vec![Permutation::identity(self.degree)] } else { gens };
        PermGroup::generate(&gens)
    }

    /// `G/N` acting on the left cosets of the normal subgroup `N`.
    pub fn quotient(&self, n: &Subgroup) -> Result<PermGroup> {
        if !self.is_normal(n) {
            return Err(OracleError::Parse("quotient by a subgroup that is not normal".into()));
        }
        let index = self.order() / n.order();
        if index > MAX_DEGREE {
            return Err(OracleError::CapExceeded { what: "quotient degree", limit: MAX_DEGREE });
        }
        let mut coset = vec![u32::MAX; self.order()];
        let mut reps = Vec::with_capacity(index);
        for g in 0..self.order() as u32 {
            if coset[g as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(g);
            for &m in &n.elems {
                coset[self.mul(g, m) as usize] = id;
            }
        }
        let gens: Vec<Permutation> = self
            .gen_idx
            .iter()
            .map(|&s| {
                let images = reps.iter().map(|&r| coset[self.mul(s, r) as usize] as u8).collect();
                Permutation::from_images(images)
            })
            .collect::<Result<_>>()?;
        PermGroup::generate(&gens)
    }

    /// Conjugacy classes of elements of `h` under conjugation by `h`.
    pub fn element_classes(&self, h: &Subgroup) -> Vec<Vec<u32>> {
        let mut seen = self.empty_subgroup();
        let mut classes = Vec::new();
        for &e in &h.elems {
            if seen.contains(e) {
                continue;
            }
            seen.insert(e);
            let mut class = vec![e];
            let mut i = 0;
            while i < class.len() {
                for &g in &h.gens {
                    let y = self.conj(g, class[i]);
                    if !seen.contains(y) {
                        seen.insert(y);
                        class.push(y);
                    }
                }
                i += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_generators;

    fn group(text: &str) -> PermGroup {
        PermGroup::generate(&parse_generators(text).unwrap()).unwrap()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(group("(1 2 3 4 5)\n(3 4 5)").order(), 60);
        assert_eq!(group("(1 2)\n(1 2 3)").order(), 6);
        assert_eq!(group("()").order(), 1);
    }

    #[test]
    fn table_matches_composition() {
        let g = group("(1 2 3 4 5)\n(1 2)");
        for a in 0..g.order() as u32 {
            for b in (0..g.order() as u32).step_by(7) {
                assert_eq!(g.element(g.mul(a, b)), &g.element(a).compose(g.element(b)));
            }
            assert_eq!(g.mul(a, g.inv(a)), g.identity());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let gens = parse_generators("(1 2 3 4 5 6 7 8)\n(1 2)").unwrap();
        assert!(matches!(PermGroup::generate(&gens), Err(OracleError::CapExceeded { .. })));
    }

    #[test]
    fn sym5_structure() {
        let g = group("(1 2 3 4 5)\n(1 2)");
        assert_eq!(g.derived_subgroup().order(), 60);
        assert_eq!(g.center().order(), 1);
        assert_eq!(g.element_classes(&g.whole()).len(), 7);
        let q = g.quotient(&g.derived_subgroup()).unwrap();
        assert_eq!((q.order(), q.degree()), (2, 2));
        let c3 = g.closure([g.index_of(&"(1 2 3)".parse::<Permutation>().unwrap().extended(5)).unwrap()]);
        assert_eq!(g.conjugates(&c3).len(), 10);
        assert_eq!(g.normalizer(&c3).order(), 12);
    }
}
