//! Ideals of finite rings as materialized element sets.

mod lattice;
mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::ring::Ring;

pub use lattice::IdealLattice;
pub use parse::parse_ideal;

/// Marks "no power lands in the ideal" in exponent tables.
pub const NEVER: u32 = u32::MAX;

pub struct Ideal {
    ring: Arc<Ring>,
    elements: ElemSet,
    gens: OnceLock<Vec<u32>>,
}

impl Ideal {
    /// The ideal generated by `gens`.
    pub fn generate(ring: &Arc<Ring>, gens: &[u64]) -> Result<Ideal> {
        let mut codes = Vec::with_capacity(gens.len());
        for &g in gens {
            codes.push(ring.element(g)?.code());
        }
        Ok(Ideal::from_set(ring, span(ring, codes)))
    }

    pub fn principal(ring: &Arc<Ring>, x: u32) -> Ideal {
        Ideal::from_set(ring, span(ring, [x]))
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal::from_set(ring, ElemSet::from_codes(ring.size() as usize, [ring.zero()]))
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal::from_set(ring, ElemSet::full(ring.size() as usize))
    }

    /// Wraps a set already known to be an ideal.
    pub(crate) fn from_set(ring: &Arc<Ring>, elements: ElemSet) -> Ideal {
        debug_assert_eq!(elements.universe(), ring.size() as usize);
        Ideal {
            ring: Arc::clone(ring),
            elements,
            gens: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn elements(&self) -> &ElemSet {
        &self.elements
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.elements.contains(x)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_proper(&self) -> bool {
        !self.contains(self.ring.one())
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.elements.is_subset(&other.elements)
    }

    /// Greedy generating set: each code, in ascending order, that the
    /// previous generators do not already reach.
    pub fn generators(&self) -> &[u32] {
        self.gens.get_or_init(|| {
            if self.is_zero() {
                return vec![self.ring.zero()];
            }
            let mut gens = Vec::new();
            let mut reached = Group::new(&self.ring);
            for x in self.elements.iter() {
                if !reached.contains(x) {
                    gens.push(x);
                    for r in self.ring.codes() {
                        reached.add(self.ring.mul(r, x));
                    }
                }
            }
            gens
        })
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                expected: self.ring.to_string(),
                found: other.ring.to_string(),
            })
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        Ok(Ideal::from_set(&self.ring, sum_sets(&self.ring, &self.elements, &other.elements)))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let r = &self.ring;
        let mut seeds = Vec::new();
        for &x in self.generators() {
            for &y in other.generators() {
                seeds.push(r.mul(x, y));
            }
        }
        Ok(Ideal::from_set(r, span(r, seeds)))
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        Ok(Ideal::from_set(&self.ring, self.elements.intersection(&other.elements)))
    }

    /// `I^n` for `n >= 1`.
    pub fn power(&self, n: u32) -> Ideal {
        assert!(n >= 1, "ideal powers start at 1");
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// `I^[n]`: the ideal generated by n-th powers of elements of `I`.
    pub fn bracket_power(&self, n: u32) -> Ideal {
        assert!(n >= 1, "bracket powers start at 1");
        let r = &self.ring;
        Ideal::from_set(r, span(r, self.elements.iter().map(|x| r.pow(x, n as u64))))
    }

    /// `(I : J) = {r : rJ ⊆ I}`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut acc = ElemSet::full(self.ring.size() as usize);
        for &g in other.generators() {
            acc.intersect_with(&colon_set(&self.ring, &self.elements, g));
        }
        Ok(Ideal::from_set(&self.ring, acc))
    }

    /// `(I : x) = {r : rx ∈ I}`.
    pub fn colon_elem(&self, x: u32) -> Ideal {
        Ideal::from_set(&self.ring, colon_set(&self.ring, &self.elements, x))
    }

    /// Elements with some power in the ideal.
    pub fn radical(&self) -> Ideal {
        let e = exponents(&self.ring, &self.elements);
        let set = ElemSet::from_codes(
            self.ring.size() as usize,
            self.ring.codes().filter(|&x| e[x as usize] != NEVER),
        );
        Ideal::from_set(&self.ring, set)
    }

    /// `Z_I(R) = {r : rs ∈ I for some s ∉ I}`.
    pub fn z_set(&self) -> ElemSet {
        let r = &self.ring;
        ElemSet::from_codes(
            r.size() as usize,
            r.codes()
                .filter(|&x| !colon_set(r, &self.elements, x).is_subset(&self.elements)),
        )
    }

    /// Ordering used everywhere ideals are listed: size, then element codes.
    pub fn canonical_cmp(&self, other: &Ideal) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.elements.iter().cmp(other.elements.iter()))
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            ring: self.ring.to_string(),
            generators: self.generators().iter().map(|&g| g as u64).collect(),
            size: self.len() as u64,
            elements: self.elements.iter().map(|x| x as u64).collect(),
        }
    }
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gens = OnceLock::new();
        if let Some(g) = self.gens.get() {
            let _ = gens.set(g.clone());
        }
        Ideal {
            ring: Arc::clone(&self.ring),
            elements: self.elements.clone(),
            gens,
        }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && *self.ring == *other.ring
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Principal ideals print as `(g)`, others as `[g1,g2,...]`.
impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.generators();
        if gens.len() == 1 {
            return write!(f, "({})", gens[0]);
        }
        let gs: Vec<String> = gens.iter().map(u32::to_string).collect();
        write!(f, "[{}]", gs.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub ring: String,
    pub generators: Vec<u64>,
    pub size: u64,
    pub elements: Vec<u64>,
}

/// An additive subgroup grown one element at a time.
pub(crate) struct Group<'r> {
    ring: &'r Ring,
    set: ElemSet,
    members: Vec<u32>,
}

impl<'r> Group<'r> {
    pub(crate) fn new(ring: &'r Ring) -> Self {
        let mut set = ElemSet::empty(ring.size() as usize);
        set.insert(ring.zero());
        Group {
            ring,
            set,
            members: vec![ring.zero()],
        }
    }

    pub(crate) fn from_set(ring: &'r Ring, set: ElemSet) -> Self {
        let members = set.to_vec();
        Group { ring, set, members }
    }

    #[inline]
    pub(crate) fn contains(&self, x: u32) -> bool {
        self.set.contains(x)
    }

    /// Adjoins `m`: the new group is the union of the cosets `k*m + G`.
    pub(crate) fn add(&mut self, m: u32) {
        if self.set.contains(m) {
            return;
        }
        let base_len = self.members.len();
        let mut cur = m;
        while !self.set.contains(cur) {
            for i in 0..base_len {
                let x = self.ring.add(cur, self.members[i]);
                self.set.insert(x);
                self.members.push(x);
            }
            cur = self.ring.add(cur, m);
        }
    }

    pub(crate) fn into_set(self) -> ElemSet {
        self.set
    }
}

/// The ideal generated by `seeds`.
pub(crate) fn span(ring: &Ring, seeds: impl IntoIterator<Item = u32>) -> ElemSet {
    if let Some(n) = ring.modulus() {
        let d = seeds
            .into_iter()
            .fold(n as u64, |g, s| crate::ring::gcd(g, s as u64)) as u32;
        return ElemSet::from_codes(n as usize, (0..n).step_by(d as usize));
    }
    let mut g = Group::new(ring);
    for s in seeds {
        if g.contains(s) {
            continue;
        }
        for r in ring.codes() {
            g.add(ring.mul(r, s));
        }
    }
    g.into_set()
}

pub(crate) fn sum_sets(ring: &Ring, a: &ElemSet, b: &ElemSet) -> ElemSet {
    if a.is_subset(b) {
        return b.clone();
    }
    if b.is_subset(a) {
        return a.clone();
    }
    let (big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut g = Group::from_set(ring, big.clone());
    for x in small.iter() {
        g.add(x);
    }
    g.into_set()
}

pub(crate) fn colon_set(ring: &Ring, ideal: &ElemSet, x: u32) -> ElemSet {
    ElemSet::from_codes(
        ring.size() as usize,
        ring.codes().filter(|&r| ideal.contains(ring.mul(r, x))),
    )
}

/// For each element, the least `k >= 1` with `x^k` in the set, or [`NEVER`].
pub(crate) fn exponents(ring: &Ring, ideal: &ElemSet) -> Vec<u32> {
    let n = ring.size() as usize;
    let mut out = vec![NEVER; n];
    let mut seen = ElemSet::empty(n);
    let mut trail = Vec::new();
    for x in ring.codes() {
        let mut p = x;
        let mut k = 1;
        loop {
            if ideal.contains(p) {
                out[x as usize] = k;
                break;
            }
            if !seen.insert(p) {
                break;
            }
            trail.push(p);
            p = ring.mul(p, x);
            k += 1;
        }
        for t in trail.drain(..) {
            seen.remove(t);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> Arc<Ring> {
        Arc::new(Ring::build(&s.parse().unwrap()).unwrap())
    }

    fn codes(i: &Ideal) -> Vec<u32> {
        i.elements().to_vec()
    }

    #[test]
    fn generation() {
        let z12 = ring("zn:12");
        assert_eq!(codes(&Ideal::generate(&z12, &[4]).unwrap()), vec![0, 4, 8]);
        let p = ring("prod:(zn:2,zn:3)");
        let i = Ideal::generate(&p, &[p.join(&[1, 0]) as u64]).unwrap();
        assert_eq!(codes(&i), vec![0, 3]);
        let idz = ring("idz:(zn:2)^2");
        let x = idz.idealization_code(0, &[1, 0]) as u64;
        assert_eq!(codes(&Ideal::generate(&idz, &[x]).unwrap()), vec![0, 2]);
        assert!(Ideal::generate(&z12, &[12]).is_err());
    }

    #[test]
    fn arithmetic_in_z36() {
        let r = ring("zn:36");
        let p = |d| Ideal::principal(&r, d);
        assert_eq!(p(4).intersect(&p(6)).unwrap(), p(12));
        assert_eq!(p(2).product(&p(3)).unwrap(), p(6));
        assert_eq!(p(6).power(1), p(6));
        assert_eq!(p(6).bracket_power(2), p(0));
        assert_eq!(p(12).colon_elem(6), p(2));
        assert_eq!(p(6).colon_elem(4), p(3));
        assert_eq!(p(6).colon_elem(16), p(3));
        assert_eq!(p(12).radical(), p(6));
        assert_eq!(p(5).colon(&Ideal::unit(&r)).unwrap(), p(5));
    }

    #[test]
    fn bracket_power_in_z8() {
        let r = ring("zn:8");
        assert_eq!(Ideal::principal(&r, 2).bracket_power(2), Ideal::principal(&r, 4));
    }

    #[test]
    fn idealization_nilradical() {
        let r = ring("idz:(zn:2)^2");
        let rad = Ideal::zero(&r).radical();
        assert_eq!(codes(&rad), vec![0, 1, 2, 3]);
    }

    #[test]
    fn z_sets() {
        let z6 = ring("zn:6");
        assert_eq!(Ideal::zero(&z6).z_set().to_vec(), vec![0, 2, 3, 4]);
        let f5 = ring("zn:5");
        assert_eq!(Ideal::zero(&f5).z_set().to_vec(), vec![0]);
        let z4 = ring("zn:4");
        assert_eq!(Ideal::principal(&z4, 2).z_set().to_vec(), vec![0, 2]);
    }

    #[test]
    fn generators_are_greedy() {
        let p = ring("prod:(zn:4,zn:6)");
        let i = Ideal::generate(&p, &[p.join(&[2, 0]) as u64, p.join(&[0, 3]) as u64]).unwrap();
        let again = Ideal::generate(&p, &i.generators().iter().map(|&g| g as u64).collect::<Vec<_>>())
            .unwrap();
        assert_eq!(i, again);
        assert_eq!(Ideal::zero(&p).generators(), &[0]);
        assert_eq!(Ideal::principal(&ring("zn:12"), 8).generators(), &[4]);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Ideal::zero(&ring("zn:4"));
        let b = Ideal::zero(&ring("zn:6"));
        assert!(matches!(a.sum(&b), Err(Error::RingMismatch { .. })));
    }
}
