use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{colon_set, exponents, span, sum_sets, Ideal, NEVER};
use crate::ring::Ring;

/// A failed predicate's witness: element codes, lexicographically least.
pub type Witness = Vec<u32>;

/// Everything the element-level predicates need about one proper ideal `Q`:
/// `√Q`, the exponent table `e(x) = min{k : x^k ∈ Q}`, and the colon
/// tables `(Q : x)` and `(√Q : x)` for every `x`.
///
/// Each predicate returns `None` when it holds and its least witness
/// otherwise. Results are computed once and cached.
pub struct Analysis {
    q: Ideal,
    rad: Ideal,
    e: Vec<u32>,
    colon_q: OnceLock<Vec<ElemSet>>,
    colon_rad: OnceLock<Vec<ElemSet>>,
    prime: OnceLock<Option<Witness>>,
    primary: OnceLock<Option<Witness>>,
    ord: OnceLock<Option<u32>>,
    two_abs: OnceLock<Option<Witness>>,
    triples: OnceLock<Triples>,
    maximal: OnceLock<Option<Witness>>,
    irreducible: OnceLock<Option<Witness>>,
    divided: OnceLock<Option<Witness>>,
    radical_exponent: OnceLock<u32>,
}

struct Triples {
    two_ap: Option<Witness>,
    two_ord: Option<u32>,
    special: Option<Witness>,
}

impl Analysis {
    pub fn new(q: &Ideal) -> Result<Analysis> {
        if !q.is_proper() {
            return Err(Error::ImproperIdeal);
        }
        let e = exponents(q.ring(), q.elements());
        let rad_set = ElemSet::from_codes(
            q.ring().size() as usize,
            q.ring().codes().filter(|&x| e[x as usize] != NEVER),
        );
        Ok(Analysis {
            rad: Ideal::from_set(q.ring(), rad_set),
            q: q.clone(),
            e,
            colon_q: OnceLock::new(),
            colon_rad: OnceLock::new(),
            prime: OnceLock::new(),
            primary: OnceLock::new(),
            ord: OnceLock::new(),
            two_abs: OnceLock::new(),
            triples: OnceLock::new(),
            maximal: OnceLock::new(),
            irreducible: OnceLock::new(),
            divided: OnceLock::new(),
            radical_exponent: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.q.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.q
    }

    pub fn radical(&self) -> &Ideal {
        &self.rad
    }

    /// `min{k >= 1 : x^k ∈ Q}`, or `None` when `x ∉ √Q`.
    pub fn exponent(&self, x: u32) -> Option<u32> {
        let k = self.e[x as usize];
        (k != NEVER).then_some(k)
    }

    /// Largest finite exponent over the ring.
    pub fn max_exponent(&self) -> u32 {
        self.e.iter().copied().filter(|&k| k != NEVER).max().unwrap_or(1)
    }

    fn q(&self) -> &ElemSet {
        self.q.elements()
    }

    fn r(&self) -> &ElemSet {
        self.rad.elements()
    }

    /// `(Q : x)` for every element.
    pub fn colon_q(&self) -> &[ElemSet] {
        self.colon_q.get_or_init(|| colon_table(self.ring(), self.q()))
    }

    /// `(√Q : x)` for every element.
    pub fn colon_rad(&self) -> &[ElemSet] {
        self.colon_rad.get_or_init(|| colon_table(self.ring(), self.r()))
    }

    /// Associate-class representatives; every predicate here is invariant
    /// under multiplying an argument by a unit, and representatives are
    /// class minima, so scanning them preserves least witnesses.
    fn reps(&self) -> impl Iterator<Item = u32> + '_ {
        self.ring().associate_reps().iter().copied()
    }

    fn outside_q(&self) -> impl Iterator<Item = u32> + '_ {
        self.reps().filter(|&x| !self.q.contains(x))
    }

    /// `rs ∈ Q, r ∉ Q, s ∉ Q`.
    pub fn prime_witness(&self) -> Option<&Witness> {
        self.prime
            .get_or_init(|| {
                let cq = self.colon_q();
                self.outside_q().find_map(|r| {
                    cq[r as usize].first_outside(self.q(), self.q()).map(|s| vec![r, s])
                })
            })
            .as_ref()
    }

    /// `rs ∈ Q, r ∉ Q, s ∉ √Q`.
    pub fn primary_witness(&self) -> Option<&Witness> {
        self.primary
            .get_or_init(|| {
                let cq = self.colon_q();
                self.outside_q().find_map(|r| {
                    cq[r as usize].first_outside(self.r(), self.r()).map(|s| vec![r, s])
                })
            })
            .as_ref()
    }

    /// Least `n` with `rs ∈ Q, r ∉ Q ⇒ s^n ∈ Q`; `None` when not primary.
    pub fn ord(&self) -> Option<u32> {
        *self.ord.get_or_init(|| {
            if self.primary_witness().is_some() {
                return None;
            }
            let n = self.ring().size() as usize;
            let mut reach = ElemSet::empty(n);
            for r in self.outside_q() {
                reach.union_with(&self.colon_q()[r as usize]);
            }
            Some(reach.iter().map(|s| self.e[s as usize]).max().unwrap_or(1))
        })
    }

    /// `abc ∈ Q` with none of `ab, ac, bc` in `Q`.
    pub fn two_absorbing_witness(&self) -> Option<&Witness> {
        self.two_abs
            .get_or_init(|| {
                let ring = self.ring();
                let cq = self.colon_q();
                for a in self.reps() {
                    for b in self.reps() {
                        let ab = ring.mul(a, b);
                        if self.q.contains(ab) {
                            continue;
                        }
                        if let Some(c) =
                            cq[ab as usize].first_outside(&cq[a as usize], &cq[b as usize])
                        {
                            return Some(vec![a, b, c]);
                        }
                    }
                }
                None
            })
            .as_ref()
    }

    fn triples(&self) -> &Triples {
        self.triples.get_or_init(|| {
            let ring = self.ring();
            let (cq, cr) = (self.colon_q(), self.colon_rad());
            let mut two_ap = None;
            let mut special = None;
            let mut two_ord = 1;
            for a in self.reps() {
                for b in self.reps() {
                    let ab = ring.mul(a, b);
                    if self.q.contains(ab) {
                        continue;
                    }
                    // c ranges over (Q : ab) \ (√Q : a)
                    let cs = &cq[ab as usize];
                    let (ra, rb) = (&cr[a as usize], &cr[b as usize]);
                    if two_ap.is_none() {
                        if let Some(c) = cs.first_outside(ra, rb) {
                            two_ap = Some(vec![a, b, c]);
                        }
                    }
                    if special.is_none() {
                        if let Some(c) = cs.first_outside(ra, &cq[b as usize]) {
                            special = Some(vec![a, b, c]);
                        }
                    }
                    if two_ap.is_none() {
                        for c in cs.difference(ra).iter().filter(|&c| ring.associate_rep(c) == c) {
                            two_ord = two_ord.max(self.e[ring.mul(b, c) as usize]);
                        }
                    }
                }
            }
            Triples {
                two_ord: two_ap.is_none().then_some(two_ord),
                two_ap,
                special,
            }
        })
    }

    /// `abc ∈ Q` with `ab ∉ Q`, `ac ∉ √Q`, `bc ∉ √Q`.
    pub fn two_ap_witness(&self) -> Option<&Witness> {
        self.triples().two_ap.as_ref()
    }

    /// Least `n` such that `abc ∈ Q, ab ∉ Q, ac ∉ √Q ⇒ (bc)^n ∈ Q` over all
    /// ordered triples; `None` when no such `n` exists.
    pub fn two_ord(&self) -> Option<u32> {
        self.triples().two_ord
    }

    /// `abc ∈ Q` with `ab ∉ Q`, `ac ∉ √Q`, `bc ∉ Q`.
    pub fn special_witness(&self) -> Option<&Witness> {
        self.triples().special.as_ref()
    }

    /// Least `n` with `(√Q)^n ⊆ Q`.
    pub fn radical_exponent(&self) -> u32 {
        *self.radical_exponent.get_or_init(|| {
            let mut k = 1;
            let mut cur = self.rad.clone();
            while !cur.is_subset(&self.q) {
                cur = cur.product(&self.rad).expect("same ring");
                k += 1;
            }
            k
        })
    }

    /// 2-𝔢(Q), defined only for 2-absorbing primary ideals.
    pub fn two_exp(&self) -> Option<u32> {
        self.two_ap_witness()
            .is_none()
            .then(|| self.radical_exponent())
    }

    /// Some `x ∉ Q` with `Q + Rx ≠ R`.
    pub fn maximal_witness(&self) -> Option<&Witness> {
        self.maximal
            .get_or_init(|| {
                let ring = self.ring();
                let one = ring.one();
                self.outside_q()
                    .find(|&x| {
                        !ring
                            .codes()
                            .any(|r| self.q.contains(ring.sub(one, ring.mul(r, x))))
                    })
                    .map(|x| vec![x])
            })
            .as_ref()
    }

    /// `x, y ∉ Q` with `(Q + Rx) ∩ (Q + Ry) = Q`.
    pub fn irreducible_witness(&self) -> Option<&Witness> {
        self.irreducible
            .get_or_init(|| {
                let ring = self.ring();
                let mut reps: Vec<(u32, ElemSet)> = Vec::new();
                let mut seen: HashMap<ElemSet, ()> = HashMap::new();
                for x in self.outside_q() {
                    let s = sum_sets(ring, self.q(), &span(ring, [x]));
                    if seen.insert(s.clone(), ()).is_none() {
                        reps.push((x, s));
                    }
                }
                let mut best: Option<(u32, u32)> = None;
                for (i, (x, sx)) in reps.iter().enumerate() {
                    for (y, sy) in &reps[i + 1..] {
                        if sx.intersection(sy) == *self.q() {
                            let pair = (*x.min(y), *x.max(y));
                            best = Some(best.map_or(pair, |b| b.min(pair)));
                        }
                    }
                }
                best.map(|(x, y)| vec![x, y])
            })
            .as_ref()
    }

    /// `√Q` is a prime `P` with `P ⊂ Rx` for every `x ∉ P`. A non-prime
    /// radical is witnessed by a pair `rs ∈ √Q`, `r, s ∉ √Q`.
    pub fn divided_witness(&self) -> Option<&Witness> {
        self.divided
            .get_or_init(|| {
                let ring = self.ring();
                let cr = self.colon_rad();
                let outside = || self.reps().filter(|&x| !self.rad.contains(x));
                if let Some(w) = outside().find_map(|r| {
                    cr[r as usize].first_outside(self.r(), self.r()).map(|s| vec![r, s])
                }) {
                    return Some(w);
                }
                outside()
                    .find(|&x| !self.r().is_subset(&span(ring, [x])))
                    .map(|x| vec![x])
            })
            .as_ref()
    }
}

/// `(set : x)` is the same for associates, so only representatives are
/// computed.
fn colon_table(ring: &Ring, set: &ElemSet) -> Vec<ElemSet> {
    let mut by_rep: HashMap<u32, ElemSet> = HashMap::new();
    for &r in ring.associate_reps() {
        by_rep.insert(r, colon_set(ring, set, r));
    }
    ring.codes()
        .map(|x| by_rep[&ring.associate_rep(x)].clone())
        .collect()
}
