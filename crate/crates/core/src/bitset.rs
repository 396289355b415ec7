//! Fixed-universe bitsets over element codes.
//!
//! Every ideal, colon and radical in this crate is materialized as an
//! [`ElemSet`]; all hot predicates reduce to word-level subset and union
//! tests on these sets.

use std::fmt;

const BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet {
            universe,
            words: vec![0; universe.div_ceil(BITS)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = ElemSet {
            universe,
            words: vec![!0; universe.div_ceil(BITS)],
        };
        s.trim();
        s
    }

    pub fn from_codes(universe: usize, codes: impl IntoIterator<Item = u32>) -> Self {
        let mut s = Self::empty(universe);
        for c in codes {
            s.insert(c);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.universe % BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, code: u32) -> bool {
        let i = code as usize;
        debug_assert!(i < self.universe);
        (self.words[i / BITS] >> (i % BITS)) & 1 == 1
    }

    /// Returns true if the code was not already present.
    #[inline]
    pub fn insert(&mut self, code: u32) -> bool {
        let i = code as usize;
        debug_assert!(i < self.universe);
        let w = &mut self.words[i / BITS];
        let mask = 1u64 << (i % BITS);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, code: u32) {
        let i = code as usize;
        self.words[i / BITS] &= !(1u64 << (i % BITS));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    #[inline]
    pub fn is_subset(&self, other: &ElemSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// `self ⊆ a ∪ b`, without materializing the union.
    #[inline]
    pub fn is_subset_of_union(&self, a: &ElemSet, b: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(a.words.iter().zip(&b.words))
            .all(|(x, (p, q))| x & !(p | q) == 0)
    }

    pub fn is_disjoint(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> ElemSet {
        let mut s = ElemSet {
            universe: self.universe,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    /// Smallest code in `self \ (a ∪ b)`.
    pub fn first_outside(&self, a: &ElemSet, b: &ElemSet) -> Option<u32> {
        for (i, (x, (p, q))) in self
            .words
            .iter()
            .zip(a.words.iter().zip(&b.words))
            .enumerate()
        {
            let w = x & !(p | q);
            if w != 0 {
                return Some((i * BITS + w.trailing_zeros() as usize) as u32);
            }
        }
        None
    }

    pub fn first(&self) -> Option<u32> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some((self.index * BITS + tz) as u32);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_set_respects_universe() {
        let s = ElemSet::full(70);
        assert_eq!(s.len(), 70);
        assert_eq!(s.iter().last(), Some(69));
        assert_eq!(s.complement().len(), 0);
    }

    #[test]
    fn union_subset_and_first_outside() {
        let x = ElemSet::from_codes(130, [1, 64, 129]);
        let a = ElemSet::from_codes(130, [1]);
        let b = ElemSet::from_codes(130, [129]);
        assert!(!x.is_subset_of_union(&a, &b));
        assert_eq!(x.first_outside(&a, &b), Some(64));
        let b2 = ElemSet::from_codes(130, [64, 129]);
        assert!(x.is_subset_of_union(&a, &b2));
        assert_eq!(x.first_outside(&a, &b2), None);
    }

    #[test]
    fn iteration_is_ascending() {
        let s = ElemSet::from_codes(200, [199, 3, 64, 63, 0]);
        assert_eq!(s.to_vec(), vec![0, 3, 63, 64, 199]);
    }
}
