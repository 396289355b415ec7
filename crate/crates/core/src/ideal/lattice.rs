use std::collections::{HashMap, HashSet};
use std::sync::{Arc, OnceLock};

use crate::bitset::ElemSet;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ideal::{span, sum_sets, Ideal};
use crate::ring::Ring;

/// Every ideal of a finite ring, in canonical order (size, then codes).
pub struct IdealLattice {
    ring: Arc<Ring>,
    ideals: Vec<Ideal>,
    index: HashMap<ElemSet, usize>,
    /// `below[i]` holds every `j` with `ideals[j] ⊆ ideals[i]`.
    below: Vec<ElemSet>,
    principal: OnceLock<Vec<u32>>,
    products: OnceLock<Vec<u32>>,
    maximal: OnceLock<Vec<usize>>,
}

impl IdealLattice {
    pub fn enumerate(ring: &Arc<Ring>) -> Result<IdealLattice> {
        IdealLattice::enumerate_with(ring, &Caps::default())
    }

    /// Uses the divisor lattice for `zn`, factor lattices for products and
    /// principal-ideal sum closure otherwise.
    pub fn enumerate_with(ring: &Arc<Ring>, caps: &Caps) -> Result<IdealLattice> {
        caps.check_ring(ring.size() as u64)?;
        Ok(IdealLattice::from_sets(ring, lattice_sets(ring)?))
    }

    /// The general path only, regardless of ring shape.
    pub fn enumerate_general(ring: &Arc<Ring>) -> IdealLattice {
        IdealLattice::from_sets(ring, closure_sets(ring))
    }

    fn from_sets(ring: &Arc<Ring>, sets: Vec<ElemSet>) -> IdealLattice {
        let mut ideals: Vec<Ideal> = sets.into_iter().map(|s| Ideal::from_set(ring, s)).collect();
        ideals.sort_by(|a, b| a.canonical_cmp(b));
        let index = ideals
            .iter()
            .enumerate()
            .map(|(i, ideal)| (ideal.elements().clone(), i))
            .collect();
        let n = ideals.len();
        let below = ideals
            .iter()
            .map(|big| {
                ElemSet::from_codes(
                    n,
                    (0..n as u32).filter(|&j| ideals[j as usize].is_subset(big)),
                )
            })
            .collect();
        IdealLattice {
            ring: Arc::clone(ring),
            ideals,
            index,
            below,
            principal: OnceLock::new(),
            products: OnceLock::new(),
            maximal: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn get(&self, i: usize) -> &Ideal {
        &self.ideals[i]
    }

    /// Index of the whole ring.
    pub fn top(&self) -> usize {
        self.ideals.len() - 1
    }

    pub fn proper(&self) -> impl Iterator<Item = usize> + '_ {
        0..self.top()
    }

    pub fn index_of_set(&self, set: &ElemSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub fn index_of(&self, ideal: &Ideal) -> Result<usize> {
        if **ideal.ring() != *self.ring {
            return Err(Error::LatticeMismatch);
        }
        self.index_of_set(ideal.elements())
            .ok_or(Error::LatticeMismatch)
    }

    /// `ideals[i] ⊆ ideals[j]`.
    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.below[j].contains(i as u32)
    }

    pub fn below(&self, i: usize) -> &ElemSet {
        &self.below[i]
    }

    /// Index of `Rx`.
    pub fn principal(&self, x: u32) -> usize {
        self.principal.get_or_init(|| {
            self.ring
                .codes()
                .map(|x| self.index[&span(&self.ring, [x])] as u32)
                .collect()
        })[x as usize] as usize
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        let n = self.len();
        self.products.get_or_init(|| {
            let mut table = vec![0u32; n * n];
            for a in 0..n {
                for b in a..n {
                    let p = self.ideals[a].product(&self.ideals[b]).expect("same ring");
                    let k = self.index[p.elements()] as u32;
                    table[a * n + b] = k;
                    table[b * n + a] = k;
                }
            }
            table
        })[i * n + j] as usize
    }

    pub fn intersect(&self, i: usize, j: usize) -> usize {
        self.index[&self.ideals[i].elements().intersection(self.ideals[j].elements())]
    }

    pub fn sum(&self, i: usize, j: usize) -> usize {
        self.index[&sum_sets(&self.ring, self.ideals[i].elements(), self.ideals[j].elements())]
    }

    /// Maximal ideals; in a finite ring these are exactly the primes.
    pub fn maximal(&self) -> &[usize] {
        self.maximal.get_or_init(|| {
            let top = self.top();
            self.proper()
                .filter(|&i| (0..top).all(|j| j == i || !self.le(i, j)))
                .collect()
        })
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.maximal().contains(&i)
    }

    pub fn primes(&self) -> &[usize] {
        self.maximal()
    }

    /// Inclusion-minimal primes containing `ideals[i]`.
    pub fn minimal_primes_over(&self, i: usize) -> Vec<usize> {
        let over: Vec<usize> = self.primes().iter().copied().filter(|&p| self.le(i, p)).collect();
        over.iter()
            .copied()
            .filter(|&p| !over.iter().any(|&q| q != p && self.le(q, p)))
            .collect()
    }

    /// Hasse diagram edges `(i, j)`: `ideals[j]` covers `ideals[i]`, in
    /// lexicographic order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.le(i, j) && !(i + 1..j).any(|k| self.le(i, k) && self.le(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// First pair (canonical order) of strictly larger ideals meeting in
    /// `ideals[i]`, or `None` when it is irreducible.
    pub fn reducible_witness(&self, i: usize) -> Option<(usize, usize)> {
        let above: Vec<usize> = (0..self.len()).filter(|&j| j != i && self.le(i, j)).collect();
        for (k, &a) in above.iter().enumerate() {
            for &b in &above[k + 1..] {
                if self.intersect(a, b) == i {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

fn lattice_sets(ring: &Arc<Ring>) -> Result<Vec<ElemSet>> {
    let size = ring.size() as usize;
    if let Some(n) = ring.modulus() {
        return Ok((1..=n)
            .filter(|d| n % d == 0)
            .map(|d| ElemSet::from_codes(size, (0..n).step_by(d as usize)))
            .collect());
    }
    if let Some(factors) = ring.factors() {
        let parts: Vec<Vec<ElemSet>> = factors
            .iter()
            .map(lattice_sets)
            .collect::<Result<_>>()?;
        let split: Vec<Vec<u32>> = ring.codes().map(|x| ring.split(x)).collect();
        let mut choice = vec![0usize; parts.len()];
        let mut out = Vec::new();
        loop {
            out.push(ElemSet::from_codes(
                size,
                ring.codes().filter(|&x| {
                    split[x as usize]
                        .iter()
                        .zip(&choice)
                        .zip(&parts)
                        .all(|((c, &k), p)| p[k].contains(*c))
                }),
            ));
            let mut pos = parts.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                choice[pos] += 1;
                if choice[pos] < parts[pos].len() {
                    break;
                }
                choice[pos] = 0;
            }
        }
    }
    Ok(closure_sets(ring))
}

/// Principal ideals closed under pairwise sums.
fn closure_sets(ring: &Ring) -> Vec<ElemSet> {
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut all = Vec::new();
    for x in ring.codes() {
        let s = span(ring, [x]);
        if seen.insert(s.clone()) {
            all.push(s);
        }
    }
    let mut frontier = 0;
    while frontier < all.len() {
        let end = all.len();
        for i in frontier..end {
            for j in 0..i {
                let s = sum_sets(ring, &all[i], &all[j]);
                if seen.insert(s.clone()) {
                    all.push(s);
                }
            }
        }
        frontier = end;
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(s: &str) -> IdealLattice {
        let r = Arc::new(Ring::build(&s.parse().unwrap()).unwrap());
        IdealLattice::enumerate(&r).unwrap()
    }

    #[test]
    fn small_lattices() {
        assert_eq!(lattice("zn:12").len(), 6);
        assert_eq!(lattice("prod:(zn:2,zn:2)").len(), 4);
        let l = lattice("idz:(zn:2)^1");
        assert_eq!(l.len(), 3);
        assert_eq!(l.get(1).generators(), &[1]);
    }

    #[test]
    fn hasse_covers() {
        assert_eq!(lattice("zn:12").covers(), [(0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (3, 5), (4, 5)]);
        assert_eq!(lattice("zn:8").covers(), [(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn fast_paths_match_closure() {
        for s in ["zn:36", "prod:(zn:4,zn:6)", "prod:(zn:2,zn:2,zn:3)"] {
            let l = lattice(s);
            let g = IdealLattice::enumerate_general(l.ring());
            assert_eq!(l.ideals(), g.ideals(), "{s}");
        }
    }

    #[test]
    fn irreducibility_in_z36() {
        let l = lattice("zn:36");
        let r = l.ring().clone();
        let idx = |d| l.index_of(&Ideal::principal(&r, d)).unwrap();
        assert_eq!(l.reducible_witness(idx(4)), None);
        let (a, b) = l.reducible_witness(idx(6)).unwrap();
        let mut pair = [l.get(a).generators()[0], l.get(b).generators()[0]];
        pair.sort();
        assert_eq!(pair, [2, 3]);
        assert_eq!(l.reducible_witness(idx(2)), None);
    }

    #[test]
    fn minimal_primes() {
        let l = lattice("zn:36");
        let r = l.ring().clone();
        let idx = |d| l.index_of(&Ideal::principal(&r, d)).unwrap();
        let mut got = l.minimal_primes_over(idx(12));
        got.sort();
        let mut want = vec![idx(2), idx(3)];
        want.sort();
        assert_eq!(got, want);

        let l = lattice("zn:8");
        let r = l.ring().clone();
        assert_eq!(
            l.minimal_primes_over(l.index_of(&Ideal::principal(&r, 4)).unwrap()),
            vec![l.index_of(&Ideal::principal(&r, 2)).unwrap()]
        );

        let l = lattice("prod:(zn:2,zn:3)");
        let mins: Vec<Vec<u32>> = l
            .minimal_primes_over(0)
            .into_iter()
            .map(|i| l.get(i).elements().to_vec())
            .collect();
        // (0)xZ3 = {0,1,2} and Z2x(0) = {0,3}
        assert_eq!(mins, vec![vec![0, 3], vec![0, 1, 2]]);
    }

    #[test]
    fn table_lookups() {
        let l = lattice("zn:36");
        let r = l.ring().clone();
        let idx = |d| l.index_of(&Ideal::principal(&r, d)).unwrap();
        assert_eq!(l.product(idx(2), idx(3)), idx(6));
        assert_eq!(l.intersect(idx(4), idx(6)), idx(12));
        assert_eq!(l.sum(idx(4), idx(6)), idx(2));
        assert_eq!(l.principal(10), idx(2));
    }
}
