//! Element- and ideal-quantified conditions that characterize uniformly
//! primary, uniformly 2-absorbing primary and special ideals, evaluated
//! literally against one proper ideal.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::bitset::ElemSet;
use crate::caps::Caps;
use crate::classify::Analysis;
use crate::error::{Error, Result};
use crate::ideal::IdealLattice;

pub struct Conditions<'a> {
    analysis: &'a Analysis,
    lattice: &'a IdealLattice,
    caps: Caps,
    /// `(Q : L_i)` for every lattice ideal.
    colon_q: OnceLock<Vec<ElemSet>>,
    /// `(√Q : L_i)` for every lattice ideal.
    colon_rad: OnceLock<Vec<ElemSet>>,
    brackets: Mutex<HashMap<(usize, u32), ElemSet>>,
}

impl<'a> Conditions<'a> {
    pub fn new(analysis: &'a Analysis, lattice: &'a IdealLattice, caps: &Caps) -> Result<Self> {
        if **lattice.ring() != **analysis.ring() {
            return Err(Error::LatticeMismatch);
        }
        Ok(Conditions {
            analysis,
            lattice,
            caps: *caps,
            colon_q: OnceLock::new(),
            colon_rad: OnceLock::new(),
            brackets: Mutex::new(HashMap::new()),
        })
    }

    fn q(&self) -> &ElemSet {
        self.analysis.ideal().elements()
    }

    fn rad(&self) -> &ElemSet {
        self.analysis.radical().elements()
    }

    fn ideal(&self, i: usize) -> &ElemSet {
        self.lattice.get(i).elements()
    }

    fn colon_by(&self, table: &[ElemSet]) -> Vec<ElemSet> {
        let size = self.analysis.ring().size() as usize;
        self.lattice
            .ideals()
            .iter()
            .map(|ideal| {
                let mut acc = ElemSet::full(size);
                for &g in ideal.generators() {
                    acc.intersect_with(&table[g as usize]);
                }
                acc
            })
            .collect()
    }

    fn colon_q_ideal(&self, i: usize) -> &ElemSet {
        &self.colon_q.get_or_init(|| self.colon_by(self.analysis.colon_q()))[i]
    }

    fn colon_rad_ideal(&self, i: usize) -> &ElemSet {
        &self.colon_rad.get_or_init(|| self.colon_by(self.analysis.colon_rad()))[i]
    }

    /// `L_i^[n]`, the ideal generated by n-th powers.
    fn bracket(&self, i: usize, n: u32) -> ElemSet {
        let mut cache = self.brackets.lock().expect("bracket cache");
        cache
            .entry((i, n))
            .or_insert_with(|| self.lattice.get(i).bracket_power(n).elements().clone())
            .clone()
    }

    fn set_index(&self, set: &ElemSet) -> usize {
        self.lattice
            .index_of_set(set)
            .expect("colon ideals belong to the lattice")
    }

    /// Associate-class representatives: every condition is invariant under
    /// multiplying an element by a unit.
    fn reps(&self) -> impl Iterator<Item = u32> + Clone + '_ {
        self.analysis.ring().associate_reps().iter().copied()
    }

    fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.reps().flat_map(move |a| self.reps().map(move |b| (a, b)))
    }

    /// Conditions (2)-(6) of the uniformly 2-absorbing primary
    /// characterization at exponent `n`.
    pub fn main1(&self, which: u8, n: u32) -> Result<bool> {
        check_exponent(n)?;
        let ring = self.analysis.ring();
        self.caps.check_cubic(ring.size())?;
        let (cq, cr) = (self.analysis.colon_q(), self.analysis.colon_rad());
        let in_q = |x: u32| self.q().contains(x);
        let holds = match which {
            2 => self.pairs().all(|(a, b)| {
                let ab = ring.mul(a, b);
                in_q(ring.pow(ab, n as u64))
                    || cq[ab as usize].is_subset_of_union(&cq[a as usize], &cr[b as usize])
            }),
            3 => self.pairs().all(|(a, b)| {
                let ab = ring.mul(a, b);
                let c = &cq[ab as usize];
                in_q(ring.pow(ab, n as u64)) || *c == cq[a as usize] || c.is_subset(&cr[b as usize])
            }),
            4 => self.pairs().all(|(a, b)| {
                let ab = ring.mul(a, b);
                if in_q(ring.pow(ab, n as u64)) {
                    return true;
                }
                // abI ⊆ Q exactly when I ⊆ (Q : ab)
                let top = self.set_index(&cq[ab as usize]);
                self.lattice.below(top).iter().all(|i| {
                    let ideal = self.ideal(i as usize);
                    ideal.is_subset(&cq[a as usize]) || ideal.is_subset(&cr[b as usize])
                })
            }),
            5 | 6 => self.pairs().all(|(a, b)| {
                let ab = ring.mul(a, b);
                if in_q(ab) {
                    return true;
                }
                let br = self.bracket(self.set_index(&cq[ab as usize]), n);
                let ra = &cr[a as usize];
                let qb = &cq[ring.pow(b, n as u64) as usize];
                if which == 5 {
                    br.is_subset_of_union(ra, qb)
                } else {
                    br.is_subset(ra) || br.is_subset(qb)
                }
            }),
            _ => {
                return Err(Error::UnknownCondition {
                    theorem: "main1",
                    which,
                })
            }
        };
        Ok(holds)
    }

    /// Conditions (2)-(4) of the uniformly primary characterization at
    /// exponent `n`.
    pub fn uniformly_primary(&self, which: u8, n: u32) -> Result<bool> {
        check_exponent(n)?;
        let ring = self.analysis.ring();
        let cq = self.analysis.colon_q();
        let holds = match which {
            2 => {
                self.caps.check_lattice(self.lattice.len())?;
                let l = self.lattice.len();
                (0..l).all(|i| {
                    (0..l).all(|j| {
                        !self.ideal(self.lattice.product(i, j)).is_subset(self.q())
                            || self.ideal(i).is_subset(self.q())
                            || self.bracket(j, n).is_subset(self.q())
                    })
                })
            }
            3 => self.reps().all(|a| {
                self.q().contains(a)
                    || self
                        .bracket(self.set_index(&cq[a as usize]), n)
                        .is_subset(self.q())
            }),
            4 => self
                .reps()
                .all(|a| self.q().contains(ring.pow(a, n as u64)) || cq[a as usize] == *self.q()),
            _ => {
                return Err(Error::UnknownCondition {
                    theorem: "uniformly-primary",
                    which,
                })
            }
        };
        Ok(holds)
    }

    /// Conditions (2)-(9) of the special 2-absorbing primary
    /// characterization.
    pub fn special(&self, which: u8) -> Result<bool> {
        let ring = self.analysis.ring();
        let (cq, cr) = (self.analysis.colon_q(), self.analysis.colon_rad());
        let l = self.lattice.len();
        let lat = self.lattice;
        if which >= 6 {
            self.caps.check_lattice(l)?;
        } else {
            self.caps.check_cubic(ring.size())?;
        }
        let holds = match which {
            2 => self.main1(3, 1)?,
            3 => self.pairs().all(|(a, b)| {
                let ab = ring.mul(a, b);
                if self.q().contains(ab) {
                    return true;
                }
                let top = self.set_index(&cq[ab as usize]);
                lat.below(top).iter().all(|i| {
                    let ideal = self.ideal(i as usize);
                    ideal.is_subset(&cq[a as usize]) || ideal.is_subset(&cr[b as usize])
                })
            }),
            4 | 5 => self.reps().all(|a| {
                let pa = lat.principal(a);
                (0..l).all(|i| {
                    if self.ideal(i).is_subset(&cq[a as usize]) {
                        return true;
                    }
                    let c = self.colon_q_ideal(lat.product(pa, i));
                    let (qa, ri) = (&cq[a as usize], self.colon_rad_ideal(i));
                    if which == 4 {
                        c.is_subset_of_union(qa, ri)
                    } else {
                        c == qa || c.is_subset(ri)
                    }
                })
            }),
            6 => self.reps().all(|a| {
                let qa = &cq[a as usize];
                (0..l).all(|i| {
                    (0..l).all(|j| {
                        let ij = self.ideal(lat.product(i, j));
                        !ij.is_subset(qa)
                            || self.ideal(i).is_subset(qa)
                            || ij.is_subset(self.rad())
                            || self.ideal(j).is_subset(qa)
                    })
                })
            }),
            7 | 8 => (0..l).all(|i| {
                (0..l).all(|j| {
                    let ij = lat.product(i, j);
                    if self.ideal(ij).is_subset(self.rad()) {
                        return true;
                    }
                    let c = self.colon_q_ideal(ij);
                    let (ci, cj) = (self.colon_q_ideal(i), self.colon_q_ideal(j));
                    if which == 7 {
                        c.is_subset_of_union(ci, cj)
                    } else {
                        c == ci || c == cj
                    }
                })
            }),
            9 => (0..l).all(|i| {
                (0..l).all(|j| {
                    let ij = lat.product(i, j);
                    (0..l).all(|k| {
                        !self.ideal(lat.product(ij, k)).is_subset(self.q())
                            || self.ideal(ij).is_subset(self.rad())
                            || self.ideal(lat.product(i, k)).is_subset(self.q())
                            || self.ideal(lat.product(j, k)).is_subset(self.q())
                    })
                })
            }),
            _ => {
                return Err(Error::UnknownCondition {
                    theorem: "special",
                    which,
                })
            }
        };
        Ok(holds)
    }

    /// First ideal triple `(I, J, K)` breaking condition (9), as lattice
    /// indices.
    pub fn special_triple_witness(&self) -> Result<Option<(usize, usize, usize)>> {
        let l = self.lattice.len();
        self.caps.check_lattice(l)?;
        let lat = self.lattice;
        for i in 0..l {
            for j in 0..l {
                let ij = lat.product(i, j);
                for k in 0..l {
                    if self.ideal(lat.product(ij, k)).is_subset(self.q())
                        && !self.ideal(ij).is_subset(self.rad())
                        && !self.ideal(lat.product(i, k)).is_subset(self.q())
                        && !self.ideal(lat.product(j, k)).is_subset(self.q())
                    {
                        return Ok(Some((i, j, k)));
                    }
                }
            }
        }
        Ok(None)
    }
}

fn check_exponent(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("exponents start at 1".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::ideal::Ideal;
    use crate::ring::Ring;

    fn setup(ring: &str, gens: &[u64]) -> (Analysis, IdealLattice) {
        let r = Arc::new(Ring::build(&ring.parse().unwrap()).unwrap());
        let a = Analysis::new(&Ideal::generate(&r, gens).unwrap()).unwrap();
        (a, IdealLattice::enumerate(&r).unwrap())
    }

    #[test]
    fn main1_on_zero_of_z12() {
        let (a, l) = setup("zn:12", &[0]);
        let c = Conditions::new(&a, &l, &Caps::default()).unwrap();
        assert!(c.main1(3, 2).unwrap());
        assert!(!c.main1(3, 1).unwrap());
        for w in 2..=6 {
            assert!(c.main1(w, 2).unwrap(), "condition {w}");
        }
        assert!(matches!(c.main1(7, 1), Err(Error::UnknownCondition { which: 7, .. })));
        assert!(c.main1(2, 0).is_err());
    }

    #[test]
    fn uniformly_primary_on_zero_of_z8() {
        let (a, l) = setup("zn:8", &[0]);
        let c = Conditions::new(&a, &l, &Caps::default()).unwrap();
        assert!(c.uniformly_primary(4, 3).unwrap());
        assert!(!c.uniformly_primary(4, 2).unwrap());
        for w in 2..=4 {
            assert!(c.uniformly_primary(w, 3).unwrap());
            assert!(!c.uniformly_primary(w, 2).unwrap());
        }
    }

    #[test]
    fn special_conditions() {
        let (a, l) = setup("zn:6", &[0]);
        let c = Conditions::new(&a, &l, &Caps::default()).unwrap();
        for w in 2..=9 {
            assert!(c.special(w).unwrap(), "condition {w}");
        }
        let (a, l) = setup("zn:12", &[0]);
        let c = Conditions::new(&a, &l, &Caps::default()).unwrap();
        for w in 2..=9 {
            assert!(!c.special(w).unwrap(), "condition {w}");
        }
        let (i, j, k) = c.special_triple_witness().unwrap().unwrap();
        let q = a.ideal();
        assert!(l.get(l.product(l.product(i, j), k)).is_subset(q));
        assert!(!l.get(l.product(i, j)).is_subset(a.radical()));
        assert!(!l.get(l.product(i, k)).is_subset(q));
        assert!(!l.get(l.product(j, k)).is_subset(q));
    }

    #[test]
    fn maximal_ideal_satisfies_everything() {
        let (a, l) = setup("zn:12", &[3]);
        let c = Conditions::new(&a, &l, &Caps::default()).unwrap();
        for w in 2..=6 {
            assert!(c.main1(w, 1).unwrap());
        }
        for w in 2..=4 {
            assert!(c.uniformly_primary(w, 1).unwrap());
        }
        for w in 2..=9 {
            assert!(c.special(w).unwrap());
        }
    }
}
