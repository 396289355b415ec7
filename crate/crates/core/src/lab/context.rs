use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::bitset::ElemSet;
use crate::caps::Caps;
use crate::classify::{classify_analysis, Analysis, ClassificationReport};
use crate::error::{Error, Result};
use crate::ideal::IdealLattice;
use crate::ring::{Ring, RingDescriptor};

/// Rings at most this large are kept in the shared cache; larger ones are
/// built per use and dropped with their colon tables.
const SHARED_MAX: u32 = 128;

/// A ring with its ideal lattice and lazily built per-ideal analyses.
pub struct RingCtx {
    lattice: IdealLattice,
    analyses: Vec<OnceLock<Analysis>>,
    radicals: Vec<OnceLock<usize>>,
    caps: Caps,
}

impl RingCtx {
    pub fn build(descriptor: &RingDescriptor, caps: &Caps) -> Result<RingCtx> {
        let ring = Arc::new(Ring::build_with(descriptor, caps)?);
        let lattice = IdealLattice::enumerate_with(&ring, caps)?;
        let n = lattice.len();
        Ok(RingCtx {
            lattice,
            analyses: (0..n).map(|_| OnceLock::new()).collect(),
            radicals: (0..n).map(|_| OnceLock::new()).collect(),
            caps: *caps,
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.lattice.ring()
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        self.ring().descriptor()
    }

    pub fn lattice(&self) -> &IdealLattice {
        &self.lattice
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    pub fn proper(&self) -> impl Iterator<Item = usize> + '_ {
        self.lattice.proper()
    }

    pub fn set(&self, i: usize) -> &ElemSet {
        self.lattice.get(i).elements()
    }

    /// Lattice index of an ideal given by its element set.
    pub fn index(&self, set: &ElemSet) -> usize {
        self.lattice
            .index_of_set(set)
            .unwrap_or_else(|| panic!("not an ideal of {}", self.ring()))
    }

    /// Index of the ideal generated by `codes`.
    pub fn span(&self, codes: impl IntoIterator<Item = u32>) -> usize {
        self.index(&crate::ideal::span(self.ring(), codes))
    }

    pub fn analysis(&self, i: usize) -> Result<&Analysis> {
        if let Some(a) = self.analyses[i].get() {
            return Ok(a);
        }
        let a = Analysis::new(self.lattice.get(i))?;
        Ok(self.analyses[i].get_or_init(|| a))
    }

    pub fn radical(&self, i: usize) -> usize {
        *self.radicals[i].get_or_init(|| {
            let ideal = self.lattice.get(i);
            self.index(ideal.radical().elements())
        })
    }

    /// `(L_i : x)` as a lattice index.
    pub fn colon(&self, i: usize, x: u32) -> usize {
        match self.analysis(i) {
            Ok(a) => self.index(&a.colon_q()[x as usize]),
            Err(_) => self.top(),
        }
    }

    pub fn prime(&self, i: usize) -> Result<bool> {
        Ok(self.analysis(i)?.prime_witness().is_none())
    }

    pub fn primary(&self, i: usize) -> Result<bool> {
        Ok(self.analysis(i)?.primary_witness().is_none())
    }

    pub fn ord(&self, i: usize) -> Result<Option<u32>> {
        Ok(self.analysis(i)?.ord())
    }

    pub fn irreducible(&self, i: usize) -> Result<bool> {
        Ok(self.analysis(i)?.irreducible_witness().is_none())
    }

    pub fn maximal(&self, i: usize) -> Result<bool> {
        Ok(self.analysis(i)?.maximal_witness().is_none())
    }

    fn cubic(&self, i: usize) -> Result<&Analysis> {
        self.caps.check_cubic(self.ring().size())?;
        self.analysis(i)
    }

    pub fn two_absorbing(&self, i: usize) -> Result<bool> {
        Ok(self.cubic(i)?.two_absorbing_witness().is_none())
    }

    pub fn two_ap(&self, i: usize) -> Result<bool> {
        Ok(self.cubic(i)?.two_ap_witness().is_none())
    }

    pub fn two_ord(&self, i: usize) -> Result<Option<u32>> {
        Ok(self.cubic(i)?.two_ord())
    }

    pub fn two_exp(&self, i: usize) -> Result<Option<u32>> {
        Ok(self.cubic(i)?.two_exp())
    }

    pub fn special(&self, i: usize) -> Result<bool> {
        Ok(self.two_ord(i)? == Some(1))
    }

    pub fn report(&self, i: usize) -> Result<ClassificationReport> {
        classify_analysis(self.cubic(i)?, &self.lattice, &self.caps)
    }

    /// Generators of `L_i` as element codes.
    pub fn generators(&self, i: usize) -> Vec<u64> {
        self.lattice.get(i).generators().iter().map(|&g| g as u64).collect()
    }
}

/// Ring contexts shared across checkers. Small rings are cached so that
/// factor rings and hom targets are enumerated once.
pub struct Workspace {
    caps: Caps,
    cache: Mutex<HashMap<RingDescriptor, Arc<RingCtx>>>,
}

impl Workspace {
    pub fn new(caps: Caps) -> Workspace {
        Workspace {
            caps,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn ctx(&self, descriptor: &RingDescriptor) -> Result<Arc<RingCtx>> {
        let size = descriptor
            .size()
            .ok_or_else(|| Error::InvalidDescriptor(format!("{descriptor} is too large")))?;
        if size > SHARED_MAX as u64 {
            return Ok(Arc::new(RingCtx::build(descriptor, &self.caps)?));
        }
        if let Some(ctx) = self.cache.lock().expect("ring cache").get(descriptor) {
            return Ok(Arc::clone(ctx));
        }
        let ctx = Arc::new(RingCtx::build(descriptor, &self.caps)?);
        self.cache
            .lock()
            .expect("ring cache")
            .entry(descriptor.clone())
            .or_insert_with(|| Arc::clone(&ctx));
        Ok(ctx)
    }

    /// Context of the ring `ring` is built from; shares cache entries.
    pub fn ctx_of(&self, ring: &Ring) -> Result<Arc<RingCtx>> {
        self.ctx(ring.descriptor())
    }
}
