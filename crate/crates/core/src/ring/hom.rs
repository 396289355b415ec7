use std::sync::Arc;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{span, Ideal};
use crate::ring::finite::gcd;
use crate::ring::{Element, Ring, RingDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomKind {
    /// `Z/n -> Z/d` for `d | n`.
    QuotientMod,
    /// A product onto one factor.
    Projection(usize),
    /// `Z/ab -> Z/a x Z/b` for coprime `a, b`.
    CrtIso,
    /// `Z/n -> Z/n x Z/n`, `x -> (x, x)`.
    DiagonalEmbed,
}

/// A ring homomorphism with its value table.
pub struct RingHom {
    source: Arc<Ring>,
    target: Arc<Ring>,
    kind: HomKind,
    map: Vec<u32>,
}

fn modular(n: u32) -> Result<Arc<Ring>> {
    Ok(Arc::new(Ring::build(&RingDescriptor::Modular(n))?))
}

impl RingHom {
    pub fn quotient_mod(n: u32, d: u32) -> Result<RingHom> {
        if d < 2 || !n.is_multiple_of(d) {
            return Err(Error::InvalidDescriptor(format!("zn:{n} -> zn:{d} needs d | n, d >= 2")));
        }
        let source = modular(n)?;
        let target = modular(d)?;
        let map = (0..n).map(|x| x % d).collect();
        Ok(RingHom {
            source,
            target,
            kind: HomKind::QuotientMod,
            map,
        })
    }

    pub fn projection(source: &Arc<Ring>, i: usize) -> Result<RingHom> {
        let factors = source
            .factors()
            .ok_or_else(|| Error::InvalidDescriptor(format!("{source} is not a product")))?;
        let target = factors
            .get(i)
            .cloned()
            .ok_or_else(|| Error::InvalidDescriptor(format!("{source} has no factor {i}")))?;
        let map = source.codes().map(|x| source.split(x)[i]).collect();
        Ok(RingHom {
            source: Arc::clone(source),
            target,
            kind: HomKind::Projection(i),
            map,
        })
    }

    pub fn crt_iso(a: u32, b: u32) -> Result<RingHom> {
        if a < 2 || b < 2 || gcd(a as u64, b as u64) != 1 {
            return Err(Error::InvalidDescriptor(format!("CRT needs coprime a, b >= 2, got {a}, {b}")));
        }
        let source = modular(a * b)?;
        let target = Arc::new(Ring::build(&RingDescriptor::product([
            RingDescriptor::Modular(a),
            RingDescriptor::Modular(b),
        ]))?);
        let map = source.codes().map(|x| target.join(&[x % a, x % b])).collect();
        Ok(RingHom {
            source,
            target,
            kind: HomKind::CrtIso,
            map,
        })
    }

    pub fn diagonal(n: u32) -> Result<RingHom> {
        let source = modular(n)?;
        let target = Arc::new(Ring::build(&RingDescriptor::product([
            RingDescriptor::Modular(n),
            RingDescriptor::Modular(n),
        ]))?);
        let map = source.codes().map(|x| target.join(&[x, x])).collect();
        Ok(RingHom {
            source,
            target,
            kind: HomKind::DiagonalEmbed,
            map,
        })
    }

    /// Every surjective registered hom out of `ring`: reductions to proper
    /// divisors, CRT splittings and projections.
    pub fn surjections_from(ring: &Arc<Ring>) -> Result<Vec<RingHom>> {
        let mut out = Vec::new();
        if let Some(n) = ring.modulus() {
            for d in (2..n).filter(|d| n % d == 0) {
                out.push(RingHom::quotient_mod(n, d)?);
            }
            for a in (2..n).filter(|a| n % a == 0) {
                let b = n / a;
                if b >= 2 && gcd(a as u64, b as u64) == 1 {
                    out.push(RingHom::crt_iso(a, b)?);
                }
            }
        }
        if let Some(factors) = ring.factors() {
            for i in 0..factors.len() {
                out.push(RingHom::projection(ring, i)?);
            }
        }
        Ok(out)
    }

    pub fn source(&self) -> &Arc<Ring> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Ring> {
        &self.target
    }

    pub fn kind(&self) -> HomKind {
        self.kind
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.map[x as usize]
    }

    pub fn apply_element<'t>(&'t self, x: Element<'_>) -> Result<Element<'t>> {
        if *x.ring() != *self.source {
            return Err(Error::RingMismatch {
                expected: self.source.to_string(),
                found: x.ring().to_string(),
            });
        }
        self.target.element(self.apply(x.code()) as u64)
    }

    pub fn is_surjective(&self) -> bool {
        !matches!(self.kind, HomKind::DiagonalEmbed)
    }

    pub fn is_injective(&self) -> bool {
        matches!(self.kind, HomKind::CrtIso | HomKind::DiagonalEmbed)
            || self.source.size() == self.target.size()
    }

    fn expect(&self, ring: &Arc<Ring>, expected: &Arc<Ring>) -> Result<()> {
        if **ring == **expected {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                expected: expected.to_string(),
                found: ring.to_string(),
            })
        }
    }

    /// The ideal generated by `f(I)`; equal to `f(I)` for surjections.
    pub fn image(&self, ideal: &Ideal) -> Result<Ideal> {
        self.expect(ideal.ring(), &self.source)?;
        let set = span(&self.target, ideal.elements().iter().map(|x| self.apply(x)));
        Ok(Ideal::from_set(&self.target, set))
    }

    pub fn preimage(&self, ideal: &Ideal) -> Result<Ideal> {
        self.expect(ideal.ring(), &self.target)?;
        let set = ElemSet::from_codes(
            self.source.size() as usize,
            self.source.codes().filter(|&x| ideal.contains(self.apply(x))),
        );
        Ok(Ideal::from_set(&self.source, set))
    }

    pub fn kernel(&self) -> Ideal {
        self.preimage(&Ideal::zero(&self.target)).expect("target ideal")
    }
}

/// `{1, s, s^2, ...}`.
pub struct MultiplicativeSet {
    ring: Arc<Ring>,
    generator: u32,
    elements: ElemSet,
}

impl MultiplicativeSet {
    pub fn generated_by(ring: &Arc<Ring>, s: u32) -> MultiplicativeSet {
        let mut elements = ElemSet::empty(ring.size() as usize);
        let mut p = ring.one();
        while elements.insert(p) {
            p = ring.mul(p, s);
        }
        MultiplicativeSet {
            ring: Arc::clone(ring),
            generator: s,
            elements,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generator(&self) -> u32 {
        self.generator
    }

    pub fn elements(&self) -> &ElemSet {
        &self.elements
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.contains(x)
    }
}

/// Outcome of localizing `Z/n` at the powers of one element.
pub enum Localization {
    /// `S^-1 Z/n ≅ Z/n'` through reduction mod `n'`.
    Ring { modulus: u32, hom: RingHom },
    /// Every prime of `n` divides `s`: the localization is the zero ring.
    ZeroRing,
}

/// Localizes `Z/n` at `{1, s, s^2, ...}` by dropping every prime power of
/// `n` whose prime divides `s`.
pub fn localize_modular(n: u32, s: u32) -> Result<Localization> {
    if n < 2 {
        return Err(Error::InvalidDescriptor(format!("zn:{n} needs n >= 2")));
    }
    let s = s % n;
    let mut rest = n;
    let mut kept = 1u32;
    let mut p = 2;
    while rest > 1 {
        if p * p > rest {
            p = rest;
        }
        if rest.is_multiple_of(p) {
            let mut pk = 1;
            while rest.is_multiple_of(p) {
                rest /= p;
                pk *= p;
            }
            if !s.is_multiple_of(p) {
                kept *= pk;
            }
        }
        p += 1;
    }
    if kept == 1 {
        return Ok(Localization::ZeroRing);
    }
    Ok(Localization::Ring {
        modulus: kept,
        hom: RingHom::quotient_mod(n, kept)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_image_and_preimage() {
        let h = RingHom::quotient_mod(12, 6).unwrap();
        let i = Ideal::principal(h.source(), 4);
        assert_eq!(h.image(&i).unwrap().elements().to_vec(), vec![0, 2, 4]);
        let z = Ideal::zero(h.target());
        assert_eq!(h.preimage(&z).unwrap(), Ideal::principal(h.source(), 6));
        assert_eq!(h.kernel(), Ideal::principal(h.source(), 6));
    }

    #[test]
    fn crt_maps_two_to_zero_times_z3() {
        let h = RingHom::crt_iso(2, 3).unwrap();
        let img = h.image(&Ideal::principal(h.source(), 2)).unwrap();
        let t = h.target();
        let want: Vec<u32> = (0..3).map(|y| t.join(&[0, y])).collect();
        assert_eq!(img.elements().to_vec(), want);
    }

    #[test]
    fn homs_preserve_structure() {
        let r = Arc::new(Ring::build(&"prod:(zn:4,zn:3)".parse().unwrap()).unwrap());
        let mut homs = RingHom::surjections_from(&r).unwrap();
        homs.extend(RingHom::surjections_from(&modular(12).unwrap()).unwrap());
        homs.push(RingHom::diagonal(6).unwrap());
        for h in &homs {
            let (s, t) = (h.source(), h.target());
            assert_eq!(h.apply(s.one()), t.one());
            for a in s.codes() {
                for b in s.codes() {
                    assert_eq!(h.apply(s.add(a, b)), t.add(h.apply(a), h.apply(b)));
                    assert_eq!(h.apply(s.mul(a, b)), t.mul(h.apply(a), h.apply(b)));
                }
            }
        }
    }

    #[test]
    fn localization_drops_shared_primes() {
        let m = |n, s| match localize_modular(n, s).unwrap() {
            Localization::Ring { modulus, .. } => modulus,
            Localization::ZeroRing => 1,
        };
        assert_eq!(m(12, 2), 3);
        assert_eq!(m(12, 5), 12);
        assert_eq!(m(12, 6), 1);
        assert_eq!(m(12, 0), 1);
        assert_eq!(m(360, 10), 9);
    }

    #[test]
    fn multiplicative_closure() {
        let r = modular(12).unwrap();
        let s = MultiplicativeSet::generated_by(&r, 2);
        assert_eq!(s.elements().to_vec(), vec![1, 2, 4, 8]);
    }
}
