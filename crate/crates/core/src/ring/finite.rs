use std::fmt;
use std::ops::{Add, Mul, Neg, Range, Sub};
use std::sync::{Arc, OnceLock};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ring::descriptor::{RingDescriptor, TableSpec};

/// Rings at or below this size (other than `zn`) get full Cayley tables.
const DENSE_LIMIT: u32 = 1024;

/// A finite commutative ring with identity, built from a [`RingDescriptor`].
///
/// Elements are codes `0..size`:
/// * `zn:n`: the residue itself;
/// * products: mixed radix, first factor most significant;
/// * `polyq`: `c0 + c1*p + c2*p^2 + ...`;
/// * `idz:(R)^k`: `(r, m1..mk)` as `r*|R|^k + m1*|R|^(k-1) + ... + mk`;
/// * tables: the table index.
pub struct Ring {
    descriptor: RingDescriptor,
    size: u32,
    zero: u32,
    one: u32,
    kind: Kind,
    dense: Option<Dense>,
    associates: OnceLock<Associates>,
}

/// Units and the partition of the ring into classes `{ux : u unit}`.
struct Associates {
    units: Vec<u32>,
    rep: Vec<u32>,
    reps: Vec<u32>,
}

enum Kind {
    Modular(u32),
    Product { factors: Vec<Arc<Ring>>, places: Vec<u32> },
    PolyQuotient { p: u32, modulus: Vec<u32> },
    Idealization { base: Arc<Ring>, rank: u32 },
    Table { add: Vec<u16>, mul: Vec<u16> },
}

struct Dense {
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
}

impl Ring {
    pub fn build(descriptor: &RingDescriptor) -> Result<Ring> {
        Ring::build_with(descriptor, &Caps::default())
    }

    pub fn build_with(descriptor: &RingDescriptor, caps: &Caps) -> Result<Ring> {
        let size = descriptor
            .size()
            .ok_or_else(|| Error::InvalidDescriptor(format!("{descriptor} is too large")))?;
        caps.check_ring(size)?;
        let mut ring = Ring::structural(descriptor, caps)?;
        if !matches!(ring.kind, Kind::Modular(_) | Kind::Table { .. }) && ring.size <= DENSE_LIMIT
        {
            ring.dense = Some(ring.tabulate());
        }
        Ok(ring)
    }

    fn structural(descriptor: &RingDescriptor, caps: &Caps) -> Result<Ring> {
        let invalid = |msg: String| Err(Error::InvalidDescriptor(msg));
        let (size, zero, one, kind) = match descriptor {
            RingDescriptor::Modular(n) => {
                if *n < 2 {
                    return invalid(format!("zn:{n} needs n >= 2"));
                }
                (*n, 0, 1, Kind::Modular(*n))
            }
            RingDescriptor::Product(fs) => {
                if fs.is_empty() {
                    return invalid("a product needs at least one factor".into());
                }
                let factors = fs
                    .iter()
                    .map(|f| Ring::build_with(f, caps).map(Arc::new))
                    .collect::<Result<Vec<_>>>()?;
                let mut places = vec![1u32; factors.len()];
                for i in (0..factors.len().saturating_sub(1)).rev() {
                    places[i] = places[i + 1] * factors[i + 1].size;
                }
                let size = places[0] * factors[0].size;
                let one = factors.iter().zip(&places).map(|(f, p)| f.one * p).sum();
                (size, 0, one, Kind::Product { factors, places })
            }
            RingDescriptor::PolyQuotient { p, modulus } => {
                if !is_prime(*p as u64) {
                    return Err(Error::NotAPrime(*p as u64));
                }
                if modulus.len() < 2 {
                    return invalid("polyq modulus must have degree >= 1".into());
                }
                if let Some(c) = modulus.iter().find(|&&c| c >= *p) {
                    return invalid(format!("coefficient {c} is not reduced mod {p}"));
                }
                if modulus.last() != Some(&1) {
                    return invalid(format!("polyq modulus {modulus:?} is not monic"));
                }
                let size = p.pow(modulus.len() as u32 - 1);
                let kind = Kind::PolyQuotient {
                    p: *p,
                    modulus: modulus.clone(),
                };
                (size, 0, 1, kind)
            }
            RingDescriptor::Idealization { base, rank } => {
                if *rank < 1 {
                    return invalid("idealization rank must be >= 1".into());
                }
                let base = Ring::build_with(base, caps)?;
                let size = base.size.pow(rank + 1);
                let one = base.one * base.size.pow(*rank);
                let kind = Kind::Idealization {
                    base: Arc::new(base),
                    rank: *rank,
                };
                (size, 0, one, kind)
            }
            RingDescriptor::Table(t) => {
                let (add, mul) = validate_table(t)?;
                (t.size, t.zero, t.one, Kind::Table { add, mul })
            }
        };
        Ok(Ring {
            descriptor: descriptor.clone(),
            size,
            zero,
            one,
            kind,
            dense: None,
            associates: OnceLock::new(),
        })
    }

    fn tabulate(&self) -> Dense {
        let n = self.size as usize;
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        let mut neg = vec![0u16; n];
        for a in 0..self.size {
            neg[a as usize] = self.neg_slow(a) as u16;
            for b in a..self.size {
                let s = self.add_slow(a, b) as u16;
                let p = self.mul_slow(a, b) as u16;
                let (i, j) = (a as usize * n + b as usize, b as usize * n + a as usize);
                add[i] = s;
                add[j] = s;
                mul[i] = p;
                mul[j] = p;
            }
        }
        Dense { add, mul, neg }
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    #[inline]
    pub fn size(&self) -> u32 {
        self.size
    }

    #[inline]
    pub fn zero(&self) -> u32 {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> u32 {
        self.one
    }

    pub fn codes(&self) -> Range<u32> {
        0..self.size
    }

    pub fn elements(&self) -> impl Iterator<Item = Element<'_>> + '_ {
        self.codes().map(move |code| Element { ring: self, code })
    }

    pub fn element(&self, code: u64) -> Result<Element<'_>> {
        if code >= self.size as u64 {
            return Err(Error::ElementOutOfRange {
                code,
                size: self.size,
            });
        }
        Ok(Element {
            ring: self,
            code: code as u32,
        })
    }

    /// The modulus when this is `zn:n`.
    pub fn modulus(&self) -> Option<u32> {
        match self.kind {
            Kind::Modular(n) => Some(n),
            _ => None,
        }
    }

    /// Factor rings when this is a product.
    pub fn factors(&self) -> Option<&[Arc<Ring>]> {
        match &self.kind {
            Kind::Product { factors, .. } => Some(factors),
            _ => None,
        }
    }

    /// Splits a product code into factor codes.
    pub fn split(&self, code: u32) -> Vec<u32> {
        match &self.kind {
            Kind::Product { factors, places } => factors
                .iter()
                .zip(places)
                .map(|(f, p)| (code / p) % f.size)
                .collect(),
            _ => vec![code],
        }
    }

    /// Joins factor codes into a product code.
    pub fn join(&self, parts: &[u32]) -> u32 {
        match &self.kind {
            Kind::Product { places, .. } => parts.iter().zip(places).map(|(c, p)| c * p).sum(),
            _ => parts[0],
        }
    }

    /// Base ring and rank when this is an idealization.
    pub fn idealization_base(&self) -> Option<(&Arc<Ring>, u32)> {
        match &self.kind {
            Kind::Idealization { base, rank } => Some((base, *rank)),
            _ => None,
        }
    }

    /// `(r, m1..mk)` components of an idealization code.
    pub fn idealization_parts(&self, code: u32) -> (u32, Vec<u32>) {
        let Kind::Idealization { base, rank } = &self.kind else {
            return (code, Vec::new());
        };
        let b = base.size;
        let mut m = vec![0; *rank as usize];
        let mut rest = code;
        for slot in m.iter_mut().rev() {
            *slot = rest % b;
            rest /= b;
        }
        (rest, m)
    }

    pub fn idealization_code(&self, r: u32, m: &[u32]) -> u32 {
        let Kind::Idealization { base, .. } = &self.kind else {
            return r;
        };
        m.iter().fold(r, |acc, &x| acc * base.size + x)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if let Kind::Modular(n) = self.kind {
            let s = a + b;
            return if s >= n { s - n } else { s };
        }
        match &self.dense {
            Some(d) => d.add[(a * self.size + b) as usize] as u32,
            None => self.add_slow(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if let Kind::Modular(n) = self.kind {
            return ((a as u64 * b as u64) % n as u64) as u32;
        }
        match &self.dense {
            Some(d) => d.mul[(a * self.size + b) as usize] as u32,
            None => self.mul_slow(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if let Kind::Modular(n) = self.kind {
            return if a == 0 { 0 } else { n - a };
        }
        match &self.dense {
            Some(d) => d.neg[a as usize] as u32,
            None => self.neg_slow(a),
        }
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// `a^k`, with `a^0 = 1`.
    pub fn pow(&self, a: u32, mut k: u64) -> u32 {
        let mut base = a;
        let mut acc = self.one;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `k * a` for a non-negative integer `k`.
    pub fn scale(&self, a: u32, mut k: u64) -> u32 {
        let mut base = a;
        let mut acc = self.zero;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// Additive order of the identity.
    pub fn characteristic(&self) -> u32 {
        let mut k = 1;
        let mut x = self.one;
        while x != self.zero {
            x = self.add(x, self.one);
            k += 1;
        }
        k
    }

    pub fn is_unit(&self, a: u32) -> bool {
        if let Kind::Modular(n) = self.kind {
            return gcd(a as u64, n as u64) == 1;
        }
        self.codes().any(|b| self.mul(a, b) == self.one)
    }

    fn associates(&self) -> &Associates {
        self.associates.get_or_init(|| {
            let units: Vec<u32> = self.codes().filter(|&a| self.is_unit(a)).collect();
            let mut rep = vec![u32::MAX; self.size as usize];
            let mut reps = Vec::new();
            for x in self.codes() {
                if rep[x as usize] == u32::MAX {
                    reps.push(x);
                    for &u in &units {
                        rep[self.mul(u, x) as usize] = x;
                    }
                }
            }
            Associates { units, rep, reps }
        })
    }

    pub fn units(&self) -> &[u32] {
        &self.associates().units
    }

    /// Least element of `{ux : u unit}`.
    pub fn associate_rep(&self, x: u32) -> u32 {
        self.associates().rep[x as usize]
    }

    /// Least element of every associate class, ascending.
    pub fn associate_reps(&self) -> &[u32] {
        &self.associates().reps
    }

    pub fn is_idempotent(&self, a: u32) -> bool {
        self.mul(a, a) == a
    }

    pub fn is_boolean(&self) -> bool {
        self.codes().all(|a| self.is_idempotent(a))
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        match &self.kind {
            Kind::Modular(n) => (a + b) % n,
            Kind::Product { factors, places } => factors
                .iter()
                .zip(places)
                .map(|(f, p)| f.add((a / p) % f.size, (b / p) % f.size) * p)
                .sum(),
            Kind::PolyQuotient { p, modulus } => {
                let d = modulus.len() - 1;
                let (x, y) = (digits(a, *p, d), digits(b, *p, d));
                let z: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % p).collect();
                undigits(&z, *p)
            }
            Kind::Idealization { base, .. } => {
                let (r, m) = self.idealization_parts(a);
                let (s, n) = self.idealization_parts(b);
                let sum: Vec<u32> = m.iter().zip(&n).map(|(u, v)| base.add(*u, *v)).collect();
                self.idealization_code(base.add(r, s), &sum)
            }
            Kind::Table { add, .. } => add[(a * self.size + b) as usize] as u32,
        }
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        match &self.kind {
            Kind::Modular(n) => ((a as u64 * b as u64) % *n as u64) as u32,
            Kind::Product { factors, places } => factors
                .iter()
                .zip(places)
                .map(|(f, p)| f.mul((a / p) % f.size, (b / p) % f.size) * p)
                .sum(),
            Kind::PolyQuotient { p, modulus } => {
                let d = modulus.len() - 1;
                let (x, y) = (digits(a, *p, d), digits(b, *p, d));
                let mut prod = vec![0u64; 2 * d];
                for (i, u) in x.iter().enumerate() {
                    for (j, v) in y.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + (*u as u64) * (*v as u64)) % *p as u64;
                    }
                }
                // X^d = -(f_0 + ... + f_{d-1} X^{d-1})
                for k in (d..2 * d).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    prod[k] = 0;
                    for (i, f) in modulus[..d].iter().enumerate() {
                        let t = (c * *f as u64) % *p as u64;
                        prod[k - d + i] = (prod[k - d + i] + *p as u64 - t) % *p as u64;
                    }
                }
                let z: Vec<u32> = prod[..d].iter().map(|&c| c as u32).collect();
                undigits(&z, *p)
            }
            Kind::Idealization { base, .. } => {
                let (r, m) = self.idealization_parts(a);
                let (s, n) = self.idealization_parts(b);
                let mixed: Vec<u32> = m
                    .iter()
                    .zip(&n)
                    .map(|(mi, ni)| base.add(base.mul(r, *ni), base.mul(s, *mi)))
                    .collect();
                self.idealization_code(base.mul(r, s), &mixed)
            }
            Kind::Table { mul, .. } => mul[(a * self.size + b) as usize] as u32,
        }
    }

    fn neg_slow(&self, a: u32) -> u32 {
        match &self.kind {
            Kind::Modular(n) => (n - a) % n,
            Kind::Product { factors, places } => factors
                .iter()
                .zip(places)
                .map(|(f, p)| f.neg((a / p) % f.size) * p)
                .sum(),
            Kind::PolyQuotient { p, modulus } => {
                let d = modulus.len() - 1;
                let z: Vec<u32> = digits(a, *p, d).iter().map(|c| (p - c) % p).collect();
                undigits(&z, *p)
            }
            Kind::Idealization { base, .. } => {
                let (r, m) = self.idealization_parts(a);
                let m: Vec<u32> = m.iter().map(|x| base.neg(*x)).collect();
                self.idealization_code(base.neg(r), &m)
            }
            Kind::Table { add, .. } => {
                let row = &add[(a * self.size) as usize..((a + 1) * self.size) as usize];
                row.iter().position(|&s| s as u32 == self.zero).unwrap() as u32
            }
        }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.descriptor == other.descriptor
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.descriptor)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.descriptor.fmt(f)
    }
}

fn digits(mut code: u32, p: u32, d: usize) -> Vec<u32> {
    let mut out = vec![0; d];
    for slot in out.iter_mut() {
        *slot = code % p;
        code /= p;
    }
    out
}

fn undigits(cs: &[u32], p: u32) -> u32 {
    cs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn validate_table(t: &TableSpec) -> Result<(Vec<u16>, Vec<u16>)> {
    let n = t.size;
    let invalid = |msg: String| Err(Error::InvalidDescriptor(msg));
    if n < 2 {
        return invalid("a table ring needs at least two elements".into());
    }
    if n > u16::MAX as u32 {
        return invalid(format!("table size {n} is too large"));
    }
    let cells = (n as usize) * (n as usize);
    if t.add.len() != cells || t.mul.len() != cells {
        return invalid(format!("tables must have {cells} entries"));
    }
    if let Some(x) = t.add.iter().chain(&t.mul).find(|&&x| x >= n) {
        return invalid(format!("table entry {x} is out of range"));
    }
    if t.zero >= n || t.one >= n {
        return invalid("zero and one must be element indices".into());
    }
    let add: Vec<u16> = t.add.iter().map(|&x| x as u16).collect();
    let mul: Vec<u16> = t.mul.iter().map(|&x| x as u16).collect();
    let at = |tab: &[u16], a: u32, b: u32| tab[(a * n + b) as usize] as u32;
    let fail = |axiom, witness: Vec<u32>| Err(Error::RingAxiom { axiom, witness });

    if t.zero == t.one {
        return fail("one differs from zero", vec![t.zero]);
    }
    for a in 0..n {
        if at(&add, t.zero, a) != a {
            return fail("additive identity", vec![a]);
        }
        if at(&mul, t.one, a) != a {
            return fail("multiplicative identity", vec![a]);
        }
        if !(0..n).any(|b| at(&add, a, b) == t.zero) {
            return fail("additive inverse", vec![a]);
        }
        for b in 0..n {
            if at(&add, a, b) != at(&add, b, a) {
                return fail("additive commutativity", vec![a, b]);
            }
            if at(&mul, a, b) != at(&mul, b, a) {
                return fail("multiplicative commutativity", vec![a, b]);
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab_add = at(&add, a, b);
            let ab_mul = at(&mul, a, b);
            for c in 0..n {
                if at(&add, ab_add, c) != at(&add, a, at(&add, b, c)) {
                    return fail("additive associativity", vec![a, b, c]);
                }
                if at(&mul, ab_mul, c) != at(&mul, a, at(&mul, b, c)) {
                    return fail("multiplicative associativity", vec![a, b, c]);
                }
                if at(&mul, a, at(&add, b, c)) != at(&add, ab_mul, at(&mul, a, c)) {
                    return fail("distributivity", vec![a, b, c]);
                }
            }
        }
    }
    Ok((add, mul))
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a specific ring; arithmetic stays inside that ring.
#[derive(Clone, Copy)]
pub struct Element<'r> {
    ring: &'r Ring,
    code: u32,
}

impl<'r> Element<'r> {
    #[inline]
    pub fn code(self) -> u32 {
        self.code
    }

    pub fn ring(self) -> &'r Ring {
        self.ring
    }

    pub fn pow(self, k: u64) -> Element<'r> {
        Element {
            ring: self.ring,
            code: self.ring.pow(self.code, k),
        }
    }

    fn same_ring(self, other: Element<'r>) {
        assert!(
            std::ptr::eq(self.ring, other.ring) || self.ring == other.ring,
            "elements of {} and {} cannot be combined",
            self.ring,
            other.ring
        );
    }
}

impl PartialEq for Element<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code && self.ring == other.ring
    }
}

impl Eq for Element<'_> {}

impl fmt::Debug for Element<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.code, self.ring)
    }
}

impl<'r> Add for Element<'r> {
    type Output = Element<'r>;
    fn add(self, rhs: Self) -> Self::Output {
        self.same_ring(rhs);
        Element {
            ring: self.ring,
            code: self.ring.add(self.code, rhs.code),
        }
    }
}

impl<'r> Sub for Element<'r> {
    type Output = Element<'r>;
    fn sub(self, rhs: Self) -> Self::Output {
        self.same_ring(rhs);
        Element {
            ring: self.ring,
            code: self.ring.sub(self.code, rhs.code),
        }
    }
}

impl<'r> Mul for Element<'r> {
    type Output = Element<'r>;
    fn mul(self, rhs: Self) -> Self::Output {
        self.same_ring(rhs);
        Element {
            ring: self.ring,
            code: self.ring.mul(self.code, rhs.code),
        }
    }
}

impl<'r> Neg for Element<'r> {
    type Output = Element<'r>;
    fn neg(self) -> Self::Output {
        Element {
            ring: self.ring,
            code: self.ring.neg(self.code),
        }
    }
}
