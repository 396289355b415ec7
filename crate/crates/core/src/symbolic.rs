//! Ideals `nℤ` of the integers, decided from the factorization of `n` and
//! cross-checked against the zero ideal of `ℤ/n`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::caps::Caps;
use crate::classify::{classify, ClassificationReport, Flags, Orders, RadicalShape};
use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealLattice};
use crate::ring::{is_prime, Ring, RingDescriptor};

/// Largest integer factored by trial division; larger values must be given
/// in factored form, with each prime at most this bound.
pub const MAX_INPUT: u64 = 1_000_000_000_000;

fn too_large(n: u64) -> Error {
    Error::CapExceeded {
        what: "integer to factor",
        size: n,
        cap: MAX_INPUT,
    }
}

/// A non-negative integer as `0` or a product of prime powers; the empty
/// product is `1`, the generator of the improper ideal `ℤ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FactoredInteger {
    Zero,
    Factors(Vec<(u64, u32)>),
}

impl FactoredInteger {
    pub fn one() -> FactoredInteger {
        FactoredInteger::Factors(Vec::new())
    }

    /// Factors `n` by trial division.
    pub fn new(n: u64) -> Result<FactoredInteger> {
        if n > MAX_INPUT {
            return Err(too_large(n));
        }
        if n == 0 {
            return Ok(FactoredInteger::Zero);
        }
        let mut rest = n;
        let mut pairs = Vec::new();
        let mut p = 2;
        while p * p <= rest {
            if rest.is_multiple_of(p) {
                let mut a = 0;
                while rest.is_multiple_of(p) {
                    rest /= p;
                    a += 1;
                }
                pairs.push((p, a));
            }
            p += 1;
        }
        if rest > 1 {
            pairs.push((rest, 1));
        }
        Ok(FactoredInteger::Factors(pairs))
    }

    /// Builds `∏ p^a` from explicit pairs, checking that each `p` is prime.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u32)>) -> Result<FactoredInteger> {
        let mut map: BTreeMap<u64, u32> = BTreeMap::new();
        for (p, a) in pairs {
            if !is_prime(p) {
                return Err(Error::NotAPrime(p));
            }
            if a > 0 {
                *map.entry(p).or_default() += a;
            }
        }
        Ok(FactoredInteger::Factors(map.into_iter().collect()))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, FactoredInteger::Zero)
    }

    pub fn is_one(&self) -> bool {
        matches!(self, FactoredInteger::Factors(f) if f.is_empty())
    }

    /// Prime-exponent pairs; empty for `0` and `1`.
    pub fn pairs(&self) -> &[(u64, u32)] {
        match self {
            FactoredInteger::Zero => &[],
            FactoredInteger::Factors(f) => f,
        }
    }

    /// The integer itself, or `None` on `u64` overflow.
    pub fn value(&self) -> Option<u64> {
        match self {
            FactoredInteger::Zero => Some(0),
            FactoredInteger::Factors(f) => f
                .iter()
                .try_fold(1u64, |acc, &(p, a)| acc.checked_mul(p.checked_pow(a)?)),
        }
    }

    fn combine(&self, other: &Self, op: impl Fn(u32, u32) -> u32) -> FactoredInteger {
        let mut map: BTreeMap<u64, u32> = BTreeMap::new();
        for &(p, a) in self.pairs() {
            map.insert(p, op(a, 0));
        }
        for &(p, b) in other.pairs() {
            let a = self.pairs().iter().find(|x| x.0 == p).map_or(0, |x| x.1);
            map.insert(p, op(a, b));
        }
        FactoredInteger::Factors(map.into_iter().filter(|&(_, a)| a > 0).collect())
    }

    /// `mℤ ∩ nℤ = lcm(m, n)ℤ`.
    pub fn intersect(&self, other: &Self) -> FactoredInteger {
        if self.is_zero() || other.is_zero() {
            return FactoredInteger::Zero;
        }
        self.combine(other, u32::max)
    }

    /// `mℤ · nℤ = mnℤ`.
    pub fn product(&self, other: &Self) -> FactoredInteger {
        if self.is_zero() || other.is_zero() {
            return FactoredInteger::Zero;
        }
        self.combine(other, |a, b| a + b)
    }

    /// `√(nℤ)`: the squarefree part.
    pub fn radical(&self) -> FactoredInteger {
        match self {
            FactoredInteger::Zero => FactoredInteger::Zero,
            FactoredInteger::Factors(f) => {
                FactoredInteger::Factors(f.iter().map(|&(p, _)| (p, 1)).collect())
            }
        }
    }

    /// `(mℤ : nℤ)`.
    pub fn colon(&self, other: &Self) -> FactoredInteger {
        match (self, other) {
            (_, FactoredInteger::Zero) => FactoredInteger::one(),
            (FactoredInteger::Zero, _) => FactoredInteger::Zero,
            _ => self.combine(other, |a, b| a.saturating_sub(b)),
        }
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactoredInteger::Zero => write!(f, "0"),
            FactoredInteger::Factors(pairs) if pairs.is_empty() => write!(f, "1"),
            FactoredInteger::Factors(pairs) => {
                let parts: Vec<String> = pairs
                    .iter()
                    .map(|&(p, a)| if a == 1 { p.to_string() } else { format!("{p}^{a}") })
                    .collect();
                write!(f, "{}", parts.join("*"))
            }
        }
    }
}

/// Accepts a decimal integer or an explicit factorization such as `2^2*3`.
impl FromStr for FactoredInteger {
    type Err = Error;

    fn from_str(s: &str) -> Result<FactoredInteger> {
        let text = s.trim();
        let offset = s.len() - s.trim_start().len();
        let number = |part: &str, at: usize| -> Result<u64> {
            let part_trim = part.trim();
            if part_trim.is_empty() || !part_trim.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(s, at, "expected a number"));
            }
            part_trim
                .parse()
                .map_err(|_| Error::parse(s, at, "number too large"))
        };
        if !text.contains(['^', '*']) {
            let digits = !text.is_empty() && text.bytes().all(|b| b.is_ascii_digit());
            return match text.parse::<u64>() {
                Ok(n) => FactoredInteger::new(n),
                Err(_) if digits => Err(too_large(u64::MAX)),
                Err(_) => FactoredInteger::new(number(text, offset)?),
            };
        }
        let mut pairs = Vec::new();
        let mut at = offset;
        for factor in text.split('*') {
            let (p, a) = match factor.split_once('^') {
                Some((p, a)) => {
                    let e = number(a, at + p.len() + 1)?;
                    let e = u32::try_from(e).map_err(|_| Error::parse(s, at, "exponent too large"))?;
                    (number(p, at)?, e)
                }
                None => (number(factor, at)?, 1),
            };
            if p == 0 {
                return Err(Error::parse(s, at, "0 cannot appear in a factorization"));
            }
            if p > MAX_INPUT {
                return Err(too_large(p));
            }
            if p > 1 {
                pairs.push((p, a));
            }
            at += factor.len() + 1;
        }
        let f = FactoredInteger::from_pairs(pairs)?;
        if f.value().is_none() {
            return Err(Error::InvalidArgument(format!("{s} overflows u64")));
        }
        Ok(f)
    }
}

/// How the closed forms were checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleCheck {
    /// The zero ideal of `ℤ/n` produced the same flags and orders.
    Agreed { modulus: u64 },
    /// `n` is above the cubic-scan cap.
    Skipped { modulus: u64, cap: u64 },
    /// `0ℤ` has no finite quotient to compare against.
    Analytic,
}

/// Flags compared against the oracle; a divided radical is a property of
/// the ambient ring and does not survive passage to `ℤ/n`.
const ORACLE_FLAGS: [&str; 11] = [
    "proper",
    "prime",
    "maximal",
    "primary",
    "uniformlyPrimary",
    "twoAbsorbing",
    "twoAbsorbingPrimary",
    "uniformlyTwoAbsorbingPrimary",
    "noetherStrongly2AP",
    "special",
    "irreducible",
];

/// Classifies `nℤ` from its factorization and, when `n` is within the
/// cubic cap, confirms every flag and order on the zero ideal of `ℤ/n`.
pub fn classify_z(n: &FactoredInteger, caps: &Caps) -> Result<(ClassificationReport, OracleCheck)> {
    let report = closed_form(n)?;
    let value = n.value().expect("closed_form rejects overflow");
    if n.is_zero() {
        return Ok((report, OracleCheck::Analytic));
    }
    if value > caps.cubic as u64 || value > caps.ring as u64 {
        let cap = (caps.cubic as u64).min(caps.ring as u64);
        return Ok((report, OracleCheck::Skipped { modulus: value, cap }));
    }
    let oracle = bridge(value, 1, caps)?;
    compare(value, &report, &oracle)?;
    Ok((report, OracleCheck::Agreed { modulus: value }))
}

/// Classifies the ideal `(n)` of `ℤ/kn`, the image of `nℤ`.
pub fn bridge(n: u64, k: u64, caps: &Caps) -> Result<ClassificationReport> {
    let m = n
        .checked_mul(k)
        .filter(|&m| m <= u32::MAX as u64)
        .ok_or_else(|| Error::InvalidArgument(format!("modulus {n}*{k} too large")))?;
    caps.check_ring(m)?;
    let ring = Arc::new(Ring::build_with(&RingDescriptor::Modular(m as u32), caps)?);
    let lattice = IdealLattice::enumerate_with(&ring, caps)?;
    let ideal = Ideal::principal(&ring, (n % m) as u32);
    classify(&ideal, &lattice, caps)
}

fn compare(n: u64, closed: &ClassificationReport, oracle: &ClassificationReport) -> Result<()> {
    let disagree = |field: &str, c: String, o: String| Error::OracleDisagreement {
        n,
        field: field.to_string(),
        closed_form: c,
        oracle: o,
    };
    for name in ORACLE_FLAGS {
        let (c, o) = (closed.flags.get(name), oracle.flags.get(name));
        if c != o {
            let w = oracle
                .witnesses
                .get(name)
                .map_or(String::new(), |w| format!(" (witness {w:?})"));
            return Err(disagree(name, format!("{c:?}"), format!("{o:?}{w}")));
        }
    }
    let pairs = [
        ("ord", closed.orders.ord, oracle.orders.ord),
        ("twoOrd", closed.orders.two_ord, oracle.orders.two_ord),
        ("twoExp", closed.orders.two_exp, oracle.orders.two_exp),
        ("radicalExponent", closed.orders.radical_exponent, oracle.orders.radical_exponent),
    ];
    for (name, c, o) in pairs {
        if c != o {
            return Err(disagree(name, format!("{c:?}"), format!("{o:?}")));
        }
    }
    let kind = |s: &RadicalShape| match s {
        RadicalShape::Prime(_) => "Prime",
        RadicalShape::TwoPrimes(..) => "TwoPrimes",
        RadicalShape::Other => "Other",
    };
    if kind(&closed.radical_shape) != kind(&oracle.radical_shape) {
        return Err(disagree(
            "radicalShape",
            closed.radical_shape.to_string(),
            oracle.radical_shape.to_string(),
        ));
    }
    Ok(())
}

fn closed_form(n: &FactoredInteger) -> Result<ClassificationReport> {
    if n.is_one() {
        return Err(Error::ImproperIdeal);
    }
    let value = n
        .value()
        .ok_or_else(|| Error::InvalidArgument(format!("{n} overflows u64")))?;
    let base = |flags: Flags, orders: Orders, shape: RadicalShape| ClassificationReport {
        ring: "Z".to_string(),
        generators: vec![value],
        element_count: None,
        flags,
        orders,
        witnesses: BTreeMap::new(),
        radical_shape: shape,
    };
    if n.is_zero() {
        let flags = Flags {
            proper: true,
            prime: true,
            maximal: false,
            primary: true,
            uniformly_primary: true,
            two_absorbing: true,
            two_absorbing_primary: true,
            uniformly_two_absorbing_primary: true,
            noether_strongly_2ap: true,
            special: true,
            irreducible: true,
            divided_prime_radical: true,
        };
        let orders = Orders {
            ord: Some(1),
            two_ord: Some(1),
            two_exp: Some(1),
            radical_exponent: Some(1),
        };
        let mut r = base(flags, orders, RadicalShape::Prime(vec![0]));
        // 2Z + 0 = 2Z
        r.witnesses.insert("maximal".into(), vec![2]);
        return Ok(r);
    }

    let f = n.pairs();
    let k = f.len();
    let (p, a) = f[0];
    let max_exp = f.iter().map(|x| x.1).max().expect("n >= 2");
    let squarefree_two = k == 2 && max_exp == 1;
    let prime = k == 1 && a == 1;
    let primary = k == 1;
    let two_abs = (k == 1 && a <= 2) || squarefree_two;
    let two_ap = k <= 2;
    let special = k == 1 || squarefree_two;
    let flags = Flags {
        proper: true,
        prime,
        maximal: prime,
        primary,
        uniformly_primary: primary,
        two_absorbing: two_abs,
        two_absorbing_primary: two_ap,
        uniformly_two_absorbing_primary: two_ap,
        noether_strongly_2ap: two_ap,
        special,
        irreducible: primary,
        divided_prime_radical: false,
    };
    let orders = Orders {
        ord: primary.then_some(a),
        two_ord: match k {
            1 => Some(1),
            2 => Some(max_exp),
            _ => None,
        },
        two_exp: two_ap.then_some(max_exp),
        radical_exponent: Some(max_exp),
    };
    let shape = match f {
        [(p, _)] => RadicalShape::Prime(vec![*p]),
        [(p, _), (q, _)] => RadicalShape::TwoPrimes(vec![*p], vec![*q]),
        _ => RadicalShape::Other,
    };
    let mut r = base(flags, orders, shape);
    let w = &mut r.witnesses;
    let head = p.pow(a);
    let rest = value / head;
    if !prime {
        w.insert("prime".into(), vec![p, value / p]);
        w.insert("maximal".into(), vec![p]);
    }
    if !primary {
        w.insert("primary".into(), vec![head, rest]);
        w.insert("uniformlyPrimary".into(), vec![head, rest]);
        w.insert("irreducible".into(), vec![head, rest]);
    }
    if !two_abs {
        let t = match f {
            [_] => vec![p, p, p.pow(a - 2)],
            [_, (q, b)] if a >= 2 => vec![p, p.pow(a - 1), q.pow(*b)],
            [_, (q, b)] => vec![*q, q.pow(b - 1), head],
            [_, (q, b), ..] => vec![head, q.pow(*b), rest / q.pow(*b)],
            [] => unreachable!("n >= 2"),
        };
        w.insert("twoAbsorbing".into(), t);
    }
    if !two_ap {
        let (q, b) = f[1];
        let t = vec![head, q.pow(b), rest / q.pow(b)];
        for name in ["twoAbsorbingPrimary", "uniformlyTwoAbsorbingPrimary", "noetherStrongly2AP"] {
            w.insert(name.into(), t.clone());
        }
    }
    if !special {
        let t = match f {
            [_, (q, b)] if a >= 2 => vec![p, q.pow(*b), p.pow(a - 1)],
            [_, (q, b)] => vec![*q, p, q.pow(b - 1)],
            _ => w["twoAbsorbingPrimary"].clone(),
        };
        w.insert("special".into(), t);
    }
    let divided = if k == 1 {
        vec![if p == 2 { 3 } else { 2 }]
    } else {
        let rad = n.radical().value().expect("divides n");
        vec![p, rad / p]
    };
    w.insert("dividedPrimeRadical".into(), divided);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> FactoredInteger {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(f("12").to_string(), "2^2*3");
        assert_eq!(f("2^2*3"), f("12"));
        assert_eq!(f("3*2*2"), f("12"));
        assert_eq!(f("0"), FactoredInteger::Zero);
        assert!(f("1").is_one());
        assert!(matches!("4^2".parse::<FactoredInteger>(), Err(Error::NotAPrime(4))));
        assert!(matches!("2^".parse::<FactoredInteger>(), Err(Error::Parse { .. })));
        assert!("1000000000001".parse::<FactoredInteger>().unwrap_err().is_cap());
        assert!("123456789012345678901234".parse::<FactoredInteger>().unwrap_err().is_cap());
        assert_eq!(f("2^50*3").value(), Some(3 << 50));
        assert!("2^64".parse::<FactoredInteger>().is_err());
        assert_eq!(f("999999999989").pairs(), &[(999999999989, 1)]);
    }

    #[test]
    fn ideal_operations() {
        assert_eq!(f("3").intersect(&f("4")), f("12"));
        assert_eq!(f("12").radical(), f("6"));
        assert_eq!(f("12").colon(&f("2")), f("6"));
        assert_eq!(f("12").product(&f("18")), f("216"));
        assert_eq!(f("0").colon(&f("5")), FactoredInteger::Zero);
        assert!(f("7").colon(&f("0")).is_one());
        assert!(f("4").colon(&f("8")).is_one());
    }

    #[test]
    fn closed_forms_on_named_examples() {
        let caps = Caps::default();
        let (r, check) = classify_z(&f("12"), &caps).unwrap();
        assert_eq!(check, OracleCheck::Agreed { modulus: 12 });
        assert!(r.flags.two_absorbing_primary && !r.flags.two_absorbing && !r.flags.primary);
        assert!(!r.flags.special);
        assert_eq!((r.orders.two_exp, r.orders.two_ord), (Some(2), Some(2)));

        let (r, _) = classify_z(&f("60"), &caps).unwrap();
        assert!(!r.flags.two_absorbing_primary);

        let (r, _) = classify_z(&f("6"), &caps).unwrap();
        assert!(r.flags.two_absorbing && r.flags.special);
        assert_eq!(r.orders.two_ord, Some(1));

        let (r, check) = classify_z(&FactoredInteger::Zero, &caps).unwrap();
        assert_eq!(check, OracleCheck::Analytic);
        assert!(r.flags.prime && !r.flags.maximal);
        assert!(matches!(classify_z(&f("1"), &caps), Err(Error::ImproperIdeal)));
    }

    #[test]
    fn oracle_skipped_above_cap() {
        let (_, check) = classify_z(&f("2^20"), &Caps::default()).unwrap();
        assert!(matches!(check, OracleCheck::Skipped { .. }));
    }
}
