use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::classify::Analysis;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealLattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Flags {
    pub proper: bool,
    pub prime: bool,
    pub maximal: bool,
    pub primary: bool,
    pub uniformly_primary: bool,
    pub two_absorbing: bool,
    pub two_absorbing_primary: bool,
    pub uniformly_two_absorbing_primary: bool,
    #[serde(rename = "noetherStrongly2AP")]
    pub noether_strongly_2ap: bool,
    pub special: bool,
    pub irreducible: bool,
    pub divided_prime_radical: bool,
}

impl Flags {
    /// `(serialized name, value)` in declaration order.
    pub fn entries(&self) -> [(&'static str, bool); 12] {
        [
            ("proper", self.proper),
            ("prime", self.prime),
            ("maximal", self.maximal),
            ("primary", self.primary),
            ("uniformlyPrimary", self.uniformly_primary),
            ("twoAbsorbing", self.two_absorbing),
            ("twoAbsorbingPrimary", self.two_absorbing_primary),
            ("uniformlyTwoAbsorbingPrimary", self.uniformly_two_absorbing_primary),
            ("noetherStrongly2AP", self.noether_strongly_2ap),
            ("special", self.special),
            ("irreducible", self.irreducible),
            ("dividedPrimeRadical", self.divided_prime_radical),
        ]
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.entries().iter().find(|(k, _)| *k == name).map(|&(_, v)| v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Orders {
    pub ord: Option<u32>,
    pub two_ord: Option<u32>,
    /// 2-𝔢, reported only for 2-absorbing primary ideals.
    pub two_exp: Option<u32>,
    /// Least `n` with `(√Q)^n ⊆ Q`, reported for every ideal.
    pub radical_exponent: Option<u32>,
}

/// Minimal primes over `Q`, each listed by generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum RadicalShape {
    Prime(Vec<u64>),
    TwoPrimes(Vec<u64>, Vec<u64>),
    Other,
}

impl RadicalShape {
    pub fn is_prime_or_two(&self) -> bool {
        !matches!(self, RadicalShape::Other)
    }
}

fn write_gens(f: &mut fmt::Formatter<'_>, gens: &[u64]) -> fmt::Result {
    if gens.len() == 1 {
        return write!(f, "({})", gens[0]);
    }
    let gs: Vec<String> = gens.iter().map(u64::to_string).collect();
    write!(f, "[{}]", gs.join(","))
}

impl fmt::Display for RadicalShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadicalShape::Prime(p) => {
                write!(f, "Prime(")?;
                write_gens(f, p)?;
                write!(f, ")")
            }
            RadicalShape::TwoPrimes(p, q) => {
                write!(f, "TwoPrimes(")?;
                write_gens(f, p)?;
                write!(f, ",")?;
                write_gens(f, q)?;
                write!(f, ")")
            }
            RadicalShape::Other => write!(f, "Other"),
        }
    }
}

impl FromStr for RadicalShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<RadicalShape> {
        if s == "Other" {
            return Ok(RadicalShape::Other);
        }
        let (tag, rest) = s
            .split_once('(')
            .ok_or_else(|| Error::parse(s, 0, "expected Prime(..), TwoPrimes(..) or Other"))?;
        let body = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::parse(s, s.len(), "expected `)`"))?;
        let mut lists = Vec::new();
        let mut i = 0;
        let bytes = body.as_bytes();
        while i < bytes.len() {
            let close = match bytes[i] {
                b'(' => b')',
                b'[' => b']',
                b',' if !lists.is_empty() => {
                    i += 1;
                    continue;
                }
                _ => return Err(Error::parse(s, tag.len() + 1 + i, "expected `(` or `[`")),
            };
            let end = body[i..]
                .bytes()
                .position(|b| b == close)
                .ok_or_else(|| Error::parse(s, tag.len() + 1 + i, "unclosed generator list"))?;
            let gens = body[i + 1..i + end]
                .split(',')
                .map(|g| g.trim().parse::<u64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::parse(s, tag.len() + 2 + i, "bad generator"))?;
            lists.push(gens);
            i += end + 1;
        }
        match (tag, lists.len()) {
            ("Prime", 1) => Ok(RadicalShape::Prime(lists.remove(0))),
            ("TwoPrimes", 2) => {
                let q = lists.pop().expect("two lists");
                Ok(RadicalShape::TwoPrimes(lists.pop().expect("two lists"), q))
            }
            _ => Err(Error::parse(s, 0, format!("bad radical shape `{s}`"))),
        }
    }
}

impl From<RadicalShape> for String {
    fn from(r: RadicalShape) -> String {
        r.to_string()
    }
}

impl TryFrom<String> for RadicalShape {
    type Error = Error;

    fn try_from(s: String) -> Result<RadicalShape> {
        s.parse()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassificationReport {
    pub ring: String,
    pub generators: Vec<u64>,
    /// Number of elements of the ideal, absent for ideals of the integers.
    pub element_count: Option<u64>,
    pub flags: Flags,
    pub orders: Orders,
    /// Least witness for every false flag, keyed by flag name.
    pub witnesses: BTreeMap<String, Vec<u64>>,
    pub radical_shape: RadicalShape,
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<ClassificationReport> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Decides every predicate for a proper ideal of a finite ring.
pub fn classify(q: &Ideal, lattice: &IdealLattice, caps: &Caps) -> Result<ClassificationReport> {
    let analysis = Analysis::new(q)?;
    classify_analysis(&analysis, lattice, caps)
}

pub fn classify_analysis(
    a: &Analysis,
    lattice: &IdealLattice,
    caps: &Caps,
) -> Result<ClassificationReport> {
    let ring = a.ring();
    caps.check_cubic(ring.size())?;
    let idx = lattice.index_of(a.ideal())?;

    let mut witnesses = BTreeMap::new();
    let mut flag = |name: &str, w: Option<&Vec<u32>>| -> bool {
        match w {
            Some(w) => {
                witnesses.insert(name.to_string(), w.iter().map(|&x| x as u64).collect());
                false
            }
            None => true,
        }
    };
    let prime = flag("prime", a.prime_witness());
    let maximal = flag("maximal", a.maximal_witness());
    let primary = flag("primary", a.primary_witness());
    let uniformly_primary = flag("uniformlyPrimary", a.primary_witness());
    let two_absorbing = flag("twoAbsorbing", a.two_absorbing_witness());
    let two_ap = flag("twoAbsorbingPrimary", a.two_ap_witness());
    let u2ap = flag("uniformlyTwoAbsorbingPrimary", a.two_ap_witness());
    let noether = flag("noetherStrongly2AP", a.two_ap_witness());
    let special = flag("special", a.special_witness());
    let irreducible = flag("irreducible", a.irreducible_witness());
    let divided = flag("dividedPrimeRadical", a.divided_witness());

    let gens = |i: usize| -> Vec<u64> {
        lattice.get(i).generators().iter().map(|&g| g as u64).collect()
    };
    let mins = lattice.minimal_primes_over(idx);
    let radical_shape = match mins.as_slice() {
        [p] => RadicalShape::Prime(gens(*p)),
        [p, q] => RadicalShape::TwoPrimes(gens(*p), gens(*q)),
        _ => RadicalShape::Other,
    };

    Ok(ClassificationReport {
        ring: ring.to_string(),
        generators: a.ideal().generators().iter().map(|&g| g as u64).collect(),
        element_count: Some(a.ideal().len() as u64),
        flags: Flags {
            proper: true,
            prime,
            maximal,
            primary,
            uniformly_primary,
            two_absorbing,
            two_absorbing_primary: two_ap,
            uniformly_two_absorbing_primary: u2ap,
            noether_strongly_2ap: noether,
            special,
            irreducible,
            divided_prime_radical: divided,
        },
        orders: Orders {
            ord: a.ord(),
            two_ord: a.two_ord(),
            two_exp: a.two_exp(),
            radical_exponent: Some(a.radical_exponent()),
        },
        witnesses,
        radical_shape,
    })
}

/// Whether the prime `p` satisfies `p ⊂ Rx` for every `x ∉ p`.
pub fn is_divided_prime(p: &Ideal) -> Result<bool> {
    let a = Analysis::new(p).map_err(|_| Error::NotPrime)?;
    if a.prime_witness().is_some() {
        return Err(Error::NotPrime);
    }
    Ok(a.divided_witness().is_none())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::ring::Ring;

    fn report(ring: &str, gens: &[u64]) -> ClassificationReport {
        let r = Arc::new(Ring::build(&ring.parse().unwrap()).unwrap());
        let l = IdealLattice::enumerate(&r).unwrap();
        classify(&Ideal::generate(&r, gens).unwrap(), &l, &Caps::default()).unwrap()
    }

    #[test]
    fn zero_of_z12() {
        let r = report("zn:12", &[0]);
        let f = r.flags;
        assert!(f.two_absorbing_primary && f.uniformly_two_absorbing_primary);
        assert!(!f.two_absorbing && !f.primary && !f.special);
        assert_eq!(r.orders.two_ord, Some(2));
        assert_eq!(r.orders.two_exp, Some(2));
        assert_eq!(r.orders.ord, None);
        assert_eq!(r.radical_shape, RadicalShape::TwoPrimes(vec![3], vec![2]));
        assert_eq!(r.witnesses["twoAbsorbing"], vec![2, 2, 3]);
    }

    #[test]
    fn zero_of_z9_and_fields() {
        let r = report("zn:9", &[0]);
        assert!(r.flags.primary && r.flags.special);
        assert_eq!(r.orders.ord, Some(2));
        assert_eq!(r.radical_shape, RadicalShape::Prime(vec![3]));

        for ring in ["zn:7", "polyq:2:1,1,1"] {
            let r = report(ring, &[0]);
            assert!(r.flags.entries().iter().all(|&(_, v)| v), "{ring}");
            assert!(r.witnesses.is_empty());
            let o = r.orders;
            assert_eq!([o.ord, o.two_ord, o.two_exp, o.radical_exponent], [Some(1); 4]);
        }
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        for (ring, gens) in [("zn:12", vec![0]), ("zn:60", vec![0]), ("idz:(zn:2)^2", vec![0])] {
            let text = report(ring, &gens).to_json();
            let back = ClassificationReport::from_json(&text).unwrap();
            assert_eq!(back.to_json(), text);
        }
        let text = report("zn:12", &[0]).to_json();
        assert!(text.contains("\"noetherStrongly2AP\": true"));
        assert!(text.contains("\"radicalShape\": \"TwoPrimes((3),(2))\""));
    }

    #[test]
    fn radical_shape_parses() {
        for s in ["Prime((2))", "TwoPrimes([1,2],(3))", "Other"] {
            assert_eq!(s.parse::<RadicalShape>().unwrap().to_string(), s);
        }
        assert!("Prime(2)".parse::<RadicalShape>().is_err());
        assert!("TwoPrimes((2))".parse::<RadicalShape>().is_err());
    }

    #[test]
    fn divided_primes() {
        let r = Arc::new(Ring::build(&"zn:8".parse().unwrap()).unwrap());
        assert!(is_divided_prime(&Ideal::principal(&r, 2)).unwrap());
        assert!(matches!(is_divided_prime(&Ideal::principal(&r, 4)), Err(Error::NotPrime)));
        let r = Arc::new(Ring::build(&"prod:(zn:2,zn:2)".parse().unwrap()).unwrap());
        // Z2 x (0) = {0, 2}
        assert!(!is_divided_prime(&Ideal::principal(&r, 2)).unwrap());
    }

    #[test]
    fn idealization_is_noether_strongly_primary() {
        let r = report("idz:(zn:2)^2", &[0]);
        assert!(r.flags.primary && r.flags.noether_strongly_2ap);
        assert_eq!(r.orders.ord, Some(2));
        assert_eq!(r.orders.two_exp, Some(2));
    }
}
