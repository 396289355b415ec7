//! Ring descriptors and their text grammar.
//!
//! ```text
//! zn:<n>                         Z/nZ
//! prod:(<d>,<d>,...)             direct product
//! polyq:<p>:<c0,c1,...,1>        F_p[X]/(f), f monic, low degree first
//! idz:(<d>)^<rank>               idealization d(+)d^rank
//! table:@<path>                  JSON tables: size, add, mul, zero, one
//! ```
//!
//! Corpus specs reuse the grammar with inclusive ranges in integer slots,
//! e.g. `prod:(zn:2..4,zn:2..4)` or `idz:(zn:2..8)^1..2`.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Modular(u32),
    Product(Vec<RingDescriptor>),
    PolyQuotient { p: u32, modulus: Vec<u32> },
    Idealization { base: Box<RingDescriptor>, rank: u32 },
    Table(TableSpec),
}

/// Explicit Cayley tables, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableSpec {
    #[serde(skip)]
    pub source: Option<String>,
    pub size: u32,
    pub add: Vec<u32>,
    pub mul: Vec<u32>,
    pub zero: u32,
    pub one: u32,
}

impl TableSpec {
    pub fn load(path: impl AsRef<Path>) -> Result<TableSpec> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        let mut spec: TableSpec = serde_json::from_str(&text)?;
        spec.source = Some(path.display().to_string());
        Ok(spec)
    }
}

impl RingDescriptor {
    /// Number of elements, or `None` on overflow.
    pub fn size(&self) -> Option<u64> {
        match self {
            RingDescriptor::Modular(n) => Some(*n as u64),
            RingDescriptor::Product(fs) => fs
                .iter()
                .try_fold(1u64, |acc, f| acc.checked_mul(f.size()?)),
            RingDescriptor::PolyQuotient { p, modulus } => {
                (*p as u64).checked_pow(modulus.len().saturating_sub(1) as u32)
            }
            RingDescriptor::Idealization { base, rank } => base.size()?.checked_pow(rank + 1),
            RingDescriptor::Table(t) => Some(t.size as u64),
        }
    }

    pub fn is_modular(&self) -> Option<u32> {
        match self {
            RingDescriptor::Modular(n) => Some(*n),
            _ => None,
        }
    }

    pub fn product(factors: impl IntoIterator<Item = RingDescriptor>) -> RingDescriptor {
        RingDescriptor::Product(factors.into_iter().collect())
    }

    pub fn idealization(base: RingDescriptor, rank: u32) -> RingDescriptor {
        RingDescriptor::Idealization {
            base: Box::new(base),
            rank,
        }
    }

    /// Parses a corpus-style spec: a comma-separated list of descriptors,
    /// any integer slot of which may be an inclusive range `a..b`.
    pub fn parse_many(input: &str) -> Result<Vec<RingDescriptor>> {
        let mut p = Parser::new(input, true);
        let mut out = Vec::new();
        loop {
            out.extend(p.descriptor()?);
            p.skip_ws();
            if p.eat(',') {
                continue;
            }
            if !p.at_end() {
                return Err(p.error("expected `,` or end of input"));
            }
            return Ok(out);
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = Error;

    fn from_str(input: &str) -> Result<RingDescriptor> {
        let mut p = Parser::new(input, false);
        let mut ds = p.descriptor()?;
        p.skip_ws();
        if !p.at_end() {
            return Err(p.error("trailing input"));
        }
        debug_assert_eq!(ds.len(), 1);
        Ok(ds.remove(0))
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Modular(n) => write!(f, "zn:{n}"),
            RingDescriptor::Product(fs) => {
                write!(f, "prod:(")?;
                for (i, d) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{d}")?;
                }
                write!(f, ")")
            }
            RingDescriptor::PolyQuotient { p, modulus } => {
                let cs: Vec<String> = modulus.iter().map(u32::to_string).collect();
                write!(f, "polyq:{p}:{}", cs.join(","))
            }
            RingDescriptor::Idealization { base, rank } => write!(f, "idz:({base})^{rank}"),
            RingDescriptor::Table(t) => match &t.source {
                Some(path) => write!(f, "table:@{path}"),
                None => write!(f, "table:@<inline:{}>", t.size),
            },
        }
    }
}

struct Parser<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
    ranges: bool,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str, ranges: bool) -> Self {
        Parser {
            input,
            bytes: input.as_bytes(),
            pos: 0,
            ranges,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.input, self.pos, message)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c as u8) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.input[self.pos..].starts_with(kw) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        self.input[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(self.input, start, "number too large"))
    }

    /// A number, or an inclusive range when ranges are enabled.
    fn numbers(&mut self) -> Result<Vec<u32>> {
        let lo = self.number()?;
        if self.input[self.pos..].starts_with("..") {
            if !self.ranges {
                return Err(self.error("ranges are only allowed in corpus specs"));
            }
            self.pos += 2;
            let hi = self.number()?;
            if hi < lo {
                return Err(self.error(format!("empty range {lo}..{hi}")));
            }
            return Ok((lo..=hi).collect());
        }
        Ok(vec![lo])
    }

    fn descriptor(&mut self) -> Result<Vec<RingDescriptor>> {
        self.skip_ws();
        let start = self.pos;
        if self.keyword("zn:") {
            return Ok(self
                .numbers()?
                .into_iter()
                .map(RingDescriptor::Modular)
                .collect());
        }
        if self.keyword("prod:") {
            self.expect('(')?;
            let mut factors = vec![self.descriptor()?];
            while self.eat(',') {
                factors.push(self.descriptor()?);
            }
            self.expect(')')?;
            let mut out: Vec<Vec<RingDescriptor>> = vec![Vec::new()];
            for options in factors {
                out = out
                    .into_iter()
                    .flat_map(|prefix| {
                        options.iter().map(move |d| {
                            let mut v = prefix.clone();
                            v.push(d.clone());
                            v
                        })
                    })
                    .collect();
            }
            return Ok(out.into_iter().map(RingDescriptor::Product).collect());
        }
        if self.keyword("polyq:") {
            let p = self.number()?;
            self.expect(':')?;
            let mut modulus = vec![self.number()?];
            loop {
                let before = self.pos;
                if !self.eat(',') {
                    break;
                }
                // a comma followed by a non-digit belongs to an enclosing list
                self.skip_ws();
                if !matches!(self.peek(), Some(b'0'..=b'9')) {
                    self.pos = before;
                    break;
                }
                modulus.push(self.number()?);
            }
            return Ok(vec![RingDescriptor::PolyQuotient { p, modulus }]);
        }
        if self.keyword("idz:") {
            self.expect('(')?;
            let bases = self.descriptor()?;
            self.expect(')')?;
            self.expect('^')?;
            let ranks = self.numbers()?;
            let mut out = Vec::new();
            for b in &bases {
                for &r in &ranks {
                    out.push(RingDescriptor::idealization(b.clone(), r));
                }
            }
            return Ok(out);
        }
        if self.keyword("table:@") {
            let path_start = self.pos;
            while !matches!(self.peek(), None | Some(b',' | b')')) {
                self.pos += 1;
            }
            let path = self.input[path_start..self.pos].trim();
            if path.is_empty() {
                return Err(self.error("expected a table path"));
            }
            let spec = TableSpec::load(path)?;
            return Ok(vec![RingDescriptor::Table(spec)]);
        }
        self.pos = start;
        Err(self.error("expected one of zn:, prod:, polyq:, idz:, table:@"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trips() {
        for s in [
            "zn:12",
            "prod:(zn:2,zn:3)",
            "polyq:2:1,1,1",
            "idz:(zn:2)^2",
            "prod:(polyq:3:1,0,1,zn:4)",
            "idz:(prod:(zn:2,zn:2))^1",
        ] {
            let d: RingDescriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
    }

    #[test]
    fn sizes() {
        let d: RingDescriptor = "idz:(zn:2)^2".parse().unwrap();
        assert_eq!(d.size(), Some(8));
        let d: RingDescriptor = "polyq:3:2,0,1".parse().unwrap();
        assert_eq!(d.size(), Some(9));
        let d: RingDescriptor = "prod:(zn:4,zn:6,zn:5)".parse().unwrap();
        assert_eq!(d.size(), Some(120));
    }

    #[test]
    fn corpus_ranges_expand() {
        assert_eq!(RingDescriptor::parse_many("zn:2..12").unwrap().len(), 11);
        let prods = RingDescriptor::parse_many("prod:(zn:2..4, zn:2..4)").unwrap();
        assert_eq!(prods.len(), 9);
        assert_eq!(prods[1].to_string(), "prod:(zn:2,zn:3)");
        assert_eq!(RingDescriptor::parse_many("idz:(zn:2)^1..2").unwrap().len(), 2);
        let mixed = RingDescriptor::parse_many("zn:5, polyq:2:1,1,1, zn:7").unwrap();
        assert_eq!(mixed.len(), 3);
    }

    #[test]
    fn ranges_rejected_in_single_descriptor() {
        let err = "zn:2..4".parse::<RingDescriptor>().unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 4, .. }), "{err}");
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = "prod:(zn:2;zn:3)".parse::<RingDescriptor>().unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 10, .. }), "{err}");
        assert!("ring:5".parse::<RingDescriptor>().is_err());
    }
}
