//! Boolean predicates over classification reports.
//!
//! ```text
//! expr    := and (("||" | "∨" | "or") and)*
//! and     := unary (("&&" | "∧" | "and") unary)*
//! unary   := ("!" | "¬" | "not") unary | atom
//! atom    := "(" expr ")" | "true" | "false" | flag | order cmp integer
//! cmp     := "==" | "!=" | "<" | "<=" | ">" | ">="
//! ```
//!
//! A comparison on an order the report leaves undefined is false.

use std::fmt;
use std::str::FromStr;

use crate::classify::ClassificationReport;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flag {
    Proper,
    Prime,
    Maximal,
    Primary,
    UniformlyPrimary,
    TwoAbsorbing,
    TwoAbsorbingPrimary,
    UniformlyTwoAbsorbingPrimary,
    NoetherStrongly2AP,
    Special,
    Irreducible,
    DividedPrimeRadical,
    /// The radical has one or two minimal primes.
    RadicalPrimeOrTwo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Ord,
    TwoOrd,
    TwoExp,
    RadicalExponent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(bool),
    Flag(Flag),
    Compare(Order, Cmp, u32),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

const FLAGS: &[(&str, Flag)] = &[
    ("proper", Flag::Proper),
    ("prime", Flag::Prime),
    ("maximal", Flag::Maximal),
    ("primary", Flag::Primary),
    ("uniformlyPrimary", Flag::UniformlyPrimary),
    ("uprimary", Flag::UniformlyPrimary),
    ("twoAbsorbing", Flag::TwoAbsorbing),
    ("2abs", Flag::TwoAbsorbing),
    ("twoabs", Flag::TwoAbsorbing),
    ("twoAbsorbingPrimary", Flag::TwoAbsorbingPrimary),
    ("2ap", Flag::TwoAbsorbingPrimary),
    ("tap", Flag::TwoAbsorbingPrimary),
    ("uniformlyTwoAbsorbingPrimary", Flag::UniformlyTwoAbsorbingPrimary),
    ("u2ap", Flag::UniformlyTwoAbsorbingPrimary),
    ("noetherStrongly2AP", Flag::NoetherStrongly2AP),
    ("noether", Flag::NoetherStrongly2AP),
    ("ns2ap", Flag::NoetherStrongly2AP),
    ("special", Flag::Special),
    ("irreducible", Flag::Irreducible),
    ("dividedPrimeRadical", Flag::DividedPrimeRadical),
    ("divided", Flag::DividedPrimeRadical),
    ("radicalPrimeOrTwo", Flag::RadicalPrimeOrTwo),
];

const ORDERS: &[(&str, Order)] = &[
    ("ord", Order::Ord),
    ("twoOrd", Order::TwoOrd),
    ("2ord", Order::TwoOrd),
    ("twoExp", Order::TwoExp),
    ("2e", Order::TwoExp),
    ("radicalExponent", Order::RadicalExponent),
];

fn lookup<T: Copy>(table: &[(&str, T)], name: &str) -> Option<T> {
    table
        .iter()
        .find(|(k, _)| k.eq_ignore_ascii_case(name))
        .map(|&(_, v)| v)
}

impl Flag {
    pub fn eval(self, r: &ClassificationReport) -> bool {
        let f = &r.flags;
        match self {
            Flag::Proper => f.proper,
            Flag::Prime => f.prime,
            Flag::Maximal => f.maximal,
            Flag::Primary => f.primary,
            Flag::UniformlyPrimary => f.uniformly_primary,
            Flag::TwoAbsorbing => f.two_absorbing,
            Flag::TwoAbsorbingPrimary => f.two_absorbing_primary,
            Flag::UniformlyTwoAbsorbingPrimary => f.uniformly_two_absorbing_primary,
            Flag::NoetherStrongly2AP => f.noether_strongly_2ap,
            Flag::Special => f.special,
            Flag::Irreducible => f.irreducible,
            Flag::DividedPrimeRadical => f.divided_prime_radical,
            Flag::RadicalPrimeOrTwo => r.radical_shape.is_prime_or_two(),
        }
    }

    fn name(self) -> &'static str {
        FLAGS.iter().find(|&&(_, f)| f == self).expect("named").0
    }
}

impl Order {
    pub fn eval(self, r: &ClassificationReport) -> Option<u32> {
        let o = &r.orders;
        match self {
            Order::Ord => o.ord,
            Order::TwoOrd => o.two_ord,
            Order::TwoExp => o.two_exp,
            Order::RadicalExponent => o.radical_exponent,
        }
    }

    fn name(self) -> &'static str {
        ORDERS.iter().find(|&&(_, o)| o == self).expect("named").0
    }
}

impl Cmp {
    fn holds(self, a: u32, b: u32) -> bool {
        match self {
            Cmp::Eq => a == b,
            Cmp::Ne => a != b,
            Cmp::Lt => a < b,
            Cmp::Le => a <= b,
            Cmp::Gt => a > b,
            Cmp::Ge => a >= b,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Cmp::Eq => "==",
            Cmp::Ne => "!=",
            Cmp::Lt => "<",
            Cmp::Le => "<=",
            Cmp::Gt => ">",
            Cmp::Ge => ">=",
        }
    }
}

impl Expr {
    pub fn parse(input: &str) -> Result<Expr> {
        let mut p = Parser { input, pos: 0 };
        let e = p.or()?;
        p.skip_ws();
        if p.pos < input.len() {
            return Err(p.error("unexpected input"));
        }
        Ok(e)
    }

    pub fn eval(&self, r: &ClassificationReport) -> bool {
        match self {
            Expr::Const(b) => *b,
            Expr::Flag(f) => f.eval(r),
            Expr::Compare(o, c, n) => o.eval(r).is_some_and(|v| c.holds(v, *n)),
            Expr::Not(e) => !e.eval(r),
            Expr::And(a, b) => a.eval(r) && b.eval(r),
            Expr::Or(a, b) => a.eval(r) || b.eval(r),
        }
    }
}

impl FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Expr> {
        Expr::parse(s)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(b) => write!(f, "{b}"),
            Expr::Flag(fl) => write!(f, "{}", fl.name()),
            Expr::Compare(o, c, n) => write!(f, "{} {} {n}", o.name(), c.symbol()),
            Expr::Not(e) => write!(f, "!{e}"),
            Expr::And(a, b) => write!(f, "({a} && {b})"),
            Expr::Or(a, b) => write!(f, "({a} || {b})"),
        }
    }
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.input[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.input.len() - trimmed.len();
    }

    fn error(&self, message: &str) -> Error {
        let pos = self.input[..self.pos].chars().count();
        Error::parse(self.input, pos, message)
    }

    /// Consumes the first of `tokens` present; word tokens must end at a
    /// word boundary.
    fn eat(&mut self, tokens: &[&str]) -> bool {
        self.skip_ws();
        for t in tokens {
            if let Some(after) = self.rest().strip_prefix(t) {
                let word = t.chars().all(|c| c.is_ascii_alphabetic());
                if word && after.starts_with(|c: char| c.is_alphanumeric() || c == '_') {
                    continue;
                }
                self.pos += t.len();
                return true;
            }
        }
        false
    }

    fn or(&mut self) -> Result<Expr> {
        let mut e = self.and()?;
        while self.eat(&["||", "∨", "or"]) {
            e = Expr::Or(Box::new(e), Box::new(self.and()?));
        }
        Ok(e)
    }

    fn and(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        while self.eat(&["&&", "∧", "and"]) {
            e = Expr::And(Box::new(e), Box::new(self.unary()?));
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr> {
        self.skip_ws();
        if !self.rest().starts_with("!=") && self.eat(&["!", "¬", "not"]) {
            return Ok(Expr::Not(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr> {
        self.skip_ws();
        if self.eat(&["("]) {
            let e = self.or()?;
            if !self.eat(&[")"]) {
                return Err(self.error("expected `)`"));
            }
            return Ok(e);
        }
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a flag, an order comparison, `true`, `false` or `(`"));
        }
        let word = &self.input[start..start + len];
        self.pos += len;
        match word {
            "true" => return Ok(Expr::Const(true)),
            "false" => return Ok(Expr::Const(false)),
            _ => {}
        }
        if let Some(f) = lookup(FLAGS, word) {
            return Ok(Expr::Flag(f));
        }
        if let Some(o) = lookup(ORDERS, word) {
            let cmp = self.cmp()?;
            return Ok(Expr::Compare(o, cmp, self.integer()?));
        }
        self.pos = start;
        Err(self.error(&format!("unknown name `{word}`")))
    }

    fn cmp(&mut self) -> Result<Cmp> {
        let table = [
            ("==", Cmp::Eq),
            ("!=", Cmp::Ne),
            ("<=", Cmp::Le),
            (">=", Cmp::Ge),
            ("<", Cmp::Lt),
            (">", Cmp::Gt),
            ("=", Cmp::Eq),
        ];
        self.skip_ws();
        for (t, c) in table {
            if self.rest().starts_with(t) {
                self.pos += t.len();
                return Ok(c);
            }
        }
        Err(self.error("expected a comparison operator after an order"))
    }

    fn integer(&mut self) -> Result<u32> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected an integer"));
        }
        let n = self.rest()[..len]
            .parse()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos += len;
        Ok(n)
    }
}

/// Renders a parse error with a caret under the offending column.
pub fn caret(err: &Error) -> Option<String> {
    match err {
        Error::Parse { input, pos, message } => Some(format!(
            "{input}\n{}^ {message}",
            " ".repeat(*pos)
        )),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_aliases() {
        let e = Expr::parse("u2ap && !2abs || false").unwrap();
        assert_eq!(e.to_string(), "((uniformlyTwoAbsorbingPrimary && !twoAbsorbing) || false)");
        let e = Expr::parse("¬special ∧ (2ord >= 2 ∨ ord=1)").unwrap();
        assert_eq!(e.to_string(), "(!special && (twoOrd >= 2 || ord == 1))");
        assert!(Expr::parse("notable").is_err());
        assert_eq!(Expr::parse("not prime").unwrap().to_string(), "!prime");
    }

    #[test]
    fn errors_carry_positions() {
        let err = Expr::parse("prime && bogus").unwrap_err();
        match &err {
            Error::Parse { pos, .. } => assert_eq!(*pos, 9),
            e => panic!("{e}"),
        }
        assert_eq!(
            caret(&err).unwrap(),
            "prime && bogus\n         ^ unknown name `bogus`"
        );
        assert!(Expr::parse("(prime").is_err());
        assert!(Expr::parse("ord >").is_err());
        assert!(Expr::parse("").is_err());
        assert!(Expr::parse("prime prime").is_err());
    }
}
