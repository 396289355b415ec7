//! Corpora: expanded descriptor lists plus an ideal filter.
//!
//! ```text
//! corpus := descriptors [ "|" filter ]
//! filter := "all" | "proper" | <predicate expression>
//! ```
//!
//! `descriptors` follows the descriptor grammar with ranges. A spec naming
//! an existing file is read from disk, one or more descriptors per line,
//! with `#` starting a comment.

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::lab::expr::Expr;
use crate::ring::RingDescriptor;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Filter {
    All,
    Proper,
    Where(Expr),
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::All => write!(f, "all"),
            Filter::Proper => write!(f, "proper"),
            Filter::Where(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub name: String,
    pub rings: Vec<RingDescriptor>,
    pub filter: Filter,
}

impl Corpus {
    /// Expands a corpus spec or loads it from a file.
    pub fn build(spec: &str) -> Result<Corpus> {
        let spec = spec.trim();
        if Path::new(spec).is_file() {
            let text = std::fs::read_to_string(spec)?;
            let body: Vec<&str> = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty())
                .collect();
            let mut corpus = Corpus::parse(&body.join(", "))?;
            corpus.name = spec.to_string();
            return Ok(corpus);
        }
        Corpus::parse(spec)
    }

    fn parse(spec: &str) -> Result<Corpus> {
        let (rings_text, filter) = match spec.split_once('|') {
            Some((r, f)) => (r, parse_filter(f.trim())?),
            None => (spec, Filter::Proper),
        };
        let rings = RingDescriptor::parse_many(rings_text.trim())?;
        Ok(Corpus {
            name: spec.to_string(),
            rings,
            filter,
        })
    }

    pub fn len(&self) -> usize {
        self.rings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rings.is_empty()
    }

    /// The same filter over a single ring.
    pub fn single(&self, ring: RingDescriptor) -> Corpus {
        Corpus {
            name: ring.to_string(),
            rings: vec![ring],
            filter: self.filter.clone(),
        }
    }
}

fn parse_filter(text: &str) -> Result<Filter> {
    match text {
        "all" => Ok(Filter::All),
        "proper" => Ok(Filter::Proper),
        "" => Err(Error::parse(text, 0, "empty ideal filter")),
        _ => Ok(Filter::Where(Expr::parse(text)?)),
    }
}
