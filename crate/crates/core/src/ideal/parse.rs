use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::Ring;

/// Parses `[g1,g2,...]` (generator codes) or `(g)` (principal shorthand).
pub fn parse_ideal(ring: &Arc<Ring>, text: &str) -> Result<Ideal> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    let close = match bytes.get(pos) {
        Some(b'[') => b']',
        Some(b'(') => b')',
        _ => return Err(Error::parse(text, pos, "expected `[` or `(`")),
    };
    pos += 1;
    let mut gens = Vec::new();
    loop {
        skip_ws(&mut pos);
        if bytes.get(pos) == Some(&close) && (close == b']' || !gens.is_empty()) {
            pos += 1;
            break;
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if start == pos {
            return Err(Error::parse(text, pos, "expected an element code"));
        }
        let code: u64 = text[start..pos]
            .parse()
            .map_err(|_| Error::parse(text, start, "element code too large"))?;
        gens.push(code);
        skip_ws(&mut pos);
        match bytes.get(pos) {
            Some(b',') if close == b']' => pos += 1,
            Some(&c) if c == close => {}
            _ => {
                let want = if close == b']' { "`,` or `]`" } else { "`)`" };
                return Err(Error::parse(text, pos, format!("expected {want}")));
            }
        }
    }
    skip_ws(&mut pos);
    if pos != bytes.len() {
        return Err(Error::parse(text, pos, "trailing input"));
    }
    Ideal::generate(ring, &gens)
}
