//! Exploratory variants of the order invariants. Nothing here is asserted;
//! the functions report where a variant departs from 2-ord.

use serde::{Deserialize, Serialize};

use crate::classify::Analysis;
use crate::error::Result;
use crate::lab::context::Workspace;
use crate::lab::corpus::Corpus;
use crate::lab::run::RunOptions;

/// Least `n` such that `abc ∈ Q` forces one of `(ab)^n`, `(ac)^n`, `(bc)^n`
/// into `Q`, or `None` when some such triple has no pair product in `√Q`.
pub fn symmetric_order(a: &Analysis) -> Option<u32> {
    let ring = a.ring();
    let reps = ring.associate_reps();
    let cq = a.colon_q();
    let mut n = 1;
    for &x in reps {
        for &y in reps {
            let xy = ring.mul(x, y);
            for z in cq[xy as usize].iter().filter(|&z| ring.associate_rep(z) == z) {
                let least = [xy, ring.mul(x, z), ring.mul(y, z)]
                    .into_iter()
                    .filter_map(|p| a.exponent(p))
                    .min()?;
                n = n.max(least);
            }
        }
    }
    Some(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Divergence {
    pub ring: String,
    pub generators: Vec<u64>,
    pub two_ord: Option<u32>,
    pub symmetric_order: Option<u32>,
}

/// Corpus ideals whose symmetric order differs from 2-ord.
pub fn symmetric_divergences(corpus: &Corpus, opts: &RunOptions) -> Result<Vec<Divergence>> {
    let ws = Workspace::new(opts.caps);
    let mut out = Vec::new();
    for ring in &corpus.rings {
        let ctx = ws.ctx(ring)?;
        for q in ctx.proper() {
            let two_ord = ctx.two_ord(q)?;
            let sym = symmetric_order(ctx.analysis(q)?);
            if sym != two_ord {
                out.push(Divergence {
                    ring: ctx.ring().to_string(),
                    generators: ctx.generators(q),
                    two_ord,
                    symmetric_order: sym,
                });
            }
        }
    }
    Ok(out)
}
