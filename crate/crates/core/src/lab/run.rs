use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::classify::{classify, ClassificationReport};
use crate::error::Result;
use crate::ideal::{Ideal, IdealLattice};
use crate::lab::checker::{Checker, Counterexample, Skip, TheoremCheckResult, Verdict};
use crate::lab::context::Workspace;
use crate::lab::corpus::{Corpus, Filter};
use crate::lab::expr::Expr;
use crate::lab::theorems::{theorem, Theorem, THEOREMS};
use crate::ring::{Ring, RingDescriptor};

/// Counterexamples kept per result; the failure count covers all of them.
pub const REPORTED: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub caps: Caps,
    pub workers: usize,
    pub mutant: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            caps: Caps::default(),
            workers: 1,
            mutant: false,
        }
    }
}

/// Applies `f` to every item on `workers` threads, keeping input order.
fn map_ordered<T: Sync, R: Send>(items: &[T], workers: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    #[cfg(feature = "parallel")]
    if workers > 1 {
        use rayon::prelude::*;
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
            return pool.install(|| items.par_iter().map(&f).collect());
        }
    }
    let _ = workers;
    items.iter().map(f).collect()
}

struct Outcome {
    instances: u64,
    excluded: u64,
    skipped: Vec<Skip>,
    failures: Vec<Counterexample>,
}

fn run_ring(ws: &Workspace, th: &Theorem, ring: &RingDescriptor, filter: &Filter, mutant: bool) -> Result<Outcome> {
    let mut ck = Checker::new(ws, mutant, filter.clone());
    let name = ring.to_string();
    match ws.ctx(ring) {
        Ok(ctx) => ck.capped(&name, |ck| th.check(ck, &ctx))?,
        Err(e) if e.is_cap() => ck.skipped.push(Skip {
            ring: name,
            reason: e.to_string(),
        }),
        Err(e) => return Err(e),
    }
    Ok(Outcome {
        instances: ck.instances,
        excluded: ck.excluded,
        skipped: ck.skipped,
        failures: ck.failures,
    })
}

/// Checks each theorem on its corpus (`corpus`, or the theorem's own
/// default) with one shared ring cache. Results follow `ids` order and are
/// independent of the worker count.
pub fn verify_many(ids: &[&str], corpus: Option<&Corpus>, opts: &RunOptions) -> Result<Vec<TheoremCheckResult>> {
    let mut plans = Vec::new();
    for id in ids {
        let th = theorem(id)?;
        let c = match corpus {
            Some(c) => c.clone(),
            None => Corpus::build(th.corpus)?,
        };
        plans.push((th, c));
    }
    let tasks: Vec<(usize, &RingDescriptor)> = plans
        .iter()
        .enumerate()
        .flat_map(|(k, (_, c))| c.rings.iter().map(move |r| (k, r)))
        .collect();
    let ws = Workspace::new(opts.caps);
    let outcomes = map_ordered(&tasks, opts.workers, |&(k, ring)| {
        let (th, c) = &plans[k];
        run_ring(&ws, th, ring, &c.filter, opts.mutant)
    });

    let mut results: Vec<TheoremCheckResult> = plans
        .iter()
        .map(|(th, c)| TheoremCheckResult {
            theorem: th.id.to_string(),
            mutant: opts.mutant,
            corpus: c.name.clone(),
            rings: c.len() as u64,
            instances: 0,
            excluded: 0,
            skipped: Vec::new(),
            verdict: Verdict::Pass,
            failures: 0,
            counterexamples: Vec::new(),
        })
        .collect();
    for (&(k, _), outcome) in tasks.iter().zip(outcomes) {
        let outcome = outcome?;
        let r = &mut results[k];
        r.instances += outcome.instances;
        r.excluded += outcome.excluded;
        r.skipped.extend(outcome.skipped);
        r.failures += outcome.failures.len() as u64;
        let room = REPORTED.saturating_sub(r.counterexamples.len());
        r.counterexamples.extend(outcome.failures.into_iter().take(room));
    }
    for r in &mut results {
        if r.failures > 0 {
            r.verdict = Verdict::Fail;
        }
    }
    Ok(results)
}

pub fn verify(id: &str, corpus: Option<&Corpus>, opts: &RunOptions) -> Result<TheoremCheckResult> {
    Ok(verify_many(&[id], corpus, opts)?.remove(0))
}

/// Every registered theorem, in registry order.
pub fn verify_all(corpus: Option<&Corpus>, opts: &RunOptions) -> Result<Vec<TheoremCheckResult>> {
    let ids: Vec<&str> = THEOREMS.iter().map(|t| t.id).collect();
    verify_many(&ids, corpus, opts)
}

/// Re-derives every reported counterexample: each named ideal is classified
/// on its own, and the checker rerun on the counterexample's ring alone must
/// report the identical failure.
pub fn replay(result: &TheoremCheckResult, caps: &Caps) -> Result<bool> {
    let filter = Corpus::build(&result.corpus)
        .map(|c| c.filter)
        .unwrap_or(Filter::Proper);
    let opts = RunOptions {
        caps: *caps,
        workers: 1,
        mutant: result.mutant,
    };
    for cex in &result.counterexamples {
        for ideal in &cex.ideals {
            let ring = Arc::new(Ring::build_with(&ideal.ring.parse()?, caps)?);
            let lattice = IdealLattice::enumerate_with(&ring, caps)?;
            let q = Ideal::generate(&ring, &ideal.generators)?;
            if q.is_proper() {
                classify(&q, &lattice, caps)?;
            }
        }
        let single = Corpus {
            name: cex.ring.clone(),
            rings: vec![cex.ring.parse()?],
            filter: filter.clone(),
        };
        let ws = Workspace::new(*caps);
        let th = theorem(&result.theorem)?;
        let outcome = run_ring(&ws, th, &single.rings[0], &single.filter, opts.mutant)?;
        if !outcome.failures.contains(cex) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub ring: String,
    pub generators: Vec<u64>,
    pub report: ClassificationReport,
}

/// Every corpus ideal whose report satisfies `expr`, in corpus then lattice
/// order, cut to `limit`.
pub fn search(expr: &Expr, corpus: &Corpus, opts: &RunOptions, limit: Option<usize>) -> Result<Vec<SearchHit>> {
    let ws = Workspace::new(opts.caps);
    let per_ring = map_ordered(&corpus.rings, opts.workers, |ring| -> Result<Vec<SearchHit>> {
        let ctx = ws.ctx(ring)?;
        let ck = Checker::new(&ws, false, corpus.filter.clone());
        let mut hits = Vec::new();
        for i in ck.targets(&ctx)? {
            let report = ctx.report(i)?;
            if expr.eval(&report) {
                hits.push(SearchHit {
                    ring: ctx.ring().to_string(),
                    generators: ctx.generators(i),
                    report,
                });
            }
        }
        Ok(hits)
    });
    let mut out = Vec::new();
    for hits in per_ring {
        out.extend(hits?);
        if limit.is_some_and(|l| out.len() >= l) {
            break;
        }
    }
    if let Some(l) = limit {
        out.truncate(l);
    }
    Ok(out)
}
