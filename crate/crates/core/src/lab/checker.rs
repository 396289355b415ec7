use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lab::context::{RingCtx, Workspace};
use crate::lab::corpus::Filter;

/// An ideal named by its ring and generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRef {
    pub ring: String,
    pub generators: Vec<u64>,
}

impl IdealRef {
    pub fn of(ctx: &RingCtx, i: usize) -> IdealRef {
        IdealRef {
            ring: ctx.ring().to_string(),
            generators: ctx.generators(i),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub ring: String,
    pub ideals: Vec<IdealRef>,
    /// Element codes (or integers for exponents) exhibiting the failure.
    pub witness: Vec<u64>,
    pub clause: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A checking unit that was not run because it exceeded a cap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skip {
    pub ring: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremCheckResult {
    pub theorem: String,
    pub mutant: bool,
    pub corpus: String,
    pub rings: u64,
    pub instances: u64,
    /// Instances whose hypothesis fails and that were therefore not checked.
    pub excluded: u64,
    pub skipped: Vec<Skip>,
    pub verdict: Verdict,
    pub failures: u64,
    /// The first failures in corpus order.
    pub counterexamples: Vec<Counterexample>,
}

/// Accumulates the checks made on one ring.
pub struct Checker<'w> {
    ws: &'w Workspace,
    mutant: bool,
    filter: Filter,
    pub(crate) instances: u64,
    pub(crate) excluded: u64,
    pub(crate) skipped: Vec<Skip>,
    pub(crate) failures: Vec<Counterexample>,
}

impl<'w> Checker<'w> {
    pub(crate) fn new(ws: &'w Workspace, mutant: bool, filter: Filter) -> Checker<'w> {
        Checker {
            ws,
            mutant,
            filter,
            instances: 0,
            excluded: 0,
            skipped: Vec::new(),
            failures: Vec::new(),
        }
    }

    pub fn ws(&self) -> &'w Workspace {
        self.ws
    }

    /// Whether the weakened variant of the statement is being checked.
    pub fn mutant(&self) -> bool {
        self.mutant
    }

    /// Records one checked instance; `failure` builds the counterexample
    /// when `ok` is false.
    pub fn check(&mut self, ok: bool, failure: impl FnOnce() -> Counterexample) {
        self.instances += 1;
        if !ok {
            self.failures.push(failure());
        }
    }

    pub fn exclude(&mut self) {
        self.excluded += 1;
    }

    /// Runs `f`; a cap error is recorded as a skip instead of propagating.
    pub fn capped(&mut self, ring: &str, f: impl FnOnce(&mut Self) -> Result<()>) -> Result<()> {
        match f(self) {
            Err(e) if e.is_cap() => {
                self.skipped.push(Skip {
                    ring: ring.to_string(),
                    reason: e.to_string(),
                });
                Ok(())
            }
            other => other,
        }
    }

    /// Proper ideals passing the corpus filter, in lattice order.
    pub fn targets(&self, ctx: &RingCtx) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for i in ctx.proper() {
            let keep = match &self.filter {
                Filter::All | Filter::Proper => true,
                Filter::Where(e) => e.eval(&ctx.report(i)?),
            };
            if keep {
                out.push(i);
            }
        }
        Ok(out)
    }
}

/// Builds a counterexample in `ctx`'s ring.
pub fn cex(ctx: &RingCtx, ideals: &[usize], witness: Vec<u64>, clause: impl Into<String>) -> Counterexample {
    Counterexample {
        ring: ctx.ring().to_string(),
        ideals: ideals.iter().map(|&i| IdealRef::of(ctx, i)).collect(),
        witness,
        clause: clause.into(),
    }
}
