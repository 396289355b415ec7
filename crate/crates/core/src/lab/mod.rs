//! Theorem lab: corpora, registered statements as exhaustive checkers,
//! counterexample search and replay.

mod checker;
mod context;
mod corpus;
mod explore;
mod expr;
mod run;
mod theorems;

pub use checker::{Checker, Counterexample, IdealRef, Skip, TheoremCheckResult, Verdict};
pub use context::{RingCtx, Workspace};
pub use corpus::{Corpus, Filter};
pub use explore::{symmetric_divergences, symmetric_order, Divergence};
pub use expr::{caret, Cmp, Expr, Flag, Order};
pub use run::{replay, search, verify, verify_all, verify_many, RunOptions, SearchHit, REPORTED};
pub use theorems::{theorem, Theorem, OUT_OF_SCOPE, THEOREMS};
