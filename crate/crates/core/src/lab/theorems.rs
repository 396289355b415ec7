//! The registered statements. Each checker evaluates one quantified
//! statement literally on every applicable instance of a ring; in mutant
//! mode it evaluates a deliberately weakened variant that must fail
//! somewhere on the default corpus.

use std::sync::Arc;

use crate::bitset::ElemSet;
use crate::classify::Conditions;
use crate::error::{Error, Result};
use crate::lab::checker::{cex, Checker, Counterexample, IdealRef};
use crate::lab::context::RingCtx;
use crate::ring::{localize_modular, Localization, MultiplicativeSet, RingDescriptor, RingHom};
use crate::symbolic::{classify_z, FactoredInteger};

type CheckFn = fn(&mut Checker, &RingCtx) -> Result<()>;

pub struct Theorem {
    pub id: &'static str,
    pub statement: &'static str,
    pub mutation: &'static str,
    /// Corpus spec used when none is given.
    pub corpus: &'static str,
    check: CheckFn,
}

impl Theorem {
    pub fn check(&self, ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
        (self.check)(ck, ctx)
    }
}

const CORE: &str = "zn:2..120, prod:(zn:2..8,zn:2..8)";
const EQUIV: &str = "zn:2..120, prod:(zn:2..12,zn:2..12)";
const PRIME_POWERS: &str = "zn:2..120, zn:125, zn:343, zn:625, zn:2401";
const PAIRS: &str = "prod:(zn:2..16,zn:2..16)";
const TRIPLES: &str = "prod:(zn:2..8,zn:2..8,zn:2..8)";

/// Ids that name results about infinite rings or chains of rings.
pub const OUT_OF_SCOPE: &[&str] = &["chain", "valuation", "pruf1", "last"];

pub static THEOREMS: &[Theorem] = &[
    Theorem {
        id: "main1",
        statement: "each of conditions (2)-(6) holds at n exactly when Q is uniformly 2-absorbing primary with 2-ord(Q) <= n",
        mutation: "evaluate the conditions at 2-ord(Q) - 1",
        corpus: EQUIV,
        check: main1,
    },
    Theorem {
        id: "special",
        statement: "Q is special 2-absorbing primary iff each of conditions (2)-(9) holds",
        mutation: "condition (9) with IJ in Q in place of IJ in rad(Q)",
        corpus: EQUIV,
        check: special,
    },
    Theorem {
        id: "main2",
        statement: "Q special and x outside rad(Q): (Q:x) = (Q:x^n) for n >= 2, (rad(Q):x) = rad(Q:x), and (Q:x) is special",
        mutation: "x ranges over R minus Q",
        corpus: CORE,
        check: main2,
    },
    Theorem {
        id: "main3",
        statement: "an irreducible Q is special iff (Q:x) = (Q:x^2) for every x outside rad(Q)",
        mutation: "drop irreducibility",
        corpus: CORE,
        check: main3,
    },
    Theorem {
        id: "intersection",
        statement: "Q1, Q2 uniformly primary: Q1 meet Q2 and Q1Q2 are uniformly 2-absorbing primary with 2-ord at most max(ord) and ord(Q1) + ord(Q2)",
        mutation: "Q2 only uniformly 2-absorbing primary, with 2-ord in place of ord",
        corpus: CORE,
        check: intersection,
    },
    Theorem {
        id: "product1",
        statement: "Q in R1 x R2 is uniformly 2-absorbing primary iff Q = Q1 x R2 or R1 x Q2 with the factor uniformly 2-absorbing primary, or Q1 x Q2 with both uniformly primary",
        mutation: "Q1 x Q2 with both factors only uniformly 2-absorbing primary",
        corpus: PAIRS,
        check: product1,
    },
    Theorem {
        id: "product2",
        statement: "Q in R1 x ... x Rn is uniformly primary iff exactly one component Qk is proper and Qk is uniformly primary",
        mutation: "also accept two proper uniformly primary components",
        corpus: TRIPLES,
        check: product2,
    },
    Theorem {
        id: "product3",
        statement: "Q in R1 x ... x Rn is uniformly 2-absorbing primary iff it has one proper component that is uniformly 2-absorbing primary, or two proper components that are uniformly primary",
        mutation: "also accept three proper uniformly primary components",
        corpus: TRIPLES,
        check: product3,
    },
    Theorem {
        id: "result1",
        statement: "Q in R1 x R2 is special iff Q = Q1 x R2 or R1 x Q2 with the factor special, or Q1 x Q2 with both prime",
        mutation: "primary in place of prime",
        corpus: PAIRS,
        check: result1,
    },
    Theorem {
        id: "product4",
        statement: "Q1, Q2 proper: Q1 x Q2 is special iff it is 2-absorbing",
        mutation: "allow a full component",
        corpus: PAIRS,
        check: product4,
    },
    Theorem {
        id: "monoepi",
        statement: "for every registered hom f: preimages of uniformly 2-absorbing primary ideals are uniformly 2-absorbing primary with no larger 2-ord; for surjective f and ker f in Q, so is f(Q)",
        mutation: "drop the hypothesis on the target ideal",
        corpus: EQUIV,
        check: monoepi,
    },
    Theorem {
        id: "frac",
        statement: "I in Q: Q is uniformly 2-absorbing primary in R iff Q/I is in R/I; Q' meet R for a subring R",
        mutation: "drop I in Q",
        corpus: "zn:2..120",
        check: frac,
    },
    Theorem {
        id: "multi",
        statement: "S = {1, s, s^2, ...}: Q meet S empty gives S^-1 Q uniformly 2-absorbing primary with no larger 2-ord; S^-1 Q uniformly 2-absorbing primary and S meet Z_Q(R) empty give the converse",
        mutation: "drop S meet Z_Q(R) empty",
        corpus: "zn:2..120",
        check: multi,
    },
    Theorem {
        id: "idealization",
        statement: "Q(+)M is uniformly 2-absorbing primary in R(+)M iff Q is in R",
        mutation: "2-absorbing in place of uniformly 2-absorbing primary on the right",
        corpus: "idz:(zn:2..8)^1..2",
        check: idealization,
    },
    Theorem {
        id: "boolean-corollary",
        statement: "in a Boolean ring every irreducible ideal is maximal",
        mutation: "drop the Boolean hypothesis",
        corpus: "zn:2, prod:(zn:2,zn:2), prod:(zn:2,zn:2,zn:2), prod:(zn:2,zn:2,zn:2,zn:2), zn:4, zn:8, zn:9, prod:(zn:2,zn:4)",
        check: boolean_corollary,
    },
    Theorem {
        id: "rad",
        statement: "a uniformly 2-absorbing primary Q has one or two minimal primes",
        mutation: "drop the hypothesis on Q",
        corpus: CORE,
        check: rad,
    },
    Theorem {
        id: "noe-uni",
        statement: "a Noether strongly 2-absorbing primary Q is uniformly 2-absorbing primary with 2-ord(Q) <= 2-e(Q)",
        mutation: "drop the hypothesis on Q",
        corpus: CORE,
        check: noe_uni,
    },
    Theorem {
        id: "prop1",
        statement: "2-absorbing gives Noether strongly 2-absorbing primary with 2-e <= 2 and 2-ord = 1; uniformly primary gives 2-ord = 1",
        mutation: "2-absorbing primary in place of 2-absorbing for 2-ord = 1",
        corpus: CORE,
        check: prop1,
    },
    Theorem {
        id: "uni-abs",
        statement: "uniformly 2-absorbing primary implies 2-absorbing primary; 2-absorbing primary with finitely generated radical is Noether strongly and uniformly 2-absorbing primary",
        mutation: "assert 2-absorbing primary for every proper ideal",
        corpus: CORE,
        check: uni_abs,
    },
    Theorem {
        id: "ord-comparison",
        statement: "Q1 uniformly P-primary inside Q2 uniformly P-2-absorbing primary: 2-ord(Q2) <= ord(Q1)",
        mutation: "drop the nesting and the common radical",
        corpus: CORE,
        check: ord_comparison,
    },
    Theorem {
        id: "radical-prop",
        statement: "rad(I) 2-absorbing iff abc in I forces ab, ac or bc into rad(I) iff rad(I) 2-absorbing primary iff 2-e(rad(I)) = 1 iff rad(I) uniformly 2-absorbing primary",
        mutation: "I in place of rad(I) in the first statement",
        corpus: CORE,
        check: radical_prop,
    },
    Theorem {
        id: "divided-prime",
        statement: "Q special with rad(Q) a divided prime P is P-primary",
        mutation: "drop the hypothesis on rad(Q)",
        corpus: CORE,
        check: divided_prime,
    },
    Theorem {
        id: "chain-colon",
        statement: "Q special: the colons (Q:x) with x outside the minimal primes of Q form a chain",
        mutation: "x ranges over R minus Q",
        corpus: CORE,
        check: chain_colon,
    },
    Theorem {
        id: "idempotent-colon",
        statement: "Q uniformly 2-absorbing primary and x outside Q idempotent: (rad(Q):x) = rad(Q:x) and (Q:x) is uniformly 2-absorbing primary with no larger 2-ord",
        mutation: "x any element outside Q",
        corpus: CORE,
        check: idempotent_colon,
    },
    Theorem {
        id: "uniformly-primary-thm",
        statement: "each of conditions (2)-(4) holds at n exactly when Q is uniformly primary with ord(Q) <= n",
        mutation: "evaluate the conditions at ord(Q) - 1",
        corpus: PRIME_POWERS,
        check: uniformly_primary_thm,
    },
    Theorem {
        id: "lemch",
        statement: "P prime with P^n P-primary: ord(P^n) <= n; products and meets of such powers are uniformly 2-absorbing primary with 2-ord at most n + m and max(n, m); ord(p^a Z) = a",
        mutation: "drop primality of P",
        corpus: "zn:2..120, zn:125, zn:343, zn:625, zn:2401, prod:(zn:2..8,zn:2..8)",
        check: lemch,
    },
];

pub fn theorem(id: &str) -> Result<&'static Theorem> {
    if OUT_OF_SCOPE.contains(&id) {
        return Err(Error::OutOfScope(id.to_string()));
    }
    THEOREMS
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

fn le(a: Option<u32>, b: Option<u32>) -> bool {
    matches!((a, b), (Some(a), Some(b)) if a <= b)
}

fn reps(ctx: &RingCtx) -> Vec<u32> {
    ctx.ring().associate_reps().to_vec()
}

fn main1(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    for q in ck.targets(ctx)? {
        let a = ctx.analysis(q)?;
        let conds = Conditions::new(a, ctx.lattice(), ctx.caps())?;
        let best = ctx.two_ord(q)?;
        order_conditions(ck, ctx, q, best, a.max_exponent(), 2..=6, |w, n| conds.main1(w, n))?;
    }
    Ok(())
}

fn uniformly_primary_thm(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    for q in ck.targets(ctx)? {
        let a = ctx.analysis(q)?;
        let conds = Conditions::new(a, ctx.lattice(), ctx.caps())?;
        let best = ctx.ord(q)?;
        order_conditions(ck, ctx, q, best, a.max_exponent(), 2..=4, |w, n| {
            conds.uniformly_primary(w, n)
        })?;
    }
    Ok(())
}

/// Checks that condition `w` at `n` holds exactly for `n >= best`, and for
/// no `n` when `best` is undefined.
fn order_conditions(
    ck: &mut Checker,
    ctx: &RingCtx,
    q: usize,
    best: Option<u32>,
    max_exponent: u32,
    which: std::ops::RangeInclusive<u8>,
    cond: impl Fn(u8, u32) -> Result<bool>,
) -> Result<()> {
    for w in which {
        match best {
            Some(n) => {
                let at = if ck.mutant() && n > 1 { n - 1 } else { n };
                let ok = cond(w, at)?;
                ck.check(ok, || cex(ctx, &[q], vec![at as u64], format!("order n gives ({w}) at n")));
                for m in 1..n {
                    let ok = !cond(w, m)?;
                    ck.check(ok, || cex(ctx, &[q], vec![m as u64], format!("({w}) at n bounds the order by n")));
                }
            }
            None => {
                for m in 1..=max_exponent + 1 {
                    let ok = !cond(w, m)?;
                    ck.check(ok, || cex(ctx, &[q], vec![m as u64], format!("({w}) at n gives order <= n")));
                }
            }
        }
    }
    Ok(())
}

fn special(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    for q in ck.targets(ctx)? {
        let s = ctx.special(q)?;
        let conds = Conditions::new(ctx.analysis(q)?, ctx.lattice(), ctx.caps())?;
        for w in 2..=9u8 {
            let holds = if w == 9 && ck.mutant() {
                ideal_triples_absorb(ctx, q)?
            } else {
                conds.special(w)?
            };
            ck.check(holds == s, || cex(ctx, &[q], vec![], format!("special iff ({w})")));
        }
    }
    Ok(())
}

/// `IJK ⊆ Q` forces `IJ`, `IK` or `JK` into `Q`.
fn ideal_triples_absorb(ctx: &RingCtx, q: usize) -> Result<bool> {
    let lat = ctx.lattice();
    let l = lat.len();
    ctx.caps().check_lattice(l)?;
    let inside = |i: usize| lat.le(i, q);
    Ok((0..l).all(|i| {
        (0..l).all(|j| {
            let ij = lat.product(i, j);
            (0..l).all(|k| {
                !inside(lat.product(ij, k))
                    || inside(ij)
                    || inside(lat.product(i, k))
                    || inside(lat.product(j, k))
            })
        })
    }))
}

fn main2(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    let ring = ctx.ring();
    let top = ctx.top();
    let mut exps = vec![2, 3, 4, ctx.len().max(2) as u64];
    exps.dedup();
    for q in ck.targets(ctx)? {
        if !ctx.special(q)? {
            ck.exclude();
            continue;
        }
        let rq = ctx.radical(q);
        for x in reps(ctx) {
            let skip = if ck.mutant() { ctx.set(q).contains(x) } else { ctx.set(rq).contains(x) };
            if skip {
                continue;
            }
            let cx = ctx.colon(q, x);
            for &n in &exps {
                let ok = ctx.colon(q, ring.pow(x, n)) == cx;
                ck.check(ok, || cex(ctx, &[q], vec![x as u64, n], "(Q:x) = (Q:x^n)"));
            }
            let ok = ctx.colon(rq, x) == ctx.radical(cx);
            ck.check(ok, || cex(ctx, &[q], vec![x as u64], "(rad(Q):x) = rad(Q:x)"));
            if cx != top {
                let ok = ctx.special(cx)?;
                ck.check(ok, || cex(ctx, &[q], vec![x as u64], "(Q:x) special"));
            }
        }
    }
    Ok(())
}

fn main3(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    let ring = ctx.ring();
    for q in ck.targets(ctx)? {
        if !ck.mutant() && !ctx.irreducible(q)? {
            ck.exclude();
            continue;
        }
        let s = ctx.special(q)?;
        let rq = ctx.radical(q);
        let breaker = reps(ctx).into_iter().find(|&x| {
            !ctx.set(rq).contains(x) && ctx.colon(q, x) != ctx.colon(q, ring.mul(x, x))
        });
        ck.check(s == breaker.is_none(), || {
            cex(
                ctx,
                &[q],
                breaker.map(|x| vec![x as u64]).unwrap_or_default(),
                "special iff (Q:x) = (Q:x^2) for x outside rad(Q)",
            )
        });
    }
    Ok(())
}

fn intersection(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    let lat = ctx.lattice();
    let targets = ck.targets(ctx)?;
    let mut up = Vec::new();
    let mut second = Vec::new();
    for &q in &targets {
        if let Some(o) = ctx.ord(q)? {
            up.push((q, o));
        }
        let o = if ck.mutant() { ctx.two_ord(q)? } else { ctx.ord(q)? };
        if let Some(o) = o {
            second.push((q, o));
        }
    }
    for &(q1, o1) in &up {
        for &(q2, o2) in &second {
            if !ck.mutant() && q2 < q1 {
                continue;
            }
            let i = lat.intersect(q1, q2);
            let ok = le(ctx.two_ord(i)?, Some(o1.max(o2)));
            ck.check(ok, || cex(ctx, &[q1, q2], vec![], "2-ord(Q1 meet Q2) <= max(ord(Q1), ord(Q2))"));
            let p = lat.product(q1, q2);
            let ok = le(ctx.two_ord(p)?, Some(o1 + o2));
            ck.check(ok, || cex(ctx, &[q1, q2], vec![], "2-ord(Q1Q2) <= ord(Q1) + ord(Q2)"));
        }
    }
    Ok(())
}

/// Factor contexts of a product ring.
fn factors(ck: &Checker, ctx: &RingCtx) -> Result<Option<Vec<Arc<RingCtx>>>> {
    let Some(fs) = ctx.ring().factors() else {
        return Ok(None);
    };
    fs.iter()
        .map(|f| ck.ws().ctx_of(f))
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

/// Lattice indices of the components `Q_k` of `Q = Q_1 x ... x Q_n`.
fn components(ctx: &RingCtx, fs: &[Arc<RingCtx>], q: usize) -> Vec<usize> {
    let ring = ctx.ring();
    let mut sets: Vec<ElemSet> = fs.iter().map(|f| ElemSet::empty(f.ring().size() as usize)).collect();
    for x in ctx.set(q).iter() {
        for (set, part) in sets.iter_mut().zip(ring.split(x)) {
            set.insert(part);
        }
    }
    fs.iter().zip(&sets).map(|(f, s)| f.index(s)).collect()
}

fn product1(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    let Some(fs) = factors(ck, ctx)? else { return Ok(()) };
    if fs.len() != 2 {
        return Ok(());
    }
    for q in ck.targets(ctx)? {
        let c = components(ctx, &fs, q);
        let (f1, f2) = (&fs[0], &fs[1]);
        let (full1, full2) = (c[0] == f1.top(), c[1] == f2.top());
        let both = !full1 && !full2;
        let (o1, o2) = if both { (f1.ord(c[0])?, f2.ord(c[1])?) } else { (None, None) };
        let pair = if !both {
            false
        } else if ck.mutant() {
            f1.two_ord(c[0])?.is_some() && f2.two_ord(c[1])?.is_some()
        } else {
            o1.is_some() && o2.is_some()
        };
        let rhs = (full2 && f1.two_ord(c[0])?.is_some()) || (full1 && f2.two_ord(c[1])?.is_some()) || pair;
        let u = ctx.two_ord(q)?;
        ck.check(u.is_some() == rhs, || cex(ctx, &[q], vec![], "u2AP iff one of the product forms"));
        if let (Some(o1), Some(o2)) = (o1, o2) {
            ck.check(u == Some(o1.max(o2)), || {
                cex(ctx, &[q], vec![], "2-ord(Q1 x Q2) = max(ord(Q1), ord(Q2))")
            });
        }
    }
    Ok(())
}

fn product2(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    let Some(fs) = factors(ck, ctx)? else { return Ok(()) };
    for q in ck.targets(ctx)? {
        let c = components(ctx, &fs, q);
        let proper: Vec<usize> = (0..fs.len()).filter(|&k| c[k] != fs[k].top()).collect();
        let mut ords = Vec::new();
        for &k in &proper {
            ords.push(fs[k].ord(c[k])?);
        }
        let all_up = ords.iter().all(Option::is_some);
        let rhs = all_up && (proper.len() == 1 || (ck.mutant() && proper.len() == 2));
        let o = ctx.ord(q)?;
        ck.check(o.is_some() == rhs, || cex(ctx, &[q], vec![], "uniformly primary iff one proper component, uniformly primary"));
        if rhs && proper.len() == 1 {
            ck.check(o == ords[0], || cex(ctx, &[q], vec![], "ord(Q) = ord(Q_k)"));
        }
    }
    Ok(())
}

fn product3(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    let Some(fs) = factors(ck, ctx)? else { return Ok(()) };
    for q in ck.targets(ctx)? {
        let c = components(ctx, &fs, q);
        let proper: Vec<usize> = (0..fs.len()).filter(|&k| c[k] != fs[k].top()).collect();
        let mut all_up = true;
        let mut all_prime = true;
        for &k in &proper {
            all_up &= fs[k].ord(c[k])?.is_some();
            all_prime &= fs[k].prime(c[k])?;
        }
        let (one, one_special) = match proper.as_slice() {
            [k] => (fs[*k].two_ord(c[*k])?.is_some(), fs[*k].special(c[*k])?),
            _ => (false, false),
        };
        let rhs = one
            || (proper.len() == 2 && all_up)
            || (ck.mutant() && proper.len() == 3 && all_up);
        ck.check(ctx.two_ord(q)?.is_some() == rhs, || {
            cex(ctx, &[q], vec![], "u2AP iff one proper u2AP component or two proper uniformly primary components")
        });
        let rhs = one_special || (proper.len() == 2 && all_prime);
        ck.check(ctx.special(q)? == rhs, || {
            cex(ctx, &[q], vec![], "special iff one proper special component or two proper prime components")
        });
    }
    Ok(())
}

fn result1(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    let Some(fs) = factors(ck, ctx)? else { return Ok(()) };
    if fs.len() != 2 {
        return Ok(());
    }
    for q in ck.targets(ctx)? {
        let c = components(ctx, &fs, q);
        let (f1, f2) = (&fs[0], &fs[1]);
        let (full1, full2) = (c[0] == f1.top(), c[1] == f2.top());
        let pair = if full1 || full2 {
            false
        } else if ck.mutant() {
            f1.primary(c[0])? && f2.primary(c[1])?
        } else {
            f1.prime(c[0])? && f2.prime(c[1])?
        };
        let rhs = (full2 && f1.special(c[0])?) || (full1 && f2.special(c[1])?) || pair;
        ck.check(ctx.special(q)? == rhs, || cex(ctx, &[q], vec![], "special iff one of the product forms"));
    }
    Ok(())
}

fn product4(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    let Some(fs) = factors(ck, ctx)? else { return Ok(()) };
    if fs.len() != 2 {
        return Ok(());
    }
    for q in ck.targets(ctx)? {
        let c = components(ctx, &fs, q);
        if !ck.mutant() && (c[0] == fs[0].top() || c[1] == fs[1].top()) {
            ck.exclude();
            continue;
        }
        let ok = ctx.special(q)? == ctx.two_absorbing(q)?;
        ck.check(ok, || cex(ctx, &[q], vec![], "Q1 x Q2 special iff 2-absorbing"));
    }
    Ok(())
}

fn image(src: &RingCtx, hom: &RingHom, tgt: &RingCtx, q: usize) -> usize {
    tgt.span(src.set(q).iter().map(|x| hom.apply(x)))
}

fn preimage(src: &RingCtx, hom: &RingHom, tgt: &RingCtx, q: usize) -> usize {
    let set = ElemSet::from_codes(
        src.ring().size() as usize,
        src.ring().codes().filter(|&x| tgt.set(q).contains(hom.apply(x))),
    );
    src.index(&set)
}

fn cross(src: &RingCtx, i: usize, tgt: &RingCtx, j: usize, clause: String) -> Counterexample {
    Counterexample {
        ring: src.ring().to_string(),
        ideals: vec![IdealRef::of(src, i), IdealRef::of(tgt, j)],
        witness: vec![],
        clause,
    }
}

/// Preimages along `hom` of uniformly 2-absorbing primary ideals.
fn pull_back(ck: &mut Checker, ctx: &RingCtx, hom: &RingHom, tgt: &RingCtx, label: &str) -> Result<()> {
    for t in tgt.proper() {
        let bound = tgt.two_ord(t)?;
        if bound.is_none() && !ck.mutant() {
            ck.exclude();
            continue;
        }
        let p = preimage(ctx, hom, tgt, t);
        let u = ctx.two_ord(p)?;
        let ok = u.is_some() && bound.is_none_or(|b| le(u, Some(b)));
        ck.check(ok, || cross(ctx, p, tgt, t, format!("{label}: preimage u2AP with 2-ord at most the target's")));
    }
    Ok(())
}

fn monoepi(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    let targets = ck.targets(ctx)?;
    for hom in RingHom::surjections_from(ctx.ring())? {
        let tgt = ck.ws().ctx_of(hom.target())?;
        let label = format!("{:?} {} -> {}", hom.kind(), ctx.ring(), tgt.ring());
        pull_back(ck, ctx, &hom, &tgt, &label)?;
        let ker = ctx.index(hom.kernel().elements());
        for &q in &targets {
            if !ctx.lattice().le(ker, q) {
                ck.exclude();
                continue;
            }
            let Some(u) = ctx.two_ord(q)? else {
                ck.exclude();
                continue;
            };
            let img = image(ctx, &hom, &tgt, q);
            let ok = le(tgt.two_ord(img)?, Some(u));
            ck.check(ok, || cross(ctx, q, &tgt, img, format!("{label}: f(Q) u2AP with 2-ord at most 2-ord(Q)")));
        }
    }
    Ok(())
}

/// Largest modulus whose diagonal into `zn:n x zn:n` is checked.
const DIAGONAL_MAX: u32 = 16;

fn frac(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    let Some(n) = ctx.ring().modulus() else { return Ok(()) };
    let targets = ck.targets(ctx)?;
    for d in (2..n).filter(|d| n % d == 0) {
        let hom = RingHom::quotient_mod(n, d)?;
        let tgt = ck.ws().ctx(&RingDescriptor::Modular(d))?;
        let i = ctx.span([d]);
        for &q in &targets {
            let contains = ctx.lattice().le(i, q);
            if !contains && !ck.mutant() {
                ck.exclude();
                continue;
            }
            let img = image(ctx, &hom, &tgt, q);
            if img == tgt.top() {
                ck.exclude();
                continue;
            }
            let (u, v) = (ctx.two_ord(q)?, tgt.two_ord(img)?);
            ck.check(u.is_some() == v.is_some(), || {
                cross(ctx, q, &tgt, img, format!("I = ({d}) in Q: Q u2AP iff Q/I u2AP"))
            });
            if contains {
                ck.check(u == v, || cross(ctx, q, &tgt, img, format!("I = ({d}) in Q: 2-ord(Q) = 2-ord(Q/I)")));
            }
        }
    }
    if n <= DIAGONAL_MAX {
        let hom = RingHom::diagonal(n)?;
        let tgt = ck.ws().ctx_of(hom.target())?;
        let label = format!("subring zn:{n} of {}", tgt.ring());
        pull_back(ck, ctx, &hom, &tgt, &label)?;
    }
    Ok(())
}

fn multi(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    let Some(n) = ctx.ring().modulus() else { return Ok(()) };
    let targets = ck.targets(ctx)?;
    let zero_divisors: Vec<ElemSet> = targets.iter().map(|&q| ctx.lattice().get(q).z_set()).collect();
    for s in ctx.ring().codes() {
        let (m, hom) = match localize_modular(n, s)? {
            Localization::ZeroRing => {
                for _ in &targets {
                    ck.exclude();
                    ck.exclude();
                }
                continue;
            }
            Localization::Ring { modulus, hom } => (modulus, hom),
        };
        let tgt = ck.ws().ctx(&RingDescriptor::Modular(m))?;
        let powers = MultiplicativeSet::generated_by(ctx.ring(), s);
        for (&q, zq) in targets.iter().zip(&zero_divisors) {
            let img = image(ctx, &hom, &tgt, q);
            let u = ctx.two_ord(q)?;
            if !powers.elements().is_disjoint(ctx.set(q)) || u.is_none() {
                ck.exclude();
            } else {
                let ok = img != tgt.top() && le(tgt.two_ord(img)?, u);
                ck.check(ok, || {
                    cross(ctx, q, &tgt, img, format!("s = {s}: Q u2AP missing S gives S^-1 Q u2AP with 2-ord at most 2-ord(Q)"))
                });
            }
            let v = if img == tgt.top() { None } else { tgt.two_ord(img)? };
            let regular = powers.elements().is_disjoint(zq);
            if v.is_none() || (!regular && !ck.mutant()) {
                ck.exclude();
            } else {
                ck.check(le(u, v), || {
                    cross(ctx, q, &tgt, img, format!("s = {s}: S^-1 Q u2AP and S regular on Q give Q u2AP with 2-ord at most 2-ord(S^-1 Q)"))
                });
            }
        }
    }
    Ok(())
}

fn idealization(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    let Some((base, _)) = ctx.ring().idealization_base() else { return Ok(()) };
    let b = ck.ws().ctx_of(base)?;
    let ring = ctx.ring();
    for q in b.proper() {
        let set = ElemSet::from_codes(
            ring.size() as usize,
            ring.codes().filter(|&x| b.set(q).contains(ring.idealization_parts(x).0)),
        );
        let qm = ctx.index(&set);
        let rhs = if ck.mutant() { b.two_absorbing(q)? } else { b.two_ord(q)?.is_some() };
        let ok = ctx.two_ord(qm)?.is_some() == rhs;
        ck.check(ok, || cross(ctx, qm, &b, q, "Q(+)M u2AP iff Q u2AP".to_string()));
    }
    Ok(())
}

fn boolean_corollary(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    if !ctx.ring().is_boolean() && !ck.mutant() {
        ck.exclude();
        return Ok(());
    }
    for q in ck.targets(ctx)? {
        if !ctx.irreducible(q)? {
            continue;
        }
        let a = ctx.analysis(q)?;
        let w = a.maximal_witness().map(|w| w.iter().map(|&x| x as u64).collect());
        ck.check(w.is_none(), || cex(ctx, &[q], w.unwrap_or_default(), "irreducible gives maximal"));
    }
    Ok(())
}

fn rad(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    for q in ck.targets(ctx)? {
        if !ck.mutant() && ctx.two_ord(q)?.is_none() {
            ck.exclude();
            continue;
        }
        let mins = ctx.lattice().minimal_primes_over(q);
        ck.check(mins.len() <= 2, || cex(ctx, &[q], vec![], "one or two minimal primes over Q"));
    }
    Ok(())
}

fn noe_uni(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    for q in ck.targets(ctx)? {
        let u = ctx.two_ord(q)?;
        if ck.mutant() {
            ck.check(u.is_some(), || cex(ctx, &[q], vec![], "Q u2AP"));
            continue;
        }
        let Some(e) = ctx.two_exp(q)? else {
            ck.exclude();
            continue;
        };
        ck.check(le(u, Some(e)), || cex(ctx, &[q], vec![e as u64], "u2AP with 2-ord(Q) <= 2-e(Q)"));
    }
    Ok(())
}

fn prop1(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    for q in ck.targets(ctx)? {
        let u = ctx.two_ord(q)?;
        let two_abs = ctx.two_absorbing(q)?;
        if two_abs {
            let ok = le(ctx.two_exp(q)?, Some(2));
            ck.check(ok, || cex(ctx, &[q], vec![], "2-absorbing gives Noether strongly 2AP with 2-e <= 2"));
        }
        let hyp = if ck.mutant() { ctx.two_ap(q)? } else { two_abs };
        if hyp {
            ck.check(u == Some(1), || cex(ctx, &[q], vec![], "2-absorbing gives 2-ord = 1"));
        }
        if ctx.ord(q)?.is_some() {
            ck.check(u == Some(1), || cex(ctx, &[q], vec![], "uniformly primary gives 2-ord = 1"));
        }
    }
    Ok(())
}

fn uni_abs(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    for q in ck.targets(ctx)? {
        let u = ctx.two_ord(q)?;
        let tap = ctx.two_ap(q)?;
        if ck.mutant() || u.is_some() {
            ck.check(tap, || cex(ctx, &[q], vec![], "u2AP gives 2AP"));
        }
        if tap {
            let ok = ctx.two_exp(q)?.is_some() && u.is_some();
            ck.check(ok, || cex(ctx, &[q], vec![], "2AP gives Noether strongly 2AP and u2AP"));
        }
    }
    Ok(())
}

fn ord_comparison(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    let lat = ctx.lattice();
    let targets = ck.targets(ctx)?;
    let mut up = Vec::new();
    let mut u2 = Vec::new();
    for &q in &targets {
        if let Some(o) = ctx.ord(q)? {
            up.push((q, o));
        }
        if let Some(t) = ctx.two_ord(q)? {
            u2.push((q, t));
        }
    }
    for &(q1, o1) in &up {
        for &(q2, t2) in &u2 {
            let nested = lat.le(q1, q2) && ctx.radical(q1) == ctx.radical(q2);
            if !nested && !ck.mutant() {
                ck.exclude();
                continue;
            }
            ck.check(t2 <= o1, || cex(ctx, &[q1, q2], vec![], "2-ord(Q2) <= ord(Q1)"));
        }
    }
    Ok(())
}

fn radical_prop(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    let ring = ctx.ring();
    for i in ck.targets(ctx)? {
        let r = ctx.radical(i);
        let a = ctx.analysis(i)?;
        ctx.caps().check_cubic(ring.size())?;
        let rad = ctx.set(r);
        let (cq, cr) = (a.colon_q(), a.colon_rad());
        let reps = reps(ctx);
        let absorbs = reps.iter().all(|&x| {
            reps.iter().all(|&y| {
                let xy = ring.mul(x, y);
                rad.contains(xy) || cq[xy as usize].is_subset_of_union(&cr[x as usize], &cr[y as usize])
            })
        });
        let first = if ck.mutant() { ctx.two_absorbing(i)? } else { ctx.two_absorbing(r)? };
        let tap = ctx.two_ap(r)?;
        let u = ctx.two_ord(r)?.is_some();
        let claims = [
            (absorbs, "rad(I) 2-absorbing iff abc in I forces a pair product into rad(I)"),
            (tap, "rad(I) 2-absorbing iff rad(I) 2AP"),
            (u, "rad(I) 2-absorbing iff rad(I) u2AP"),
            (ctx.two_exp(r)? == Some(1), "rad(I) 2-absorbing iff 2-e(rad(I)) = 1"),
        ];
        for (holds, clause) in claims {
            ck.check(holds == first, || cex(ctx, &[i], vec![], clause));
        }
    }
    Ok(())
}

fn divided_prime(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    for q in ck.targets(ctx)? {
        let r = ctx.radical(q);
        let applies = ctx.special(q)?
            && (ck.mutant() || (ctx.prime(r)? && ctx.analysis(r)?.divided_witness().is_none()));
        if !applies {
            ck.exclude();
            continue;
        }
        ck.check(ctx.primary(q)?, || cex(ctx, &[q], vec![], "Q is rad(Q)-primary"));
    }
    Ok(())
}

fn chain_colon(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    let lat = ctx.lattice();
    for q in ck.targets(ctx)? {
        if !ctx.special(q)? {
            ck.exclude();
            continue;
        }
        let mins = lat.minimal_primes_over(q);
        let xs: Vec<u32> = reps(ctx)
            .into_iter()
            .filter(|&x| {
                if ck.mutant() {
                    !ctx.set(q).contains(x)
                } else {
                    mins.iter().all(|&p| !ctx.set(p).contains(x))
                }
            })
            .collect();
        let colons: Vec<(u32, usize)> = xs.iter().map(|&x| (x, ctx.colon(q, x))).collect();
        for (k, &(x, cx)) in colons.iter().enumerate() {
            for &(y, cy) in &colons[k + 1..] {
                let ok = lat.le(cx, cy) || lat.le(cy, cx);
                ck.check(ok, || cex(ctx, &[q], vec![x as u64, y as u64], "(Q:x) and (Q:y) comparable"));
            }
        }
    }
    Ok(())
}

fn idempotent_colon(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    let ring = ctx.ring();
    for q in ck.targets(ctx)? {
        let Some(u) = ctx.two_ord(q)? else {
            ck.exclude();
            continue;
        };
        let rq = ctx.radical(q);
        let xs: Vec<u32> = if ck.mutant() {
            reps(ctx)
        } else {
            ring.codes().filter(|&x| ring.is_idempotent(x)).collect()
        };
        for x in xs.into_iter().filter(|&x| !ctx.set(q).contains(x)) {
            let cx = ctx.colon(q, x);
            let ok = ctx.colon(rq, x) == ctx.radical(cx);
            ck.check(ok, || cex(ctx, &[q], vec![x as u64], "(rad(Q):x) = rad(Q:x)"));
            let ok = le(ctx.two_ord(cx)?, Some(u));
            ck.check(ok, || cex(ctx, &[q], vec![x as u64], "(Q:x) u2AP with 2-ord at most 2-ord(Q)"));
        }
    }
    Ok(())
}

/// Prime `p` and exponent `a` when `n = p^a`.
fn prime_power(n: u32) -> Option<(u64, u32)> {
    match FactoredInteger::new(n as u64).ok()?.pairs() {
        [(p, a)] => Some((*p, *a)),
        _ => None,
    }
}

const LEMCH_EXPONENTS: u32 = 4;

fn lemch(ck: &mut Checker, ctx: &RingCtx) -> Result<()> {
    let lat = ctx.lattice();
    let power = |p: usize, n: u32| (1..n).fold(p, |acc, _| lat.product(acc, p));
    let bases: Vec<usize> = if ck.mutant() { lat.proper().collect() } else { lat.primes().to_vec() };
    let mut powers = Vec::new();
    for &p in &bases {
        for n in 1..=LEMCH_EXPONENTS {
            let pn = power(p, n);
            let hyp = pn != ctx.top()
                && ctx.primary(pn)?
                && (ck.mutant() || ctx.radical(pn) == p);
            if !hyp {
                ck.exclude();
                continue;
            }
            ck.check(le(ctx.ord(pn)?, Some(n)), || cex(ctx, &[p], vec![n as u64], "ord(P^n) <= n"));
            powers.push((pn, n));
        }
    }
    if !ck.mutant() {
        let name = ctx.ring().to_string();
        ck.capped(&name, |ck| {
            for &(a, n) in &powers {
                for &(b, m) in &powers {
                    let ok = le(ctx.two_ord(lat.product(a, b))?, Some(n + m));
                    ck.check(ok, || cex(ctx, &[a, b], vec![n as u64, m as u64], "2-ord(P1^n P2^m) <= n + m"));
                    let ok = le(ctx.two_ord(lat.intersect(a, b))?, Some(n.max(m)));
                    ck.check(ok, || cex(ctx, &[a, b], vec![n as u64, m as u64], "2-ord(P1^n meet P2^m) <= max(n, m)"));
                }
            }
            Ok(())
        })?;
    }
    if let Some((p, a)) = ctx.ring().modulus().and_then(prime_power) {
        let zero = 0;
        let oracle = ctx.ord(zero)?;
        ck.check(oracle == Some(a), || cex(ctx, &[zero], vec![p, a as u64], "ord(p^a Z) = a in the quotient"));
        let (report, _) = classify_z(&FactoredInteger::from_pairs([(p, a)])?, ctx.caps())?;
        ck.check(report.orders.ord == Some(a), || {
            cex(ctx, &[zero], vec![p, a as u64], "ord(p^a Z) = a in closed form")
        });
    }
    Ok(())
}
