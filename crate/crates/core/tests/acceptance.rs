//! The acceptance suite: one test per criterion, run with
//! `cargo test -p twoabs --test acceptance`. Each test prints a one-line
//! verdict (visible with `--nocapture`) and fails on any violation.

use std::sync::Arc;
use std::time::Instant;

use twoabs::lab::{replay, verify, verify_all, RunOptions, TheoremCheckResult, Verdict, THEOREMS};
use twoabs::symbolic::bridge;
use twoabs::{
    classify, classify_z, parse_ideal, Analysis, Caps, ClassificationReport, FactoredInteger, Ideal, IdealLattice,
    OracleCheck, Ring, RingDescriptor,
};

/// Printed only once every assertion of the criterion has held.
fn report_line(n: u32, what: &str, detail: String) {
    println!("criterion {n} ({what}): pass; {detail}");
}

fn z(n: u64) -> ClassificationReport {
    classify_z(&FactoredInteger::new(n).unwrap(), &Caps::default()).unwrap().0
}

fn finite(ring: &str, ideal: &str) -> ClassificationReport {
    let r = Arc::new(Ring::build(&ring.parse::<RingDescriptor>().unwrap()).unwrap());
    let lattice = IdealLattice::enumerate(&r).unwrap();
    let q = parse_ideal(&r, ideal).unwrap();
    classify(&q, &lattice, &Caps::default()).unwrap()
}

/// Runs the listed theorems on their default corpora and requires zero
/// failures; `allowed_skip` names theorems that may skip rings above the
/// cubic cap.
fn suite(ids: &[&str], allowed_skip: &[&str]) -> Vec<TheoremCheckResult> {
    let opts = RunOptions::default();
    let mut out = Vec::new();
    for id in ids {
        let r = verify(id, None, &opts).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{id}: {:?}", r.counterexamples);
        assert!(r.instances > 0, "{id} checked nothing");
        if !allowed_skip.contains(id) {
            assert!(r.skipped.is_empty(), "{id} skipped {:?}", r.skipped);
        }
        out.push(r);
    }
    out
}

fn summary(results: &[TheoremCheckResult]) -> String {
    results
        .iter()
        .map(|r| format!("{} {} instances", r.theorem, r.instances))
        .collect::<Vec<_>>()
        .join(", ")
}

#[test]
fn criterion_1_fixtures() {
    let start = Instant::now();

    let r = z(12);
    assert!(r.flags.two_absorbing_primary);
    assert!(!r.flags.two_absorbing);
    assert!(!r.flags.primary);
    assert!(!r.flags.uniformly_primary);
    assert_eq!(r.orders.two_exp, Some(2));
    assert_eq!(r.orders.two_ord, Some(2));
    assert!(!r.flags.special);
    let oracle = finite("zn:12", "(0)");
    assert_eq!(oracle.flags, r.flags);
    assert_eq!(oracle.orders, r.orders);

    let r = z(60);
    assert!(!r.flags.two_absorbing_primary);
    let w = &r.witnesses["twoAbsorbingPrimary"];
    assert_eq!(w.len(), 3);
    let (a, b, c) = (w[0], w[1], w[2]);
    assert_eq!(a * b * c % 60, 0);
    assert_ne!(a * b % 60, 0);
    assert_ne!(a * c % 30, 0);
    assert_ne!(b * c % 30, 0);

    let r = z(6);
    assert!(r.flags.two_absorbing);
    assert!(r.flags.special);
    assert_eq!(r.orders.two_ord, Some(1));

    let meet = FactoredInteger::new(3).unwrap().intersect(&FactoredInteger::new(4).unwrap());
    assert_eq!(meet.value(), Some(12));
    let (r, check) = classify_z(&meet, &Caps::default()).unwrap();
    assert!(!r.flags.special);
    assert_eq!(check, OracleCheck::Agreed { modulus: 12 });

    let r = finite("idz:(zn:2)^2", "(0)");
    assert!(r.flags.primary);
    assert_eq!(r.orders.ord, Some(2));
    assert!(r.flags.special);

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "fixtures took {elapsed:?}");
    report_line(1, "fixtures", format!("{:.2}s", elapsed.as_secs_f64()));
}

#[test]
fn criterion_2_equivalence_suites() {
    let start = Instant::now();
    let results = suite(&["main1", "special", "uniformly-primary-thm"], &[]);
    report_line(
        2,
        "equivalence suites",
        format!("{} in {:.1}s", summary(&results), start.elapsed().as_secs_f64()),
    );
}

#[test]
fn criterion_3_closure_and_transfer_suites() {
    let start = Instant::now();
    let ids = [
        "intersection",
        "product1",
        "product2",
        "product3",
        "monoepi",
        "frac",
        "multi",
        "idealization",
        "result1",
        "product4",
    ];
    let results = suite(&ids, &[]);
    report_line(
        3,
        "closure and transfer suites",
        format!("{} in {:.1}s", summary(&results), start.elapsed().as_secs_f64()),
    );
}

#[test]
fn criterion_4_structural_suites() {
    let start = Instant::now();
    let ids = [
        "rad",
        "noe-uni",
        "prop1",
        "uni-abs",
        "ord-comparison",
        "radical-prop",
        "main2",
        "main3",
        "idempotent-colon",
        "divided-prime",
        "chain-colon",
        "boolean-corollary",
        "lemch",
    ];
    let results = suite(&ids, &["lemch"]);
    let caps = Caps::default();
    for skip in &results.last().unwrap().skipped {
        let size = skip.ring.parse::<RingDescriptor>().unwrap().size().unwrap();
        assert!(size > caps.cubic as u64, "{skip:?}");
    }
    for p in [2u64, 3, 5, 7] {
        for a in 1..=4u32 {
            let f = FactoredInteger::from_pairs([(p, a)]).unwrap();
            let (r, _) = classify_z(&f, &caps).unwrap();
            assert_eq!(r.orders.ord, Some(a), "closed form for {p}^{a}");
            let ring = Arc::new(Ring::build(&RingDescriptor::Modular(p.pow(a) as u32)).unwrap());
            let oracle = Analysis::new(&Ideal::zero(&ring)).unwrap();
            assert_eq!(oracle.ord(), Some(a), "oracle for {p}^{a}");
        }
    }
    report_line(
        4,
        "structural suites",
        format!("{} in {:.1}s", summary(&results), start.elapsed().as_secs_f64()),
    );
}

fn agree(n: u64, caps: &Caps) {
    let (closed, check) = classify_z(&FactoredInteger::new(n).unwrap(), caps).unwrap();
    assert_eq!(check, OracleCheck::Agreed { modulus: n });
    let oracle = bridge(n, 1, caps).unwrap();
    for (name, value) in closed.flags.entries() {
        if name != "dividedPrimeRadical" {
            assert_eq!(oracle.flags.get(name), Some(value), "{name} for {n}");
        }
    }
    assert_eq!(closed.orders, oracle.orders, "orders for {n}");
}

#[test]
fn criterion_5_symbolic_matches_oracle() {
    let start = Instant::now();
    let caps = Caps::default();
    for n in 2..=144 {
        agree(n, &caps);
    }
    let mut targeted = 0;
    for (i, &p) in [2u64, 3, 5, 7].iter().enumerate() {
        for &q in &[2u64, 3, 5, 7][i + 1..] {
            for a in 0..10u32 {
                for b in 0..10u32 {
                    let n = p.pow(a) * q.pow(b);
                    if (a, b) != (0, 0) && n <= 1000 {
                        agree(n, &caps);
                        targeted += 1;
                    }
                }
            }
        }
    }
    let (zero, check) = classify_z(&FactoredInteger::new(0).unwrap(), &caps).unwrap();
    assert_eq!(check, OracleCheck::Analytic);
    assert!(zero.flags.prime && !zero.flags.maximal);
    report_line(
        5,
        "symbolic versus oracle",
        format!("n <= 144 and {targeted} targeted p^a q^b in {:.1}s", start.elapsed().as_secs_f64()),
    );
}

#[test]
fn criterion_6_mutants_are_caught() {
    let start = Instant::now();
    let opts = RunOptions {
        mutant: true,
        ..RunOptions::default()
    };
    let caps = Caps::default();
    let mut caught = Vec::new();
    for t in THEOREMS {
        let r = verify(t.id, None, &opts).unwrap();
        assert_eq!(r.verdict, Verdict::Fail, "mutant of {} ({}) passed", t.id, t.mutation);
        assert!(!r.counterexamples.is_empty());
        assert!(replay(&r, &caps).unwrap(), "{} counterexamples do not replay", t.id);
        let first = &r.counterexamples[0];
        caught.push(format!("{} on {}", t.id, first.ring));
    }
    report_line(
        6,
        "mutant self-tests",
        format!("{} mutants caught and replayed in {:.1}s", caught.len(), start.elapsed().as_secs_f64()),
    );
}

#[test]
fn criterion_7_worker_count_does_not_change_output() {
    let start = Instant::now();
    let run = |workers| {
        let opts = RunOptions {
            workers,
            ..RunOptions::default()
        };
        serde_json::to_string_pretty(&verify_all(None, &opts).unwrap()).unwrap()
    };
    let one = run(1);
    let eight = run(8);
    assert_eq!(one, eight);
    report_line(
        7,
        "determinism",
        format!("{} bytes identical in {:.1}s", one.len(), start.elapsed().as_secs_f64()),
    );
}
