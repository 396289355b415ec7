use twoabs::lab::{
    replay, search, symmetric_divergences, verify, verify_many, Corpus, Expr, RunOptions, Verdict,
    THEOREMS,
};
use twoabs::{Caps, Error};

fn hits(expr: &str, corpus: &str) -> Vec<(String, Vec<u64>)> {
    let e = Expr::parse(expr).unwrap();
    let c = Corpus::build(corpus).unwrap();
    search(&e, &c, &RunOptions::default(), None)
        .unwrap()
        .into_iter()
        .map(|h| (h.ring, h.generators))
        .collect()
}

#[test]
fn search_finds_the_remark_instances() {
    let found = hits("u2ap && !twoAbsorbing", "zn:2..60");
    assert!(found.contains(&("zn:12".to_string(), vec![0])));
    let found = hits("special && !primary", "zn:2..60");
    assert!(found.contains(&("zn:6".to_string(), vec![0])));
    assert!(hits("prime && !maximal", "zn:2, zn:3, zn:5, zn:7, zn:11, polyq:2:1,1,1, polyq:3:1,0,1").is_empty());
    assert!(hits("irreducible && !maximal", "prod:(zn:2,zn:2,zn:2)").is_empty());
    assert!(hits("false", "zn:2..30").is_empty());
}

#[test]
fn search_is_ordered_and_limited() {
    let e = Expr::parse("special").unwrap();
    let c = Corpus::build("zn:2..30").unwrap();
    let all = search(&e, &c, &RunOptions::default(), None).unwrap();
    let some = search(&e, &c, &RunOptions::default(), Some(5)).unwrap();
    assert_eq!(some.len(), 5);
    assert_eq!(&all[..5], &some[..]);
    let parallel = RunOptions { workers: 4, ..Default::default() };
    assert_eq!(search(&e, &c, &parallel, None).unwrap(), all);
}

#[test]
fn registry_errors() {
    let opts = RunOptions::default();
    assert!(matches!(verify("chain", None, &opts), Err(Error::OutOfScope(_))));
    assert!(matches!(verify("valuation", None, &opts), Err(Error::OutOfScope(_))));
    assert!(matches!(verify("nope", None, &opts), Err(Error::UnknownTheorem(_))));
    assert_eq!(THEOREMS.len(), 26);
}

#[test]
fn main3_and_its_mutant() {
    let c = Corpus::build("zn:2..36").unwrap();
    let r = verify("main3", Some(&c), &RunOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert!(r.instances > 0);
    let opts = RunOptions { mutant: true, ..Default::default() };
    let r = verify("main3", Some(&Corpus::build("zn:30").unwrap()), &opts).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    assert_eq!(r.counterexamples[0].ring, "zn:30");
    assert_eq!(r.counterexamples[0].ideals[0].generators, vec![0]);
    assert!(replay(&r, &Caps::default()).unwrap());
}

#[test]
fn caps_skip_and_record() {
    let caps = Caps { cubic: 16, ..Caps::default() };
    let opts = RunOptions { caps, ..Default::default() };
    let r = verify("main1", Some(&Corpus::build("zn:12, zn:30").unwrap()), &opts).unwrap();
    assert_eq!(r.skipped.len(), 1);
    assert_eq!(r.skipped[0].ring, "zn:30");
    assert!(r.instances > 0);
    let caps = Caps { ring: 8, ..Caps::default() };
    let opts = RunOptions { caps, ..Default::default() };
    let r = verify("rad", Some(&Corpus::build("zn:6, zn:9").unwrap()), &opts).unwrap();
    assert_eq!(r.skipped.len(), 1);
}

#[test]
fn filtered_corpus() {
    let c = Corpus::build("zn:2..36 | irreducible").unwrap();
    let all = verify("main3", Some(&Corpus::build("zn:2..36").unwrap()), &RunOptions::default()).unwrap();
    let some = verify("main3", Some(&c), &RunOptions::default()).unwrap();
    assert_eq!(some.verdict, Verdict::Pass);
    assert_eq!(some.instances, all.instances);
    assert_eq!(some.excluded, 0);
}

#[test]
fn shared_workspace_matches_separate_runs() {
    let c = Corpus::build("zn:2..24, prod:(zn:2..4,zn:2..4)").unwrap();
    let opts = RunOptions::default();
    let ids = ["monoepi", "product1", "special"];
    let together = verify_many(&ids, Some(&c), &opts).unwrap();
    for (id, r) in ids.iter().zip(&together) {
        assert_eq!(&verify(id, Some(&c), &opts).unwrap(), r);
    }
}

#[test]
fn symmetric_order_is_explored_not_asserted() {
    let c = Corpus::build("zn:2..16").unwrap();
    let d = symmetric_divergences(&c, &RunOptions::default()).unwrap();
    assert!(d.iter().any(|x| x.ring == "zn:8" && x.generators == vec![0]));
}
