use std::process::{Command, Output};

use twoabs::ClassificationReport;

fn twoabs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twoabs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = twoabs(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

fn lines(out: &str) -> Vec<&str> {
    out.lines().collect()
}

#[test]
fn classify_examples() {
    let out = ok(&["classify", "--ring", "zn:12", "--ideal", "(0)", "--format", "json"]);
    assert!(out.contains("\"twoOrd\": 2"));
    let out = ok(&["classify", "--ring", "zn:6", "--ideal", "(0)"]);
    assert!(lines(&out).contains(&"special: yes"));
    let out = ok(&["classify", "--ring", "idz:(zn:2)^2", "--ideal", "(0)"]);
    let l = lines(&out);
    assert!(l.contains(&"ord: 2") && l.contains(&"primary: yes"));
}

#[test]
fn table_rows_follow_the_implication_chain() {
    let out = ok(&["classify", "--ring", "zn:8", "--ideal", "(2)"]);
    let pos = |label: &str| out.find(&format!("\n{label}: ")).unwrap();
    let chain = ["prime", "primary", "2-absorbing", "2AP", "u2AP", "special"];
    assert!(chain.windows(2).all(|w| pos(w[0]) < pos(w[1])));
}

#[test]
fn zideal_examples() {
    let out = ok(&["zideal", "12"]);
    let l = lines(&out);
    for row in ["2AP: yes", "2-absorbing: no", "special: no", "2-ord: 2", "2-e: 2"] {
        assert!(l.contains(&row), "{row}");
    }
    assert!(l.contains(&"oracle: agrees with the zero ideal of Z/12"));
    assert!(lines(&ok(&["zideal", "0"])).contains(&"prime: yes"));
    assert!(lines(&ok(&["zideal", "2^2*3*5"])).contains(&"2AP: no"));
}

#[test]
fn zideal_beyond_the_factorization_cap_suggests_factored_form() {
    let o = twoabs(&["zideal", "100000000000000"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("factorization"));
    assert!(o.stdout.is_empty());
    let out = ok(&["zideal", "2^40*3^5*1009"]);
    assert!(lines(&out).contains(&"2AP: no"));
    assert!(out.contains("oracle: skipped"));
}

#[test]
fn json_reports_round_trip_byte_identical() {
    for (ring, ideal) in [("zn:12", "(0)"), ("prod:(zn:2,zn:4)", "[2,1]"), ("idz:(zn:3)^1", "(0)")] {
        let out = ok(&["classify", "--ring", ring, "--ideal", ideal, "--format", "json"]);
        let report = ClassificationReport::from_json(&out).unwrap();
        assert_eq!(format!("{}\n", report.to_json()), out);
    }
    let out = ok(&["zideal", "60", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["oracle"], "agreed");
    let report = ClassificationReport::from_json(&value["report"].to_string()).unwrap();
    assert!(!report.flags.two_absorbing_primary);
}

#[test]
fn exit_codes() {
    assert_eq!(twoabs(&["classify", "--ring", "zn:", "--ideal", "(0)"]).status.code(), Some(2));
    assert_eq!(twoabs(&["classify", "--ring", "zn:12", "--ideal", "(1)"]).status.code(), Some(2));
    assert_eq!(twoabs(&["classify", "--ring", "zn:5000", "--ideal", "(0)"]).status.code(), Some(3));
    assert_eq!(
        twoabs(&["--caps", "cubic=8", "classify", "--ring", "zn:12", "--ideal", "(0)"]).status.code(),
        Some(3)
    );
    assert_eq!(twoabs(&["--caps", "cubic=0", "zideal", "4"]).status.code(), Some(2));
    assert_eq!(twoabs(&["verify"]).status.code(), Some(2));
    assert_eq!(twoabs(&["bogus"]).status.code(), Some(2));
}

#[test]
fn verify_examples() {
    let out = ok(&["verify", "--theorem", "main3", "--corpus", "zn:2..36"]);
    assert!(out.starts_with("main3  pass"));
    assert!(out.ends_with("1 theorems, 0 failures (75 instances)\n"));

    let o = twoabs(&["verify", "--theorem", "chain"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("out of scope"));

    let o = twoabs(&["verify", "--theorem", "main4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("valid ids: main1, special"));

    let o = twoabs(&["verify", "--theorem", "main3", "--mutant", "--corpus", "zn:2..36"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("counterexample on zn:30: (0)"));

    let out = ok(&["verify", "--list"]);
    assert_eq!(out.lines().count(), 26);
}

#[test]
fn verify_all_is_independent_of_worker_count() {
    let run = |workers: &str| {
        let o = twoabs(&["verify", "--all", "--corpus", "default", "--format", "json", "--workers", workers]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert!(stderr(&o).starts_with("26 theorems, 0 failures"));
        o.stdout
    };
    let one = run("1");
    assert_eq!(one, run("8"));
    let results: serde_json::Value = serde_json::from_slice(&one).unwrap();
    assert_eq!(results.as_array().unwrap().len(), 26);
}

#[test]
fn search_examples() {
    let out = ok(&["search", "--where", "u2ap && !twoAbsorbing", "--corpus", "zn:2..60"]);
    assert!(lines(&out).iter().any(|l| l.starts_with("zn:12/(0) ")));
    let out = ok(&["search", "--where", "irreducible && !maximal", "--corpus", "prod:(zn:2,zn:2,zn:2)"]);
    assert_eq!(out, "0 matches\n");
    assert_eq!(ok(&["search", "--where", "false"]), "0 matches\n");

    let out = ok(&["search", "--where", "special", "--corpus", "zn:2..30", "--limit", "3", "--format", "json"]);
    let hits: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(hits.as_array().unwrap().len(), 3);
}

#[test]
fn search_parse_errors_show_a_caret() {
    let o = twoabs(&["search", "--where", "prime && bogus"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("prime && bogus\n         ^ unknown name `bogus`"), "{err}");
}

#[test]
fn enumerate_lists_ideals_and_covers() {
    let out = ok(&["enumerate", "--ring", "zn:12", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ideals"].as_array().unwrap().len(), 6);
    assert_eq!(v["covers"].as_array().unwrap().len(), 7);
    assert!(v["ideals"][5]["report"].is_null());
    let table = ok(&["enumerate", "--ring", "zn:12"]);
    assert_eq!(table.lines().count(), 7);
    assert!(table.lines().all(|l| l == l.trim_end()));
}

#[test]
fn config_file_values_yield_to_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("twoabs.conf");
    std::fs::write(&path, "format = json\ncubic = 8\ncorpus = zn:2..10\n").unwrap();
    let p = path.to_str().unwrap();

    let o = twoabs(&["--config", p, "classify", "--ring", "zn:12", "--ideal", "(0)"]);
    assert_eq!(o.status.code(), Some(3));
    let out = ok(&["--config", p, "--caps", "cubic=64", "classify", "--ring", "zn:12", "--ideal", "(0)"]);
    assert!(out.starts_with('{'));
    let out = ok(&["--config", p, "--caps", "cubic=64", "--format", "table", "search", "--where", "prime"]);
    assert_eq!(out.lines().last(), Some("11 matches"));

    std::fs::write(&path, "colour = red\n").unwrap();
    assert_eq!(twoabs(&["--config", p, "zideal", "4"]).status.code(), Some(2));
}
