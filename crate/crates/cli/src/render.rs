use std::fmt::Write;

use twoabs::lab::{SearchHit, TheoremCheckResult, Theorem, Verdict};
use twoabs::{ClassificationReport, OracleCheck};

/// Flags along the implication chain, then the rest.
const FLAG_ROWS: [(&str, &str); 11] = [
    ("prime", "prime"),
    ("primary", "primary"),
    ("2-absorbing", "twoAbsorbing"),
    ("2AP", "twoAbsorbingPrimary"),
    ("u2AP", "uniformlyTwoAbsorbingPrimary"),
    ("special", "special"),
    ("maximal", "maximal"),
    ("uniformly primary", "uniformlyPrimary"),
    ("Noether strongly 2AP", "noetherStrongly2AP"),
    ("irreducible", "irreducible"),
    ("divided prime radical", "dividedPrimeRadical"),
];

/// Columns of the lattice listing, again in chain order.
const FLAG_COLUMNS: [(&str, &str); 6] = [
    ("prime", "prime"),
    ("primary", "primary"),
    ("2abs", "twoAbsorbing"),
    ("2AP", "twoAbsorbingPrimary"),
    ("u2AP", "uniformlyTwoAbsorbingPrimary"),
    ("special", "special"),
];

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn order(o: Option<u32>) -> String {
    o.map_or_else(|| "-".to_string(), |n| n.to_string())
}

/// `(g)` or `[g1,g2,...]`, or `nZ` for ideals of the integers.
pub fn ideal_name(ring: &str, gens: &[u64]) -> String {
    if ring == "Z" {
        return format!("{}Z", gens.first().copied().unwrap_or(0));
    }
    match gens {
        [g] => format!("({g})"),
        _ => {
            let gs: Vec<String> = gens.iter().map(u64::to_string).collect();
            format!("[{}]", gs.join(","))
        }
    }
}

pub fn report(r: &ClassificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ring: {}", r.ring);
    let _ = writeln!(out, "ideal: {}", ideal_name(&r.ring, &r.generators));
    if let Some(n) = r.element_count {
        let _ = writeln!(out, "elements: {n}");
    }
    for (label, name) in FLAG_ROWS {
        let _ = writeln!(out, "{label}: {}", yes_no(r.flags.get(name).unwrap_or(false)));
    }
    let o = &r.orders;
    let _ = writeln!(out, "ord: {}", order(o.ord));
    let _ = writeln!(out, "2-ord: {}", order(o.two_ord));
    let _ = writeln!(out, "2-e: {}", order(o.two_exp));
    let _ = writeln!(out, "radical exponent: {}", order(o.radical_exponent));
    let _ = writeln!(out, "minimal primes: {}", r.radical_shape);
    for (label, name) in FLAG_ROWS {
        if let Some(w) = r.witnesses.get(name) {
            let _ = writeln!(out, "witness for not {label}: {w:?}");
        }
    }
    out
}

pub fn oracle(check: &OracleCheck) -> String {
    match check {
        OracleCheck::Agreed { modulus } => format!("oracle: agrees with the zero ideal of Z/{modulus}"),
        OracleCheck::Skipped { modulus, cap } => {
            format!("oracle: skipped, Z/{modulus} is above the scan cap {cap}")
        }
        OracleCheck::Analytic => "oracle: not applicable to 0Z".to_string(),
    }
}

pub struct LatticeRow {
    pub generators: Vec<u64>,
    pub size: usize,
    pub report: Option<ClassificationReport>,
    pub covered_by: Vec<usize>,
}

pub fn lattice(ring: &str, rows: &[LatticeRow]) -> String {
    let names: Vec<String> = rows.iter().map(|r| ideal_name(ring, &r.generators)).collect();
    let w = names.iter().map(String::len).max().unwrap_or(0).max(5);
    let mut out = String::new();
    let _ = write!(out, "{:>3}  {:<w$}  {:>5}", "#", "ideal", "size");
    for (label, _) in FLAG_COLUMNS {
        let _ = write!(out, "  {label}");
    }
    let _ = writeln!(out, "  ord  2-ord  covered by");
    for (i, (row, name)) in rows.iter().zip(&names).enumerate() {
        let _ = write!(out, "{i:>3}  {name:<w$}  {:>5}", row.size);
        for (label, flag) in FLAG_COLUMNS {
            let cell = row
                .report
                .as_ref()
                .map_or("-", |r| yes_no(r.flags.get(flag).unwrap_or(false)));
            let _ = write!(out, "  {cell:<width$}", width = label.len());
        }
        let (ord, two_ord) = row
            .report
            .as_ref()
            .map_or(("-".to_string(), "-".to_string()), |r| (order(r.orders.ord), order(r.orders.two_ord)));
        let covers: Vec<String> = row.covered_by.iter().map(usize::to_string).collect();
        let covers = if covers.is_empty() { "-".to_string() } else { covers.join(" ") };
        let _ = writeln!(out, "  {ord:<3}  {two_ord:<5}  {covers}");
    }
    out
}

pub fn theorems(list: &[Theorem]) -> String {
    let w = list.iter().map(|t| t.id.len()).max().unwrap_or(0);
    let mut out = String::new();
    for t in list {
        let _ = writeln!(out, "{:<w$}  {}", t.id, t.statement);
    }
    out
}

pub fn verify(results: &[TheoremCheckResult]) -> String {
    let w = results.iter().map(|r| r.theorem.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in results {
        let verdict = match r.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
        };
        let _ = writeln!(
            out,
            "{:<w$}  {verdict}  {} rings  {} instances  {} excluded  {} skipped  {} failures",
            r.theorem,
            r.rings,
            r.instances,
            r.excluded,
            r.skipped.len(),
            r.failures,
        );
        for s in &r.skipped {
            let _ = writeln!(out, "    skipped {}: {}", s.ring, s.reason);
        }
        for c in &r.counterexamples {
            let ideals: Vec<String> = c.ideals.iter().map(|i| ideal_name(&i.ring, &i.generators)).collect();
            let _ = writeln!(
                out,
                "    counterexample on {}: {} witness {:?}: {}",
                c.ring,
                ideals.join(" "),
                c.witness,
                c.clause
            );
        }
    }
    let _ = writeln!(out, "{}", summary(results));
    out
}

pub fn summary(results: &[TheoremCheckResult]) -> String {
    let failing = results.iter().filter(|r| r.verdict == Verdict::Fail).count();
    let instances: u64 = results.iter().map(|r| r.instances).sum();
    format!(
        "{} theorems, {failing} failures ({instances} instances)",
        results.len()
    )
}

pub fn search(hits: &[SearchHit]) -> String {
    let mut out = String::new();
    for h in hits {
        let o = &h.report.orders;
        let _ = writeln!(
            out,
            "{}/{}  ord {}  2-ord {}  2-e {}",
            h.ring,
            ideal_name(&h.ring, &h.generators),
            order(o.ord),
            order(o.two_ord),
            order(o.two_exp)
        );
    }
    let _ = writeln!(out, "{} matches", hits.len());
    out
}
