mod config;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{ArgGroup, Parser, Subcommand};
use serde::Serialize;
use twoabs::lab::{caret, search, theorem, verify_all, verify_many, Corpus, Expr, RingCtx, RunOptions, Verdict, THEOREMS};
use twoabs::{classify, classify_z, parse_ideal, ClassificationReport, Error, FactoredInteger, IdealLattice, OracleCheck, Ring, RingDescriptor};

use config::{CliConfig, Format};

const EXIT_OK: u8 = 0;
const EXIT_THEOREM_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

const SEARCH_CORPUS: &str = "zn:2..120";

#[derive(Debug, Parser)]
#[command(name = "twoabs", version)]
#[command(about = "Classify ideals of finite commutative rings and check statements about 2-absorbing primary ideals")]
struct Cli {
    /// Output format; defaults to the config file value, then `table`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Cap overrides such as `cubic=512,lattice=64,ring=2048`.
    #[arg(long, global = true)]
    caps: Option<String>,
    /// Worker threads for verify and search; output does not depend on it.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    /// Flat `key = value` file with defaults for the flags above and `corpus`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify one ideal of a finite ring.
    Classify {
        /// Ring descriptor, e.g. `zn:12`, `prod:(zn:2,zn:4)`, `idz:(zn:2)^2`.
        #[arg(long)]
        ring: String,
        /// Ideal as `(g)` or `[g1,g2,...]` in element codes.
        #[arg(long)]
        ideal: String,
    },
    /// Classify the ideal nZ of the integers from the factorization of n.
    Zideal {
        /// A non-negative integer or a factorization such as `2^2*3*5`.
        n: String,
    },
    /// List every ideal of a ring with its classification and Hasse covers.
    Enumerate {
        #[arg(long)]
        ring: String,
    },
    /// Check registered statements exhaustively on a corpus.
    #[command(group(ArgGroup::new("which").required(true).args(["theorem", "all", "list"])))]
    Verify {
        #[arg(long)]
        theorem: Option<String>,
        #[arg(long)]
        all: bool,
        /// Print the registered ids and statements.
        #[arg(long)]
        list: bool,
        /// Corpus spec or file; `default` uses each statement's own corpus.
        #[arg(long)]
        corpus: Option<String>,
        /// Check the deliberately weakened variants instead.
        #[arg(long)]
        mutant: bool,
    },
    /// List corpus ideals whose classification satisfies an expression.
    Search {
        /// Expression over flags and orders, e.g. `u2ap && !twoAbsorbing`.
        #[arg(long = "where")]
        expr: String,
        #[arg(long)]
        corpus: Option<String>,
        #[arg(long)]
        limit: Option<usize>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_cap() {
            EXIT_CAP
        } else if matches!(e, Error::OracleDisagreement { .. }) {
            EXIT_THEOREM_FAILED
        } else {
            EXIT_USAGE
        };
        let mut message = e.to_string();
        if let Some(c) = caret(&e) {
            message = format!("{message}\n{c}");
        }
        if let Error::UnknownTheorem(_) = e {
            let ids: Vec<&str> = THEOREMS.iter().map(|t| t.id).collect();
            message = format!("{message}\nvalid ids: {}", ids.join(", "));
        }
        Failure { code, message }
    }
}

fn usage(message: String) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message,
    }
}

struct Settings {
    config: CliConfig,
    opts: RunOptions,
}

impl Settings {
    fn resolve(cli: &Cli) -> Result<Settings, Failure> {
        let mut config = match &cli.config {
            Some(path) => CliConfig::load(path).map_err(usage)?,
            None => CliConfig::default(),
        };
        if let Some(f) = cli.format {
            config.format = f;
        }
        if let Some(spec) = &cli.caps {
            config.caps = config.caps.with_overrides(spec)?;
        }
        if let Some(w) = cli.workers {
            config.workers = w as usize;
        }
        let opts = RunOptions {
            caps: config.caps,
            workers: config.workers,
            mutant: false,
        };
        Ok(Settings { config, opts })
    }

    fn json(&self) -> bool {
        self.config.format == Format::Json
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn build_ring(spec: &str, s: &Settings) -> Result<Arc<Ring>, Failure> {
    let desc: RingDescriptor = spec.parse()?;
    Ok(Arc::new(Ring::build_with(&desc, &s.opts.caps)?))
}

fn cmd_classify(ring: &str, ideal: &str, s: &Settings) -> Result<String, Failure> {
    let ring = build_ring(ring, s)?;
    let lattice = IdealLattice::enumerate_with(&ring, &s.opts.caps)?;
    let q = parse_ideal(&ring, ideal)?;
    if !q.is_proper() {
        return Err(Error::ImproperIdeal.into());
    }
    let report = classify(&q, &lattice, &s.opts.caps)?;
    Ok(if s.json() {
        let mut out = report.to_json();
        out.push('\n');
        out
    } else {
        render::report(&report)
    })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ZOutput {
    report: ClassificationReport,
    oracle: &'static str,
    oracle_modulus: Option<u64>,
}

fn cmd_zideal(n: &str, s: &Settings) -> Result<String, Failure> {
    let f: FactoredInteger = n.parse().map_err(|e: Error| {
        let mut fail = Failure::from(e);
        if fail.code == EXIT_CAP {
            fail.message.push_str("\nhint: give the factorization instead, e.g. 2^40*3^5*1009");
        }
        fail
    })?;
    let (report, check) = classify_z(&f, &s.opts.caps)?;
    if s.json() {
        let (oracle, oracle_modulus) = match check {
            OracleCheck::Agreed { modulus } => ("agreed", Some(modulus)),
            OracleCheck::Skipped { modulus, .. } => ("skipped", Some(modulus)),
            OracleCheck::Analytic => ("notApplicable", None),
        };
        return Ok(json(&ZOutput {
            report,
            oracle,
            oracle_modulus,
        }));
    }
    Ok(format!("{}{}\n", render::report(&report), render::oracle(&check)))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct LatticeIdeal {
    index: usize,
    generators: Vec<u64>,
    size: usize,
    report: Option<ClassificationReport>,
}

#[derive(Serialize)]
struct LatticeOutput {
    ring: String,
    size: u32,
    ideals: Vec<LatticeIdeal>,
    covers: Vec<(usize, usize)>,
}

fn cmd_enumerate(ring: &str, s: &Settings) -> Result<String, Failure> {
    let desc: RingDescriptor = ring.parse()?;
    let ctx = RingCtx::build(&desc, &s.opts.caps)?;
    let lattice = ctx.lattice();
    let covers = lattice.covers();
    let mut rows = Vec::new();
    for i in 0..lattice.len() {
        let report = if i == ctx.top() { None } else { Some(ctx.report(i)?) };
        rows.push(render::LatticeRow {
            generators: ctx.generators(i),
            size: lattice.get(i).len(),
            report,
            covered_by: covers.iter().filter(|c| c.0 == i).map(|c| c.1).collect(),
        });
    }
    let name = ctx.ring().to_string();
    if !s.json() {
        return Ok(render::lattice(&name, &rows));
    }
    let ideals = rows
        .into_iter()
        .enumerate()
        .map(|(index, r)| LatticeIdeal {
            index,
            generators: r.generators,
            size: r.size,
            report: r.report,
        })
        .collect();
    Ok(json(&LatticeOutput {
        ring: name,
        size: ctx.ring().size(),
        ideals,
        covers,
    }))
}

#[derive(Serialize)]
struct TheoremEntry {
    id: &'static str,
    statement: &'static str,
    mutation: &'static str,
    corpus: &'static str,
}

fn corpus_arg(flag: Option<&String>, s: &Settings) -> Option<String> {
    flag.or(s.config.corpus.as_ref()).cloned()
}

fn cmd_verify(
    id: Option<&str>,
    list: bool,
    corpus: Option<&String>,
    mutant: bool,
    s: &Settings,
) -> Result<(String, u8), Failure> {
    if list {
        let out = if s.json() {
            let entries: Vec<TheoremEntry> = THEOREMS
                .iter()
                .map(|t| TheoremEntry {
                    id: t.id,
                    statement: t.statement,
                    mutation: t.mutation,
                    corpus: t.corpus,
                })
                .collect();
            json(&entries)
        } else {
            render::theorems(THEOREMS)
        };
        return Ok((out, EXIT_OK));
    }
    if let Some(id) = id {
        theorem(id)?;
    }
    let corpus = match corpus_arg(corpus, s).as_deref() {
        None | Some("default") => None,
        Some(spec) => Some(Corpus::build(spec)?),
    };
    let opts = RunOptions { mutant, ..s.opts };
    let results = match id {
        Some(id) => verify_many(&[id], corpus.as_ref(), &opts)?,
        None => verify_all(corpus.as_ref(), &opts)?,
    };
    let code = if results.iter().all(|r| r.verdict == Verdict::Pass) {
        EXIT_OK
    } else {
        EXIT_THEOREM_FAILED
    };
    let out = if s.json() {
        eprintln!("{}", render::summary(&results));
        json(&results)
    } else {
        render::verify(&results)
    };
    Ok((out, code))
}

fn cmd_search(expr: &str, corpus: Option<&String>, limit: Option<usize>, s: &Settings) -> Result<String, Failure> {
    let expr = Expr::parse(expr)?;
    let spec = corpus_arg(corpus, s).unwrap_or_else(|| SEARCH_CORPUS.to_string());
    let corpus = Corpus::build(&spec)?;
    let hits = search(&expr, &corpus, &s.opts, limit)?;
    Ok(if s.json() { json(&hits) } else { render::search(&hits) })
}

fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    let s = Settings::resolve(cli)?;
    match &cli.command {
        Command::Classify { ring, ideal } => Ok((cmd_classify(ring, ideal, &s)?, EXIT_OK)),
        Command::Zideal { n } => Ok((cmd_zideal(n, &s)?, EXIT_OK)),
        Command::Enumerate { ring } => Ok((cmd_enumerate(ring, &s)?, EXIT_OK)),
        Command::Verify {
            theorem,
            all: _,
            list,
            corpus,
            mutant,
        } => cmd_verify(theorem.as_deref(), *list, corpus.as_ref(), *mutant, &s),
        Command::Search { expr, corpus, limit } => Ok((cmd_search(expr, corpus.as_ref(), *limit, &s)?, EXIT_OK)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
