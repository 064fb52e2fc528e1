//! `rsmzv`: evaluate refined symmetric multiple zeta values, run the
//! property suites and the relation-rank experiment.
//!
//! Exit status: 0 when everything checked passes, 1 when a check fails or
//! a computation errors, 2 on a usage or input error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use rsmzv::config::{parse_primes, Config};
use rsmzv::numerics::Evaluator;
use rsmzv::relations::{conjecture_table, d_sequence, RankOptions, TableRow, DEFAULT_EXACT_BOUND};
use rsmzv::rsmzv::{l_poly_linear, z_rs, zeta_rs, Route};
use rsmzv::suites::{run_suite, Suite};
use rsmzv::{Error, Index, Word, WordPoly};

#[derive(Parser, Debug)]
#[command(name = "rsmzv", version, about = "Refined symmetric multiple zeta values")]
struct Cli {
    /// Working precision in decimal digits (default 60, or RSMZV_DIGITS).
    #[arg(long, global = true)]
    digits: Option<u32>,

    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,

    /// JSON-lines file of cached zeta values, read before and written after.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Value of zeta^RS at an index such as "3,2" ("" for the empty index),
    /// or of Z^RS at a word with --word.
    Eval {
        input: String,
        /// explicit, lpoly, integral or btt
        #[arg(long, default_value = "explicit")]
        route: String,
        /// Read INPUT as a word over 0 and 1 instead of an index.
        #[arg(long)]
        word: bool,
    },
    /// The polynomial L(w;T) of a word over 0 and 1.
    Lpoly { word: String },
    /// Run a property suite: shuffle, harmonic, duality, reversal, btt,
    /// variants, hopf or regcross.
    Verify {
        suite: String,
        /// Highest total weight (default: the suite's own cap).
        #[arg(long)]
        max_weight: Option<usize>,
    },
    /// Ranks of the double shuffle relation space against 2^{k-1} - d_k - d_{k-1}.
    Rank {
        /// Highest weight k.
        #[arg(long, default_value_t = 10)]
        upto: usize,
        /// Also compute the rank over Q up to this weight.
        #[arg(long)]
        exact_upto: Option<usize>,
        /// Comma-separated primes (default: two primes near 2^62).
        #[arg(long)]
        primes: Option<String>,
        /// Print CSV instead of a text table.
        #[arg(long)]
        csv: bool,
    },
    /// The sequence d_0, d_1, … with d_k = d_{k-2} + d_{k-3}.
    Dk {
        /// Last index of the sequence.
        #[arg(long, default_value_t = 20)]
        upto: usize,
    },
}

/// Outcome of a command that ran to completion.
enum Status {
    Pass,
    Fail,
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidWord(_)
            | Error::InvalidIndex(_)
            | Error::InvalidRational(_)
            | Error::NotInH0(_)
            | Error::NotInH(_)
            | Error::UnknownSuite(_)
            | Error::Config(_)
            | Error::BadPrime(_)
            | Error::Precision(_)
            | Error::ExactBoundExceeded { .. }
            | Error::WeightOutOfRange(_)
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_usage_error(&e) { 2 } else { 1 })
        }
    }
}

fn config(cli: &Cli) -> rsmzv::Result<Config> {
    let mut c = Config::from_env()?;
    if let Some(d) = cli.digits {
        c.digits = d;
    }
    if cli.cache.is_some() {
        c.cache_path.clone_from(&cli.cache);
    }
    Ok(c)
}

fn evaluator(c: &Config) -> rsmzv::Result<Evaluator> {
    if c.digits < 10 {
        return Err(Error::Precision(format!("--digits {} is below the minimum of 10", c.digits)));
    }
    let ev = Evaluator::new(c.digits);
    if let Some(p) = &c.cache_path {
        ev.load_cache(p)?;
    }
    Ok(ev)
}

fn save(c: &Config, ev: &Evaluator) -> rsmzv::Result<()> {
    match &c.cache_path {
        Some(p) => ev.save_cache(p),
        None => Ok(()),
    }
}

fn run(cli: &Cli) -> rsmzv::Result<Status> {
    match &cli.command {
        Command::Eval { input, route, word } => eval(cli, input, route, *word),
        Command::Lpoly { word } => lpoly(cli, word),
        Command::Verify { suite, max_weight } => verify(cli, suite, *max_weight),
        Command::Rank { upto, exact_upto, primes, csv } => rank(cli, *upto, *exact_upto, primes.as_deref(), *csv),
        Command::Dk { upto } => {
            let d = d_sequence(*upto);
            if cli.json {
                println!("{}", json!({ "d": d }));
            } else {
                for (k, v) in d.iter().enumerate() {
                    println!("d_{k} = {v}");
                }
            }
            Ok(Status::Pass)
        }
    }
}

fn eval(cli: &Cli, input: &str, route: &str, as_word: bool) -> rsmzv::Result<Status> {
    let c = config(cli)?;
    let route: Route = route.parse()?;
    let (label, key, symbol) = if as_word {
        let w: Word = input.parse()?;
        (format!("Z^RS({w})"), "word", z_rs(&WordPoly::from_word(w))?)
    } else {
        let k: Index = input.parse()?;
        (format!("zeta^RS({k})"), "index", zeta_rs(&k, route))
    };
    let ev = evaluator(&c)?;
    let value = ev.value(&symbol)?;
    save(&c, &ev)?;
    let (re, im) = value.to_decimal(c.digits);
    if cli.json {
        let mut out = json!({
            "symbol": symbol.to_json(),
            "numeric": { "re": re, "im": im, "digits": c.digits },
        });
        out[key] = json!(input);
        if !as_word {
            out["route"] = json!(route.to_string());
        }
        println!("{out}");
    } else {
        println!("{label} = {symbol}");
        match im.strip_prefix('-') {
            Some(abs) => println!("  ~ {re} - {abs} i"),
            None => println!("  ~ {re} + {im} i"),
        }
    }
    Ok(Status::Pass)
}

fn lpoly(cli: &Cli, word: &str) -> rsmzv::Result<Status> {
    let w: Word = word.parse()?;
    let p = l_poly_linear(&WordPoly::from_word(w));
    if cli.json {
        println!("{}", json!({ "word": word, "lpoly": p.to_json() }));
    } else {
        println!("L({w};T) = {p}");
    }
    Ok(Status::Pass)
}

fn verify(cli: &Cli, suite: &str, max_weight: Option<usize>) -> rsmzv::Result<Status> {
    let suite: Suite = suite.parse()?;
    let c = config(cli)?;
    c.validate()?;
    let ev = evaluator(&c)?;
    let w = max_weight.unwrap_or_else(|| c.max_weight(suite));
    let start = Instant::now();
    let report = run_suite(suite, w, &ev, c.guard)?;
    save(&c, &ev)?;
    if cli.json {
        println!("{}", serde_json::to_string(&report)?);
    } else {
        for case in &report.cases {
            let verdict = if case.pass { "PASS" } else { "FAIL" };
            let exact = match case.exact {
                Some(true) => "  exact",
                Some(false) => "  NOT exact",
                None => "",
            };
            println!("{verdict} {suite} {}  residual {}{exact}", case.key, case.residual);
        }
        println!(
            "{suite} (weight <= {w}, {} digits, tolerance {}): {} passed, {} failed in {:.1?}",
            report.digits,
            report.tolerance,
            report.passed,
            report.failed,
            start.elapsed()
        );
    }
    Ok(if report.pass { Status::Pass } else { Status::Fail })
}

fn rank(cli: &Cli, upto: usize, exact_upto: Option<usize>, primes: Option<&str>, csv: bool) -> rsmzv::Result<Status> {
    let c = config(cli)?;
    let primes = match primes {
        Some(p) => parse_primes(p)?,
        None => c.primes.clone(),
    };
    let exact_upto = exact_upto.unwrap_or(0);
    if exact_upto > DEFAULT_EXACT_BOUND {
        return Err(Error::ExactBoundExceeded { k: exact_upto, bound: DEFAULT_EXACT_BOUND });
    }
    let opts = RankOptions { primes, exact_upto, ..RankOptions::default() };
    if csv && !cli.json {
        println!("{}", TableRow::CSV_HEADER);
    } else if !cli.json {
        println!("{:>3} {:>6} {:>10} {:>6} {:>8} {:>6} {:>10}", "k", "dim", "generators", "rank", "expected", "match", "ms");
    }
    let rows = conjecture_table(upto, &opts, |row| {
        for w in &row.warnings {
            eprintln!("warning (k={}): {w}", row.k);
        }
        if cli.json {
            return;
        }
        if csv {
            println!("{}", row.to_csv());
        } else {
            let exact = row.exact_rank.map(|r| format!("  exact {r}")).unwrap_or_default();
            println!(
                "{:>3} {:>6} {:>10} {:>6} {:>8} {:>6} {:>10}{exact}",
                row.k, row.dim, row.generators, row.rank, row.expected, row.matches, row.elapsed_ms
            );
        }
    })?;
    if cli.json {
        println!("{}", serde_json::to_string(&rows)?);
    }
    Ok(if rows.iter().all(|r| r.matches) { Status::Pass } else { Status::Fail })
}
