//! `qps` — exact verification of Gaussian-binomial identities, subspace
//! counts over prime fields, and divided-power straightening, from the
//! command line.
//!
//! ```text
//! qps verify [--suites LIST] [--max N] [--max-m N] [--max-s N]
//!            [--max-t N] [--max-n N] [--primes LIST] [--budget N]
//!            [--seed N] [--random-words N] [--json FILE]
//! qps nf EXPR [--check oracle]
//! qps straighten WORD [--check weyl=N1,N2,...]
//! ```
//!
//! `verify` streams one JSON object per check to stdout (and, with
//! `--json`, to a file as well).  Exit codes: 0 when every check passes,
//! 1 on any verification mismatch, 2 on usage or parse errors.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qps_cli::{ndjson_line, run_suite, Suite, SweepConfig};
use qps_core::algebra::{straighten, verify_straighten};
use qps_core::grammar::{
    parse_cartan, parse_cartan_oracle, parse_word, render_algebra, render_cartan,
};

#[derive(Parser)]
#[command(
    name = "qps",
    version,
    about = "Exact checks for Gaussian-binomial identities, subspace counts, \
             and divided-power straightening"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification sweeps; one JSON report per line on stdout.
    Verify(VerifyArgs),
    /// Print the normal form of a Cartan-algebra expression.
    Nf(NfArgs),
    /// Print the PBW expansion of a word in the integral form.
    Straighten(StraightenArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated suite names (default: all suites).
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    suites: Vec<String>,

    /// Set all four sweep bounds at once.
    #[arg(long, allow_negative_numbers = true, value_name = "N")]
    max: Option<i64>,

    /// Bound on the first identity parameter m.
    #[arg(long, allow_negative_numbers = true, value_name = "N")]
    max_m: Option<i64>,

    /// Bound on the identity parameter s.
    #[arg(long, allow_negative_numbers = true, value_name = "N")]
    max_s: Option<i64>,

    /// Bound on the identity parameter t.
    #[arg(long, allow_negative_numbers = true, value_name = "N")]
    max_t: Option<i64>,

    /// Bound on ambient dimensions and single-identity sizes.
    #[arg(long, allow_negative_numbers = true, value_name = "N")]
    max_n: Option<i64>,

    /// Comma-separated field characteristics for the geometry suites.
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    primes: Vec<u64>,

    /// Enumeration budget (points visited per enumeration call).
    #[arg(long, value_name = "N")]
    budget: Option<u128>,

    /// Seed for the randomized word corpus.
    #[arg(long, value_name = "N")]
    seed: Option<u64>,

    /// Number of randomized words in the straightening suite.
    #[arg(long, value_name = "N")]
    random_words: Option<usize>,

    /// Also write the JSON report stream to this file.
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct NfArgs {
    /// Expression in the Cartan grammar, e.g. "K[2;1] * K + q^2 - 1".
    expr: String,

    /// Extra check: `oracle` re-evaluates the expression directly in the
    /// K-Laurent model and compares with the normal form's expansion.
    #[arg(long, value_name = "MODE")]
    check: Option<String>,
}

#[derive(Args)]
struct StraightenArgs {
    /// Word in the generators, e.g. "E(2) K[0;1] F(1) K^-1".
    word: String,

    /// Extra check: `weyl=N1,N2,...` compares the word and its expansion
    /// as operators on the weight-N Weyl modules.
    #[arg(long, value_name = "MODE")]
    check: Option<String>,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify(args) => cmd_verify(args),
        Command::Nf(args) => cmd_nf(args),
        Command::Straighten(args) => cmd_straighten(args),
    }
}

/// Prints a usage-class error and yields exit code 2.
fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let mut cfg = SweepConfig::default();
    if let Some(max) = args.max {
        cfg.max_m = max;
        cfg.max_s = max;
        cfg.max_t = max;
        cfg.max_n = max;
    }
    if let Some(v) = args.max_m {
        cfg.max_m = v;
    }
    if let Some(v) = args.max_s {
        cfg.max_s = v;
    }
    if let Some(v) = args.max_t {
        cfg.max_t = v;
    }
    if let Some(v) = args.max_n {
        cfg.max_n = v;
    }
    if !args.primes.is_empty() {
        cfg.primes = args.primes.clone();
    }
    if let Some(v) = args.budget {
        cfg.budget = v;
    }
    if let Some(v) = args.seed {
        cfg.seed = v;
    }
    if let Some(v) = args.random_words {
        cfg.random_words = v;
    }
    if !args.suites.is_empty() {
        let mut suites = Vec::new();
        for name in &args.suites {
            match name.parse::<Suite>() {
                Ok(suite) => {
                    if !suites.contains(&suite) {
                        suites.push(suite);
                    }
                }
                Err(msg) => return usage_error(msg),
            }
        }
        cfg.suites = suites;
    }
    if let Err(msg) = cfg.validate() {
        return usage_error(msg);
    }

    let mut file = match &args.json {
        Some(path) => match File::create(path) {
            Ok(f) => Some(BufWriter::new(f)),
            Err(e) => return usage_error(format_args!("cannot create {}: {e}", path.display())),
        },
        None => None,
    };

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut all_ok = true;
    // Suites stream in canonical order, each suite's box in lexicographic
    // order, so two runs with the same configuration emit the same lines.
    for suite in Suite::ALL {
        if !cfg.suites.contains(&suite) {
            continue;
        }
        let reports = match run_suite(suite, &cfg) {
            Ok(reports) => reports,
            Err(e) => return usage_error(format_args!("suite {suite}: {e}")),
        };
        for timed in &reports {
            all_ok &= timed.report.equal;
            let line = ndjson_line(timed);
            if let Err(e) = writeln!(out, "{line}") {
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    // The consumer stopped reading (e.g. `| head`); stop
                    // quietly with the verdict on what was emitted.
                    return if all_ok {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    };
                }
                return usage_error(format_args!("writing stdout: {e}"));
            }
            if let Some(f) = &mut file {
                if let Err(e) = writeln!(f, "{line}") {
                    return usage_error(format_args!("writing report file: {e}"));
                }
            }
        }
    }
    if let Some(mut f) = file {
        if let Err(e) = f.flush() {
            return usage_error(format_args!("writing report file: {e}"));
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_nf(args: NfArgs) -> ExitCode {
    let element = match parse_cartan(&args.expr) {
        Ok(e) => e,
        Err(e) => return usage_error(e),
    };
    println!("{}", render_cartan(&element));
    match args.check.as_deref() {
        None => ExitCode::SUCCESS,
        Some("oracle") => {
            let direct = parse_cartan_oracle(&args.expr)
                .expect("expression already parsed through the basis route");
            let via_basis = element.expand_oracle();
            if direct == via_basis {
                eprintln!("oracle check: ok");
                ExitCode::SUCCESS
            } else {
                eprintln!(
                    "oracle check: MISMATCH\n  direct:    {}\n  via basis: {}",
                    direct.value.canonical_string(),
                    via_basis.value.canonical_string()
                );
                ExitCode::from(1)
            }
        }
        Some(other) => usage_error(format_args!(
            "unknown --check mode '{other}' (expected 'oracle')"
        )),
    }
}

fn cmd_straighten(args: StraightenArgs) -> ExitCode {
    let word = match parse_word(&args.word) {
        Ok(w) => w,
        Err(e) => return usage_error(e),
    };
    println!("{}", render_algebra(&straighten(&word)));
    match args.check.as_deref() {
        None => ExitCode::SUCCESS,
        Some(mode) => {
            let Some(list) = mode.strip_prefix("weyl=") else {
                return usage_error(format_args!(
                    "unknown --check mode '{mode}' (expected 'weyl=N1,N2,...')"
                ));
            };
            let mut weights = Vec::new();
            for part in list.split(',') {
                match part.trim().parse::<u32>() {
                    Ok(n) => weights.push(n),
                    Err(_) => {
                        return usage_error(format_args!(
                            "--check weyl: '{part}' is not a nonnegative integer"
                        ))
                    }
                }
            }
            if weights.is_empty() {
                return usage_error("--check weyl needs at least one weight");
            }
            let report = verify_straighten(&word, &weights);
            if report.equal {
                eprintln!("weyl check: ok on weights {weights:?}");
                ExitCode::SUCCESS
            } else {
                eprintln!(
                    "weyl check: MISMATCH\n  word action:      {}\n  expansion action: {}",
                    report.lhs, report.rhs
                );
                ExitCode::from(1)
            }
        }
    }
}
