//! `semigaps`: gap sets, minimal relations, Hilbert numerators and exact
//! gap power sums for numerical semigroups with two or three generators.

mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use semigaps::bench::{bench_tuples, run_bench, to_csv};
use semigaps::checks::{run_suite, SuiteConfig};
use semigaps::{
    classify, gap_set, minimal_relations, numerator_closed_form_for, numerator_from_oracle,
    power_sums_auto, validate, BernoulliCache, Error, Mode,
};

use report::Format;

const DEFAULT_NMAX_CAP: usize = 64;
const NMAX_CAP_VAR: &str = "SEMIGAPS_NMAX_CAP";
/// Largest generator for which `powersum` verifies by default.
const VERIFY_DEFAULT_LIMIT: i64 = 10_000;

#[derive(Debug, Parser)]
#[command(
    name = "semigaps",
    version,
    about = "Exact gap power sums of numerical semigroups"
)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Fast,
    Verify,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Gap list, genus and Frobenius number.
    Gaps {
        #[arg(required = true, num_args = 2..=3, allow_negative_numbers = true)]
        generators: Vec<i64>,
    },
    /// Power sums g_0 .. g_N of the gaps.
    Powersum {
        #[arg(required = true, num_args = 2..=3, allow_negative_numbers = true)]
        generators: Vec<i64>,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        /// Defaults to verify when every generator is at most 10^4.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
    },
    /// Minimal relation matrix and symmetry class of a triple.
    Relations {
        #[arg(required = true, num_args = 3, allow_negative_numbers = true)]
        generators: Vec<i64>,
    },
    /// Hilbert series numerator, closed form against enumeration.
    Hilbert {
        #[arg(required = true, num_args = 2..=3, allow_negative_numbers = true)]
        generators: Vec<i64>,
    },
    /// Time the closed form against the enumeration oracle; prints CSV.
    Bench {
        #[arg(long, default_value_t = 1000)]
        d_max: u64,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the invariant suite on random tuples.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Full-size campaign (200 pairs, 130 triples).
        #[arg(long)]
        full: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Verification(e.to_string())
        }
    }
}

fn nmax_cap() -> Result<usize, Failure> {
    match std::env::var(NMAX_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Input(format!("{NMAX_CAP_VAR}={v:?} is not a nonnegative integer"))
        }),
        Err(_) => Ok(DEFAULT_NMAX_CAP),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Gaps { generators } => {
            let g = validate(&generators)?;
            Ok(report::gaps(format, &g, &gap_set(&g)))
        }
        Command::Powersum {
            generators,
            n_max,
            mode,
        } => {
            let cap = nmax_cap()?;
            if n_max > cap {
                return Err(Failure::Input(format!(
                    "--n-max {n_max} exceeds the cap {cap} (set {NMAX_CAP_VAR} to raise it)"
                )));
            }
            let largest = generators.iter().copied().max().unwrap_or(0);
            let mode = match mode {
                Some(ModeArg::Fast) => Mode::Fast,
                Some(ModeArg::Verify) => Mode::Verify,
                None if largest <= VERIFY_DEFAULT_LIMIT => Mode::Verify,
                None => {
                    eprintln!(
                        "warning: generators exceed {VERIFY_DEFAULT_LIMIT}; running in fast mode without the enumeration check"
                    );
                    Mode::Fast
                }
            };
            let cache = BernoulliCache::new();
            let r = power_sums_auto(&generators, n_max, mode, &cache)?;
            Ok(report::power_sums(format, &r))
        }
        Command::Relations { generators } => {
            let g = validate(&generators)?;
            let rel = minimal_relations(&g)?;
            let cls = classify(&g, &rel)?;
            Ok(report::relations(format, &g, &rel, &cls))
        }
        Command::Hilbert { generators } => {
            let g = validate(&generators)?;
            let closed = numerator_closed_form_for(&g)?;
            let oracle = numerator_from_oracle(&g);
            let out = report::hilbert(format, &g, &closed, &oracle);
            if closed != oracle {
                eprint!("{out}");
                return Err(Failure::Verification(
                    "[gen0] closed-form numerator differs from the enumerated one".into(),
                ));
            }
            Ok(out)
        }
        Command::Bench {
            d_max,
            trials,
            n_max,
            seed,
        } => {
            if d_max < 10 {
                return Err(Failure::Input("--d-max must be at least 10".into()));
            }
            let rows = run_bench(&bench_tuples(d_max, seed), n_max, trials)?;
            let csv = to_csv(&rows);
            if rows.iter().any(|r| !r.agree) {
                eprint!("{csv}");
                return Err(Failure::Verification(
                    "closed form and oracle disagree in bench".into(),
                ));
            }
            Ok(csv)
        }
        Command::Selftest { seed, full } => {
            let cfg = if full {
                SuiteConfig::full(seed)
            } else {
                SuiteConfig::quick(seed)
            };
            let outcomes = run_suite(&cfg);
            let out = report::selftest(format, &outcomes);
            if outcomes.iter().all(|o| o.passed()) {
                Ok(out)
            } else {
                eprint!("{out}");
                Err(Failure::Verification("selftest failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
