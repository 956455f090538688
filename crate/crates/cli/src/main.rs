//! `dgrow` — exact product-set growth in the infinite dihedral group.
//!
//! Every subcommand prints a JSON report (`command`, `params`, `result`,
//! `elapsed_ms`) with integers as decimal strings; `table` can also render
//! markdown or CSV. Exit codes: 0 success, 1 verification failure, 2 usage
//! error, 3 capacity error.

mod report;
mod suites;
mod table;

use std::path::PathBuf;
use std::process;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use dihedral_growth::asymptotics::{
    convergent_parameter, diagonal_lower_bound, diagonal_upper_bound, growth_exponent_estimates,
    growth_exponent_limit, growth_leading, EXPONENT_DIGITS,
};
use dihedral_growth::counting::{
    growth, growth_max, optimal_reflections_table, vector_count_series, GrowthQuery,
};
use dihedral_growth::generic::GeneratorTuple;
use dihedral_growth::oracle::{enumerate_product_set, DEFAULT_ELEMENT_CAP};
use dihedral_growth::Error;

use report::{emit, params_of, Report};
use suites::SuiteResult;

const EXIT_VERIFY_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_CAPACITY: i32 = 3;

#[derive(Parser)]
#[command(
    name = "dgrow",
    version,
    about = "Exact product-set growth in the infinite dihedral group"
)]
struct Cli {
    /// Write the output to FILE (atomically) instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    /// Thread-pool size for parallel table and diagonal evaluation
    #[arg(long, global = true, value_name = "T")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Growth value for a set size, reflection count, and word length
    Gamma {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
    },
    /// Maximum growth value over all reflection counts, with the argmax set
    GammaMax {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Table of optimal reflection counts over ranges of k and n
    Table {
        #[arg(long, default_value_t = 2)]
        k_min: usize,
        #[arg(long, default_value_t = 10)]
        k_max: usize,
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Md)]
        format: TableFormat,
    },
    /// Brute-force |S^n| on the canonical generic tuple
    Oracle {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        /// Element cap for the frontier expansion
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        cap: usize,
    },
    /// Run internal verification suites (all of them by default)
    Verify {
        #[arg(long, value_enum)]
        suite: Option<Suite>,
    },
    /// Coefficients of the vector-count generating series for one dimension
    Series {
        #[arg(long)]
        x: usize,
        #[arg(long)]
        ymax: usize,
    },
    /// Exact leading growth coefficient for fixed k and p
    Asympt {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: usize,
    },
    /// Diagonal growth-exponent estimates with exact bound checks
    Exponent {
        /// Comma-separated diagonal indices, e.g. 20,40,80
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        samples: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Md,
    Csv,
    Json,
}

impl TableFormat {
    fn name(self) -> &'static str {
        match self {
            TableFormat::Md => "md",
            TableFormat::Csv => "csv",
            TableFormat::Json => "json",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Core,
    Image,
    Witness,
    Asymptotic,
    Diagonal,
}

struct Outcome {
    text: String,
    verify_failed: bool,
}

fn main() {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(&cli.command) {
        Ok(outcome) => {
            if let Err(e) = emit(&outcome.text, cli.output.as_deref()) {
                eprintln!("error: cannot write output: {e}");
                process::exit(EXIT_USAGE);
            }
            process::exit(if outcome.verify_failed {
                EXIT_VERIFY_FAILED
            } else {
                0
            });
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::InvalidInput(_) => EXIT_USAGE,
                Error::CapacityExceeded(_) => EXIT_CAPACITY,
            };
            process::exit(code);
        }
    }
}

fn run(command: &Command) -> Result<Outcome, Error> {
    let started = Instant::now();
    match command {
        Command::Gamma { k, p, n } => {
            let query = GrowthQuery::new(*k, *p, *n)?;
            let value = growth(&query);
            Ok(wrap(
                "gamma",
                params_of(&[
                    ("k", k.to_string()),
                    ("p", p.to_string()),
                    ("n", n.to_string()),
                ]),
                json!({ "gamma": value.to_string() }),
                started,
            ))
        }
        Command::GammaMax { k, n } => {
            let (value, argmax) = growth_max(*k, *n)?;
            let argmax: Vec<String> = argmax.iter().map(|p| p.to_string()).collect();
            Ok(wrap(
                "gamma-max",
                params_of(&[("k", k.to_string()), ("n", n.to_string())]),
                json!({ "gamma": value.to_string(), "argmax": argmax }),
                started,
            ))
        }
        Command::Table {
            k_min,
            k_max,
            n_min,
            n_max,
            format,
        } => {
            if k_min > k_max || n_min > n_max {
                return Err(Error::InvalidInput(
                    "table ranges must satisfy min <= max".into(),
                ));
            }
            let table = optimal_reflections_table(*k_min..=*k_max, *n_min..=*n_max)?;
            match format {
                TableFormat::Md => Ok(Outcome {
                    text: table::to_markdown(&table),
                    verify_failed: false,
                }),
                TableFormat::Csv => Ok(Outcome {
                    text: table::to_csv(&table),
                    verify_failed: false,
                }),
                TableFormat::Json => Ok(wrap(
                    "table",
                    params_of(&[
                        ("k_min", k_min.to_string()),
                        ("k_max", k_max.to_string()),
                        ("n_min", n_min.to_string()),
                        ("n_max", n_max.to_string()),
                        ("format", format.name().to_string()),
                    ]),
                    table::to_json(&table),
                    started,
                )),
            }
        }
        Command::Oracle { k, p, n, cap } => {
            let tuple = GeneratorTuple::new(*k, *p, *n)?;
            let size = enumerate_product_set(tuple.elements(), *n, *cap)?.len();
            Ok(wrap(
                "oracle",
                params_of(&[
                    ("k", k.to_string()),
                    ("p", p.to_string()),
                    ("n", n.to_string()),
                    ("cap", cap.to_string()),
                ]),
                json!({ "size": size.to_string() }),
                started,
            ))
        }
        Command::Verify { suite } => {
            let results: Vec<SuiteResult> = match suite {
                Some(Suite::Core) => vec![suites::core_suite()],
                Some(Suite::Image) => vec![suites::image_suite()],
                Some(Suite::Witness) => vec![suites::witness_suite()],
                Some(Suite::Asymptotic) => vec![suites::asymptotic_suite()],
                Some(Suite::Diagonal) => vec![suites::diagonal_suite()],
                None => vec![
                    suites::core_suite(),
                    suites::image_suite(),
                    suites::witness_suite(),
                    suites::asymptotic_suite(),
                    suites::diagonal_suite(),
                ],
            };
            let failed = results.iter().any(|r| !r.failures.is_empty());
            let suites_json: Vec<Value> = results
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "checks": r.checks.to_string(),
                        "failures": r.failures.len().to_string(),
                        "messages": r.failures,
                    })
                })
                .collect();
            let suite_name = match suite {
                Some(s) => suite_chosen(*s).to_string(),
                None => "all".to_string(),
            };
            let mut outcome = wrap(
                "verify",
                params_of(&[("suite", suite_name)]),
                json!({
                    "status": if failed { "fail" } else { "pass" },
                    "suites": suites_json,
                }),
                started,
            );
            outcome.verify_failed = failed;
            Ok(outcome)
        }
        Command::Series { x, ymax } => {
            let coefficients: Vec<String> = vector_count_series(*x, *ymax)
                .iter()
                .map(|c| c.to_string())
                .collect();
            Ok(wrap(
                "series",
                params_of(&[("x", x.to_string()), ("ymax", ymax.to_string())]),
                json!({ "coefficients": coefficients }),
                started,
            ))
        }
        Command::Asympt { k, p } => {
            let coefficient = growth_leading(*k, *p)?;
            Ok(wrap(
                "asympt",
                params_of(&[("k", k.to_string()), ("p", p.to_string())]),
                json!({
                    "numerator": coefficient.numer().to_string(),
                    "denominator": coefficient.denom().to_string(),
                }),
                started,
            ))
        }
        Command::Exponent { samples } => {
            let n_max = *samples.iter().max().expect("clap enforces >= 1 sample");
            let estimates = growth_exponent_estimates(n_max, samples)?;
            let parameter = convergent_parameter();
            let limit = growth_exponent_limit() + 1e-9;
            let mut entries = Vec::with_capacity(estimates.len());
            for e in &estimates {
                let (value, _) = growth_max(e.n(), e.n())?;
                let upper = diagonal_upper_bound(e.n(), &parameter)?;
                let upper_holds =
                    BigRational::from(num_bigint::BigInt::from(value.clone())) <= upper;
                let lower_holds =
                    growth(&GrowthQuery::new(e.n(), 1, e.n())?) >= diagonal_lower_bound(e.n());
                entries.push(json!({
                    "n": e.n().to_string(),
                    "value": e.decimal_string(),
                    "below_limit": e.to_f64() <= limit,
                    "upper_bound_holds": upper_holds,
                    "lower_bound_holds": lower_holds,
                }));
            }
            let mut params = Map::new();
            params.insert(
                "samples".to_string(),
                Value::Array(
                    samples
                        .iter()
                        .map(|n| Value::String(n.to_string()))
                        .collect(),
                ),
            );
            Ok(wrap(
                "exponent",
                params,
                json!({
                    "estimates": entries,
                    "limit": limit_decimal_string(),
                }),
                started,
            ))
        }
    }
}

fn suite_chosen(s: Suite) -> &'static str {
    match s {
        Suite::Core => "core",
        Suite::Image => "image",
        Suite::Witness => "witness",
        Suite::Asymptotic => "asymptotic",
        Suite::Diagonal => "diagonal",
    }
}

fn wrap(command: &'static str, params: Map<String, Value>, result: Value, started: Instant) -> Outcome {
    let report = Report {
        command,
        params,
        result,
        elapsed_ms: started.elapsed().as_millis(),
    };
    Outcome {
        text: report.render(),
        verify_failed: false,
    }
}

/// `3 + 2*sqrt(2)` rendered with the same precision as the estimates.
fn limit_decimal_string() -> String {
    let digits = EXPONENT_DIGITS as u32;
    let shift = BigUint::from(10u32).pow(digits);
    let scaled = (BigUint::from(8u32) * &shift * &shift).sqrt() + BigUint::from(3u32) * &shift;
    let int_part = &scaled / &shift;
    let frac_part = &scaled % &shift;
    debug_assert!(int_part.to_u32() == Some(5));
    format!(
        "{}.{:0>width$}",
        int_part,
        frac_part.to_string(),
        width = EXPONENT_DIGITS
    )
}
