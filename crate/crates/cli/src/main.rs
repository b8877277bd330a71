//! `sylow` — exact computation and verification of Sylow branching
//! coefficients for symmetric groups at odd primes.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 enumeration budget exceeded.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sylow_branching::branching::omega_intersection_bounds;
use sylow_branching::characters::{branching, export_mn_cache, import_mn_cache, omega_table};
use sylow_branching::error::Error;
use sylow_branching::partitions::Partition;
use sylow_branching::wreath::{Label, DEFAULT_GROUP_BUDGET};

use sylow_cli::output::{predict_json, predict_row, print_predict_table};
use sylow_cli::suites::{run_suite, to_f64, SUITES};

#[derive(Parser)]
#[command(name = "sylow", version, about = "Sylow branching coefficients for symmetric groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CacheArgs {
    /// Load a character-value cache before running.
    #[arg(long, value_name = "FILE")]
    cache_in: Option<String>,
    /// Write the character-value cache after running.
    #[arg(long, value_name = "FILE")]
    cache_out: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form bounds and Ω description for one label or all orbits.
    Predict {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        n: u64,
        /// Sequence label, e.g. "0,1" or "(0,0,0)|(0,0),(1,0)".
        #[arg(short, conflicts_with = "all_orbits")]
        s: Option<String>,
        /// Predict every orbit representative.
        #[arg(long)]
        all_orbits: bool,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force multiplicities: one λ, or the full Ω set.
    Oracle {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        n: u64,
        #[arg(short)]
        s: String,
        /// Partition, e.g. "24,1"; omit for the full Ω set.
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Run a verification suite (predictor vs oracle campaigns).
    Verify {
        /// One of: lr-props, table1, table2-slices, n30, base-lemmas,
        /// multiplicities, ratio, invariants, all.
        suite: String,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Box-counting bounds (and optionally exact values) for |Ω_n|/p(n).
    Ratio {
        #[arg(short)]
        p: u32,
        /// Comma-separated list of n values.
        #[arg(short)]
        n: String,
        /// Also compute the exact ratio by oracle intersection.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

fn effective_budget(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("SYLOW_BUDGET")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_GROUP_BUDGET)
}

fn parse_partition(text: &str) -> Result<Partition, Error> {
    let parts = text
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad partition entry `{x}`")))
        })
        .collect::<Result<Vec<u32>, Error>>()?;
    Partition::try_new(parts)
}

fn load_cache(args: &CacheArgs) -> Result<(), Error> {
    if let Some(path) = &args.cache_in {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))?;
        let value: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("cache file {path}: {e}")))?;
        let count = import_mn_cache(&value)?;
        eprintln!("loaded {count} character values from {path}");
    }
    Ok(())
}

fn store_cache(args: &CacheArgs) -> Result<(), Error> {
    if let Some(path) = &args.cache_out {
        let value = export_mn_cache();
        std::fs::write(path, serde_json::to_string(&value).expect("serializable"))
            .map_err(|e| Error::InvalidArgument(format!("cannot write {path}: {e}")))?;
        eprintln!("wrote character-value cache to {path}");
    }
    Ok(())
}

fn run() -> Result<ExitCode, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Predict { p, n, s, all_orbits, json } => {
            let labels: Vec<Label> = if all_orbits {
                sylow_branching::branching::orbit_labels(p, n)?
            } else {
                let text = s.ok_or_else(|| {
                    Error::InvalidArgument("predict needs -s LABEL or --all-orbits".into())
                })?;
                vec![Label::from_parts(p, n, &text)?]
            };
            for label in &labels {
                if label.n() != n {
                    return Err(Error::InvalidArgument(format!(
                        "label {label} describes n = {}, not {n}",
                        label.n()
                    )));
                }
            }
            let rows: Vec<_> = labels.iter().map(predict_row).collect();
            if json {
                println!("{}", serde_json::to_string_pretty(&predict_json(p, n, &rows)).unwrap());
            } else {
                if p < 5 {
                    eprintln!("note: closed-form predictions are established for p >= 5 only");
                }
                print_predict_table(p, n, &rows);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { p, n, s, lambda, budget, json, cache } => {
            load_cache(&cache)?;
            let label = Label::from_parts(p, n, &s)?;
            if label.n() != n {
                return Err(Error::InvalidArgument(format!(
                    "label {label} describes n = {}, not {n}",
                    label.n()
                )));
            }
            let budget = effective_budget(budget);
            if let Some(lt) = lambda {
                let lam = parse_partition(&lt)?;
                let result = branching(&lam, &label, budget)?;
                if json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "schema": 1, "p": p, "n": n,
                            "label": result.label,
                            "lambda": result.lambda,
                            "z": result.z.to_string(),
                        })
                    );
                } else {
                    println!("Z^{lam}_φ{label} = {}", result.z);
                }
            } else {
                let table = omega_table(&label, budget)?;
                if json {
                    let omega: Vec<serde_json::Value> = table
                        .iter()
                        .map(|(lam, z)| {
                            serde_json::json!({ "lambda": lam, "z": z.to_string() })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({
                            "schema": 1, "p": p, "n": n,
                            "label": label.to_string(),
                            "count": table.len(),
                            "omega": omega,
                        })
                    );
                } else {
                    for (lam, z) in table.iter() {
                        println!("{lam}: {z}");
                    }
                    println!("|Ω(φ{label})| = {}", table.len());
                }
            }
            store_cache(&cache)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, budget, json, cache } => {
            load_cache(&cache)?;
            let budget = effective_budget(budget);
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut failures = 0;
            let mut reports = Vec::new();
            for name in names {
                let report = run_suite(name, budget)?;
                failures += report.failures();
                if !json {
                    report.print_text();
                }
                reports.push(report);
            }
            if json {
                let value = serde_json::json!({
                    "schema": 1,
                    "failures": failures,
                    "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            }
            store_cache(&cache)?;
            if failures == 0 {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Ratio { p, n, exact, budget, json } => {
            let budget = effective_budget(budget);
            let ns = n
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad n value `{x}`")))
                })
                .collect::<Result<Vec<u64>, Error>>()?;
            let mut rows = Vec::new();
            for n in ns {
                rows.push(omega_intersection_bounds(p, n, exact, budget)?);
            }
            if json {
                let encoded: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|b| {
                        serde_json::json!({
                            "n": b.n,
                            "m_min": b.m_min,
                            "M_min": b.big_m_min,
                            "lower": b.lower.to_string(),
                            "lower_approx": to_f64(&b.lower),
                            "upper": b.upper.to_string(),
                            "upper_approx": to_f64(&b.upper),
                            "exact": b.exact.as_ref().map(|r| r.to_string()),
                            "exact_count": b.exact_count,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "schema": 1, "p": p, "rows": encoded,
                    }))
                    .unwrap()
                );
            } else {
                println!(
                    "{:>6} {:>8} {:>8} {:>12} {:>12} {:>12}",
                    "n", "m_min", "M_min", "lower", "upper", "exact"
                );
                let mut last = None;
                let mut nondecreasing = true;
                for b in &rows {
                    let exact_str = match (&b.exact, b.exact_count) {
                        (Some(r), Some(c)) => format!("{c} ({r})"),
                        _ => "-".into(),
                    };
                    println!(
                        "{:>6} {:>8} {:>8} {:>12.6} {:>12.6} {:>12}",
                        b.n,
                        b.m_min,
                        b.big_m_min,
                        to_f64(&b.lower),
                        to_f64(&b.upper),
                        exact_str
                    );
                    if let Some(prev) = &last {
                        if b.lower < *prev {
                            nondecreasing = false;
                        }
                    }
                    last = Some(b.lower.clone());
                }
                if rows.len() > 1 {
                    println!("lower bound nondecreasing: {nondecreasing}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded(_) => ExitCode::from(3),
                Error::InvalidArgument(_) | Error::Parse(_) => ExitCode::from(2),
                Error::Integrity(_) => ExitCode::from(1),
            }
        }
    }
}
