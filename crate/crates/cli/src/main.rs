use clap::{Args, Parser, Subcommand};
use krawtchouk_cli::commands;
use krawtchouk_cli::report::{emit, OutputOptions, Report};
use krawtchouk_cli::sweep::SweepConfig;
use krawtchouk_core::krawtchouk::Delta;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact-arithmetic toolkit for Krawtchouk polynomials: valuation tables,
/// Newton polygons, irreducibility certificates, Galois-group evidence, and
/// the specialization sweep.
#[derive(Parser)]
#[command(name = "krawtchouk", version, about)]
struct Cli {
    /// Emit the report as JSON instead of human-readable lines.
    #[arg(long, global = true)]
    json: bool,
    /// Prefer CSV for tabular payloads.
    #[arg(long, global = true)]
    csv: bool,
    /// Suppress per-check output; only the final status line is printed.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce the worked computations.
    Repro {
        #[command(subcommand)]
        what: ReproCommand,
    },
    /// Run the verification sweeps.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Specialization grid experiment over (n, delta, t = a/b).
    Sweep(SweepArgs),
    /// Rational point search on one of the two sextic curves.
    Hyper {
        /// Parity class: 0 or 1.
        #[arg(long)]
        delta: u32,
        /// Height bound on reduced t = a/b (max of |a| and b).
        #[arg(long)]
        height: u64,
    },
    /// Consistency cross-checks.
    Crosscheck {
        #[command(subcommand)]
        what: CrosscheckCommand,
    },
}

#[derive(Subcommand)]
enum ReproCommand {
    /// Valuation table and 2-adic Newton polygon of K_n^(n) (default n = 19,
    /// checked against the known table).
    NpExample {
        #[arg(long, default_value_t = 19)]
        degree: u32,
        /// Write the polygon as an SVG figure.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Discriminant factorization and Galois evidence for the degree-10
    /// underlying polynomial of K_20^(20).
    K20,
    /// Depressed degree-3 underlying polynomials against their displayed
    /// coefficient polynomials.
    Cubics {
        #[arg(long, default_value_t = 10)]
        samples: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Degree-based polygons for all n <= n-max and integer t in the window
    /// [n, n + 2^(j_1)).
    Theorem {
        #[arg(long = "n-max")]
        n_max: u32,
    },
    /// Eisenstein certificates for K_(2^k)^(t), t in [2^k, 2^(k+1)).
    Corollary {
        #[arg(long = "k-max")]
        k_max: u32,
    },
    /// The t = -1 family: certificates, constant coefficients, sign
    /// variations, root products.
    #[command(name = "prop-minus1")]
    PropMinus1 {
        #[arg(long = "k-max")]
        k_max: u32,
    },
}

#[derive(Subcommand)]
enum CrosscheckCommand {
    /// Sextic values against depressed-cubic discriminants.
    Sextic {
        #[arg(long)]
        delta: u32,
        #[arg(long, default_value_t = 20)]
        samples: u32,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long = "n-max", default_value_t = 12)]
    n_max: u32,
    #[arg(long = "n-min", default_value_t = 1)]
    n_min: u32,
    /// Numerator bound: |a| <= bound.
    #[arg(long = "num-bound", default_value_t = 50)]
    num_bound: i64,
    /// Denominator bound: 1 <= b <= bound.
    #[arg(long = "den-bound", default_value_t = 50)]
    den_bound: i64,
    /// Restrict the parity classes (repeatable; default both).
    #[arg(long = "delta")]
    deltas: Vec<u32>,
    #[arg(long = "prime-bound", default_value_t = 500)]
    prime_bound: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    workers: usize,
    /// Output CSV path; defaults to sweep.csv under $KRAWTCHOUK_OUT_DIR
    /// (or the current directory).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Continue from the complete rows of an interrupted run.
    #[arg(long)]
    resume: bool,
    /// Record real row timings (makes output run-dependent).
    #[arg(long)]
    timings: bool,
    /// Randomly sub-sample this many primes below the bound (seeded,
    /// deterministic); exhaustive sampling when omitted.
    #[arg(long = "sample-primes")]
    sample_primes: Option<usize>,
}

fn default_out_path(name: &str) -> PathBuf {
    match std::env::var_os("KRAWTCHOUK_OUT_DIR") {
        Some(dir) => PathBuf::from(dir).join(name),
        None => PathBuf::from(name),
    }
}

fn delta_arg(v: u32) -> Delta {
    Delta::from_u32(v).unwrap_or_else(|| {
        eprintln!("error: --delta must be 0 or 1, got {v}");
        std::process::exit(2);
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = OutputOptions {
        json: cli.json,
        csv: cli.csv,
        quiet: cli.quiet,
    };
    let report: Report = match cli.command {
        Command::Repro { what } => match what {
            ReproCommand::NpExample { degree, svg } => {
                commands::np_example::run(degree, svg.as_deref(), opts.quiet || opts.json)
            }
            ReproCommand::K20 => commands::k20::run(),
            ReproCommand::Cubics { samples, seed } => commands::cubics::run(samples, seed),
        },
        Command::Verify { what } => match what {
            VerifyCommand::Theorem { n_max } => {
                if n_max < 1 {
                    eprintln!("error: --n-max must be at least 1");
                    return ExitCode::from(2);
                }
                commands::theorem::run(n_max)
            }
            VerifyCommand::Corollary { k_max } => commands::corollary::run(k_max),
            VerifyCommand::PropMinus1 { k_max } => {
                if k_max < 2 {
                    eprintln!("error: --k-max must be at least 2 (the statement starts at k = 2)");
                    return ExitCode::from(2);
                }
                commands::prop_minus1::run(k_max)
            }
        },
        Command::Sweep(args) => {
            let deltas = if args.deltas.is_empty() {
                vec![0, 1]
            } else {
                let mut d = args.deltas.clone();
                d.sort_unstable();
                d.dedup();
                d
            };
            let cfg = SweepConfig {
                n_min: args.n_min,
                n_max: args.n_max,
                numerator_bound: args.num_bound,
                denominator_bound: args.den_bound,
                deltas,
                prime_bound: args.prime_bound,
                seed: args.seed,
                workers: args.workers,
                sample_primes: args.sample_primes,
                timings: args.timings,
            };
            let out = args.out.unwrap_or_else(|| default_out_path("sweep.csv"));
            commands::sweep_cmd::run(&cfg, &out, args.resume, opts.quiet)
        }
        Command::Hyper { delta, height } => {
            commands::hyper::run(delta_arg(delta), height, opts.quiet || opts.json, opts.csv)
        }
        Command::Crosscheck { what } => match what {
            CrosscheckCommand::Sextic {
                delta,
                samples,
                seed,
            } => commands::crosscheck::run(delta_arg(delta), samples, seed),
        },
    };
    emit(&report, &opts);
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
