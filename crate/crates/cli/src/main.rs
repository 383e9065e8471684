//! `qpolar` command-line entry point.
//!
//! Exit codes: 0 success, 1 failed identity check, 2 usage error, 3 I/O error.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qpolar::{
    phase_state, run_all, sweep, AlgebraConfig, CVector, OperatorName, OperatorSet,
    VerificationReport, DEFAULT_ROOT_INDEX, DEFAULT_TOL,
};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "qpolar", version)]
#[command(about = "q-deformed boson algebra at roots of unity: operators, spectra and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct AlgebraArgs {
    /// Fock cutoff; the space has dimension s + 1 (s >= 2).
    #[arg(long)]
    s: usize,

    /// Root index, q = exp(2 pi i k / (s+1)); must be coprime to s + 1.
    #[arg(long, default_value_t = DEFAULT_ROOT_INDEX)]
    k: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build one operator and write it as matrix JSON
    Build {
        #[command(flatten)]
        algebra: AlgebraArgs,

        /// Operator name (a, adag, n, g, h, hdag, f, bigh, atilde, atildedag,
        /// ntilde, braceHdag, braceHdag1, sqrtBraceHdag, sqrtBraceHdag1, ...)
        #[arg(long)]
        op: OperatorName,

        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Run the identity catalog for one configuration
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,

        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,

        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },

    /// Run the identity catalog for every s in a range
    Sweep {
        #[arg(long)]
        s_min: usize,

        #[arg(long)]
        s_max: usize,

        #[arg(long, default_value_t = DEFAULT_ROOT_INDEX)]
        k: u64,

        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,

        /// Emit a JSON array of reports.
        #[arg(long)]
        json: bool,
    },

    /// Print the closed-form spectrum of g, bigh, braceHdag or braceHdag1
    Spectrum {
        #[command(flatten)]
        algebra: AlgebraArgs,

        #[arg(long)]
        op: OperatorName,
    },

    /// Write all phase states F|m> as a JSON array of vectors
    PhaseStates {
        #[command(flatten)]
        algebra: AlgebraArgs,

        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(String),
}

impl From<qpolar::Error> for Failure {
    fn from(e: qpolar::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn config(args: &AlgebraArgs, tol: f64) -> Result<AlgebraConfig, Failure> {
    Ok(AlgebraConfig::new(args.s, args.k, tol)?)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => writeln!(io::stdout(), "{text}").map_err(|e| Failure::Io(e.to_string())),
    }
}

fn to_json<T: serde::Serialize + ?Sized>(value: &T) -> Result<String, Failure> {
    serde_json::to_string(value).map_err(|e| Failure::Io(e.to_string()))
}

fn print_report(r: &VerificationReport) {
    println!(
        "s = {}, k = {}, tol = {:e}, threshold = {:e}",
        r.config.s(),
        r.config.k(),
        r.config.tol(),
        r.config.threshold()
    );
    for c in &r.checks {
        println!(
            "  {:<24} {:>12.3e}  {}",
            c.name,
            c.deviation,
            if c.pass { "PASS" } else { "FAIL" }
        );
    }
    println!(
        "{} {}/{} checks",
        if r.overall_pass { "PASS" } else { "FAIL" },
        r.passed(),
        r.checks.len()
    );
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Build { algebra, op, out } => {
            let cfg = config(&algebra, DEFAULT_TOL)?;
            let ops = OperatorSet::build(&cfg);
            emit(&to_json(ops.get(op))?, out.as_ref())?;
            Ok(true)
        }
        Command::Verify { algebra, tol, json } => {
            let cfg = config(&algebra, tol)?;
            let report = run_all(&cfg);
            if json {
                println!("{}", to_json(&report)?);
            } else {
                print_report(&report);
            }
            Ok(report.overall_pass)
        }
        Command::Sweep {
            s_min,
            s_max,
            k,
            tol,
            json,
        } => {
            let reports = sweep(s_min, s_max, k, tol)?;
            let passed = reports.iter().filter(|r| r.overall_pass).count();
            if json {
                println!("{}", to_json(&reports)?);
            } else {
                for r in &reports {
                    let failed: Vec<_> = r
                        .checks
                        .iter()
                        .filter(|c| !c.pass)
                        .map(|c| c.name.as_str())
                        .collect();
                    let status = if r.overall_pass { "PASS" } else { "FAIL" };
                    println!("s = {:>3}  {status}  {}", r.config.s(), failed.join(" "));
                }
                println!("passed {passed}/{}", reports.len());
            }
            Ok(passed == reports.len())
        }
        Command::Spectrum { algebra, op } => {
            let cfg = config(&algebra, DEFAULT_TOL)?;
            let spectrum = op.closed_form_spectrum(&cfg).ok_or_else(|| {
                Failure::Usage(format!(
                    "no closed-form spectrum for '{op}'; use g, bigh, braceHdag or braceHdag1"
                ))
            })?;
            for (n, z) in spectrum.iter().enumerate() {
                println!("{n}\t{:.17e}\t{:.17e}", z.re, z.im);
            }
            Ok(true)
        }
        Command::PhaseStates { algebra, out } => {
            let cfg = config(&algebra, DEFAULT_TOL)?;
            let states = (0..cfg.dim())
                .map(|m| phase_state(m, &cfg))
                .collect::<Result<Vec<CVector>, _>>()?;
            emit(&to_json(&states)?, out.as_ref())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_CHECK_FAILED),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}
