//! `ratiomono` command-line front end.
//!
//! Exit codes: 0 when every check holds, 1 when a property fails or does
//! not apply, 2 on usage or input errors.

mod report;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use ratiomono::fuzz::{run_campaign_with, Execution};
use ratiomono::quartic::QuadratureError;
use ratiomono::{
    bm_polynomial, bm_shifted_seq, parse_coeff_text, taylor_shift, verify_identity, CampaignSpec, CampaignTarget,
    CoeffSeq, Polynomial, Property, Rational, ShiftAlgorithm, Status,
};
use serde::Serialize;

use crate::report::{Inputs, ReportDocument};

#[derive(Parser, Debug)]
#[command(name = "ratiomono", version, about = "Exact checks for ratio-monotone polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the coefficients of P(x + c), one per line, ascending degree
    Shift {
        /// Shift constant, e.g. `1`, `-3/2` or `0.25`
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, default_value = "horner", value_parser = parse_algo)]
        algo: ShiftAlgorithm,
        /// Coefficient file, or `-` for standard input
        file: PathBuf,
    },
    /// Check sequence properties and print the verdicts as JSON
    Check {
        /// Comma-separated property names, or `all`
        #[arg(long, default_value = "all")]
        props: String,
        /// Coefficient file, or `-` for standard input
        file: PathBuf,
    },
    /// Print the Boros–Moll row c_0(m)..c_m(m), or P_m(x) with --power-basis
    BorosMoll {
        #[arg(long, allow_negative_numbers = true)]
        m: u32,
        #[arg(long)]
        power_basis: bool,
        /// Emit a JSON report instead of one coefficient per line
        #[arg(long)]
        json: bool,
    },
    /// Compare the quartic integral by quadrature against its closed form
    VerifyIntegral {
        #[arg(long, allow_negative_numbers = true)]
        m: u32,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Run a seeded randomized campaign and print the report as JSON
    Fuzz {
        /// theorem1, lemma1, lemma2, lemma3, corollary or separation
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        degree_min: Option<usize>,
        #[arg(long)]
        degree_max: Option<usize>,
        /// Bound on numerators and denominators of generated entries
        #[arg(long)]
        bound: Option<u64>,
        /// Shift constant for the corollary target (default 1)
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        /// Let the corollary target explore c < 1; failures are reported as findings
        #[arg(long)]
        allow_below_one: bool,
        /// Draw integer inputs only
        #[arg(long)]
        integer_only: bool,
        /// Worker threads; the report does not depend on this
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn parse_algo(s: &str) -> Result<ShiftAlgorithm, String> {
    s.parse()
}

/// Usage or input error, reported on stderr with exit code 2.
#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        Self(e.to_string())
    }
}

type CmdResult = Result<bool, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let outcome = match cli.command {
        Command::Shift { c, algo, file } => cmd_shift(&c, algo, &file),
        Command::Check { props, file } => cmd_check(&props, &file, started),
        Command::BorosMoll { m, power_basis, json } => cmd_boros_moll(m, power_basis, json, started),
        Command::VerifyIntegral { m, x, tol } => cmd_verify_integral(m, x, tol, started),
        Command::Fuzz {
            target,
            trials,
            seed,
            degree_min,
            degree_max,
            bound,
            c,
            allow_below_one,
            integer_only,
            threads,
        } => {
            let spec = build_campaign(
                &target,
                trials,
                seed,
                (degree_min, degree_max),
                bound,
                c.as_deref(),
                allow_below_one,
                integer_only,
            );
            spec.and_then(|spec| cmd_fuzz(spec, threads, started))
        }
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn read_coefficients(path: &PathBuf) -> Result<CoeffSeq, InputError> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?
    };
    parse_coeff_text(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn parse_rational_arg(flag: &str, text: &str) -> Result<Rational, InputError> {
    text.parse::<Rational>().map_err(|e| InputError(format!("--{flag} {text:?}: {e}")))
}

fn print_json<T: Serialize>(doc: &T) -> Result<(), InputError> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, doc)?;
    writeln!(out)?;
    Ok(())
}

fn print_lines(values: &[Rational]) -> Result<(), InputError> {
    let mut out = io::stdout().lock();
    for v in values {
        writeln!(out, "{v}")?;
    }
    Ok(())
}

fn cmd_shift(c: &str, algo: ShiftAlgorithm, file: &PathBuf) -> CmdResult {
    let c = parse_rational_arg("c", c)?;
    let p = Polynomial::new(read_coefficients(file)?);
    print_lines(taylor_shift(&p, &c, algo).coeffs().as_slice())?;
    Ok(true)
}

fn parse_props(list: &str) -> Result<Vec<Property>, InputError> {
    let mut props = Vec::new();
    for name in list.split(',').map(str::trim) {
        if name == "all" {
            props.extend(Property::ALL);
        } else {
            props.push(name.parse::<Property>()?);
        }
    }
    if props.is_empty() {
        return Err(InputError("no properties requested".into()));
    }
    let mut seen = Vec::new();
    props.retain(|p| {
        let fresh = !seen.contains(p);
        seen.push(*p);
        fresh
    });
    Ok(props)
}

fn cmd_check(props: &str, file: &PathBuf, started: Instant) -> CmdResult {
    let props = parse_props(props)?;
    let seq = read_coefficients(file)?;
    let verdicts: Vec<_> = props.iter().map(|p| p.check(&seq)).collect();
    let all_hold = verdicts.iter().all(|v| v.status == Status::Holds);
    let inputs = Inputs::new()
        .with("file", file.display())
        .with("sequence", &seq)
        .with("props", props.iter().map(|p| p.name()).collect::<Vec<_>>().join(","));
    print_json(&ReportDocument::new("check", inputs, verdicts, started))?;
    Ok(all_hold)
}

#[derive(Serialize)]
struct BorosMollResult {
    m: u32,
    basis: &'static str,
    coefficients: CoeffSeq,
}

fn cmd_boros_moll(m: u32, power_basis: bool, json: bool, started: Instant) -> CmdResult {
    let (basis, coefficients) = if power_basis {
        ("power", bm_polynomial(m).into_coeffs())
    } else {
        ("shifted", bm_shifted_seq(m))
    };
    if json {
        let inputs = Inputs::new().with("m", m).with("basis", basis);
        let result = BorosMollResult { m, basis, coefficients };
        print_json(&ReportDocument::new("boros-moll", inputs, vec![result], started))?;
    } else {
        print_lines(coefficients.as_slice())?;
    }
    Ok(true)
}

fn cmd_verify_integral(m: u32, x: f64, tol: f64, started: Instant) -> CmdResult {
    let check = match verify_identity(x, m, tol) {
        Ok(check) => check,
        // the integrator giving up is a failed check, not bad input
        Err(e @ QuadratureError::NotConverged { .. }) => {
            eprintln!("error: {e}");
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    let pass = check.pass;
    let inputs = Inputs::new().with("m", m).with("x", x).with("tol", tol);
    print_json(&ReportDocument::new("verify-integral", inputs, vec![check], started))?;
    Ok(pass)
}

#[allow(clippy::too_many_arguments)]
fn build_campaign(
    target: &str,
    trials: u64,
    seed: u64,
    degrees: (Option<usize>, Option<usize>),
    bound: Option<u64>,
    c: Option<&str>,
    allow_below_one: bool,
    integer_only: bool,
) -> Result<CampaignSpec, InputError> {
    let mut target: CampaignTarget = target.parse()?;
    match (&mut target, c) {
        (CampaignTarget::Corollary { c: slot }, Some(text)) => *slot = parse_rational_arg("c", text)?,
        (_, Some(_)) => return Err(InputError("--c only applies to the corollary target".into())),
        _ => {}
    }
    let mut spec = CampaignSpec::new(target, trials, seed);
    let (lo, hi) = spec.degree_range;
    spec.degree_range = (degrees.0.unwrap_or(lo), degrees.1.unwrap_or(hi));
    if let Some(bound) = bound {
        spec.magnitude_bound = bound;
    }
    spec.allow_below_one = allow_below_one;
    spec.integer_only = integer_only;
    spec.validate()?;
    Ok(spec)
}

fn cmd_fuzz(spec: CampaignSpec, threads: Option<usize>, started: Instant) -> CmdResult {
    let report = match threads {
        Some(0) => return Err(InputError("--threads must be at least 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()?
            .install(|| run_campaign_with(&spec, Execution::Parallel))?,
        None => run_campaign_with(&spec, Execution::Parallel)?,
    };
    let passed = report.passed();
    let inputs = Inputs::new()
        .with("target", spec.target.name())
        .with("trials", spec.trials)
        .with("seed", spec.seed)
        .with("degree_min", spec.degree_range.0)
        .with("degree_max", spec.degree_range.1)
        .with("bound", spec.magnitude_bound);
    let inputs = match &spec.target {
        CampaignTarget::Corollary { c } => inputs.with("c", c),
        _ => inputs,
    };
    print_json(&ReportDocument::new("fuzz", inputs, vec![report], started))?;
    Ok(passed)
}
