//! Command-line front end: `decide`, `pcurvature`, `bounds`, `kronecker`,
//! `hp-verify` and `bench`.

pub mod bench;
pub mod parse;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use pcurv::bounds::{clamped_radius, effective_bounds, BoundsReport};
use pcurv::deciders::{
    decide_by_roots, decide_honda, kronecker_decide, KroneckerVerdict, NonSplitWitness, ScanOptions,
    TranscendenceReason, Verdict,
};
use pcurv::hermite_pade::hp_verify;
use pcurv::normal_form::{classify, normalize, NormalForm, StructuralClass};
use pcurv::pcurvature::{curvature_naive, curvature_outcome, curvature_prefix_with_delta, PCurvOutcome};
use pcurv::resultants::{delta_of, rothstein_trager};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::parse::{parse_poly, parse_ratfun, ParseError, ParsedInput};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] pcurv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use pcurv::Error as E;
        match self {
            CliError::Parse(_) | CliError::Input(_) => EXIT_INPUT,
            CliError::Core(E::ZeroDenominator | E::InvalidArgument(_) | E::UnsupportedPrimeRange { .. }) => EXIT_INPUT,
            CliError::Core(_) | CliError::Io(_) => EXIT_INTERNAL,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "pcurv", version, about = "Decide algebraicity of the solutions of y' = u(x) y for rational u")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Pcurv,
    Roots,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether all solutions of y' = u y are algebraic.
    Decide {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value_t = Method::Pcurv)]
        method: Method,
        /// Largest prime to test; the verdict is Inconclusive if sigma is not reached.
        #[arg(long)]
        max_prime: Option<u64>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Exit with status 3 on an Inconclusive verdict.
        #[arg(long)]
        strict: bool,
    },
    /// Nullity of the p-curvature at one prime.
    Pcurvature {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(short = 'p')]
        p: u64,
        /// Compute the full curvature by repeated differentiation.
        #[arg(long)]
        naive: bool,
        #[arg(long)]
        json: bool,
    },
    /// The prime bound sigma and its ingredients.
    Bounds {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether an integer polynomial splits into linear factors over Q.
    Kronecker {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        max_prime: Option<u64>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Verify the explicit Hermite-Pade approximants over Q(a).
    HpVerify {
        #[arg(short = 'M')]
        m: usize,
        #[arg(short = 'N')]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Decide seeded random inputs and report one CSV row per case.
    Bench {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        height_bits: u32,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        /// Write the rows here instead of standard output.
        #[arg(long)]
        csv: Option<std::path::PathBuf>,
        #[arg(long)]
        max_prime: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

struct Outcome {
    text: String,
    json: Value,
    exit: i32,
}

/// Run the command line `args` (including the program name) and return the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let json = matches!(
        cli.command,
        Command::Decide { json: true, .. }
            | Command::Pcurvature { json: true, .. }
            | Command::Bounds { json: true, .. }
            | Command::Kronecker { json: true, .. }
            | Command::HpVerify { json: true, .. }
    );
    match execute(cli.command, out) {
        Ok(outcome) => {
            let written = if json {
                writeln!(out, "{}", outcome.json)
            } else {
                write!(out, "{}", outcome.text)
            };
            match written {
                Ok(()) => outcome.exit,
                Err(_) => EXIT_INTERNAL,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match command {
        Command::Decide { expr, method, max_prime, threads, strict, .. } => {
            decide(&expr, method, ScanOptions { budget: max_prime, threads: threads.max(1) }, strict)
        }
        Command::Pcurvature { expr, p, naive, .. } => pcurvature(&expr, p, naive),
        Command::Bounds { expr, .. } => bounds(&expr),
        Command::Kronecker { poly, max_prime, threads, .. } => {
            kronecker(&poly, ScanOptions { budget: max_prime, threads: threads.max(1) })
        }
        Command::HpVerify { m, n, .. } => hp(m, n),
        Command::Bench { degree, height_bits, count, seed, csv, max_prime, threads } => {
            if degree == 0 || height_bits > 62 {
                return Err(CliError::Input("degree must be positive and height bits at most 62".into()));
            }
            let opts = ScanOptions { budget: max_prime, threads: threads.max(1) };
            let rows = bench::run_bench(degree, height_bits, count, seed, opts)?;
            let table = bench::to_csv(&rows);
            let summary = bench::summary(&rows);
            match csv {
                Some(path) => {
                    std::fs::write(path, table)?;
                    Ok(Outcome { text: summary, json: Value::Null, exit: EXIT_OK })
                }
                None => {
                    out.write_all(table.as_bytes())?;
                    Ok(Outcome { text: String::new(), json: Value::Null, exit: EXIT_OK })
                }
            }
        }
    }
}

fn normal_form(input: &ParsedInput) -> Option<NormalForm> {
    if input.a_raw.is_zero() {
        return None;
    }
    normalize(&input.a_raw, &input.b_raw).ok()
}

/// `Delta` of the reduced denominator; 1 when it is constant or `u = 0`.
fn input_delta(input: &ParsedInput) -> BigInt {
    match normal_form(input) {
        Some(nf) if nf.degree() >= 1 => delta_of(&nf.b),
        _ => BigInt::from(1),
    }
}

fn residue_strings(residues: &[(BigRational, usize)]) -> Vec<String> {
    residues
        .iter()
        .flat_map(|(r, m)| std::iter::repeat_n(r.to_string(), *m))
        .collect()
}

fn reason_key(reason: &TranscendenceReason) -> &'static str {
    match reason {
        TranscendenceReason::DegreeViolation => "degree_violation",
        TranscendenceReason::NonSquarefree => "non_squarefree",
        TranscendenceReason::IrrationalResidue => "irrational_residue",
        TranscendenceReason::NonvanishingCurvature { .. } => "nonvanishing_curvature",
    }
}

fn reason_text(reason: &TranscendenceReason) -> &'static str {
    match reason {
        TranscendenceReason::DegreeViolation => "deg a >= deg b (pole at infinity of order > 1)",
        TranscendenceReason::NonSquarefree => "multiple pole",
        TranscendenceReason::IrrationalResidue => "a residue is not rational",
        TranscendenceReason::NonvanishingCurvature { .. } => "p-curvature does not vanish",
    }
}

fn decide(expr: &str, method: Method, opts: ScanOptions, strict: bool) -> Result<Outcome, CliError> {
    let input = parse_ratfun(expr)?;
    let (verdict, report) = match method {
        Method::Pcurv => decide_honda(&input.a_raw, &input.b_raw, opts)?,
        Method::Roots => (decide_by_roots(&input.a_raw, &input.b_raw)?, None),
    };
    let delta = input_delta(&input);
    let mut obj = Map::new();
    let mut text = String::new();
    let sigma = match (&verdict, &report) {
        (Verdict::Inconclusive { sigma, .. }, _) => Some(sigma.clone()),
        (_, Some(r)) => Some(r.sigma.clone()),
        _ => None,
    };
    let mut exit = EXIT_OK;
    match &verdict {
        Verdict::Algebraic { residues } => {
            obj.insert("verdict".into(), json!("algebraic"));
            obj.insert("residues".into(), json!(residue_strings(residues)));
            let shown: Vec<String> = residues
                .iter()
                .map(|(r, m)| if *m > 1 { format!("{r} (x{m})") } else { r.to_string() })
                .collect();
            writeln!(text, "Algebraic").unwrap();
            let shown = if shown.is_empty() { "(none)".to_string() } else { shown.join(", ") };
            writeln!(text, "residues: {shown}").unwrap();
        }
        Verdict::Transcendental { reason } => {
            obj.insert("verdict".into(), json!("transcendental"));
            obj.insert("reason".into(), json!(reason_key(reason)));
            writeln!(text, "Transcendental").unwrap();
            writeln!(text, "reason: {}", reason_text(reason)).unwrap();
            if let Some(p) = verdict.witness_prime() {
                obj.insert("witness_prime".into(), json!(p));
                writeln!(text, "witness_prime={p}").unwrap();
            }
        }
        Verdict::Inconclusive { checked_up_to, prime_range_exceeded, .. } => {
            obj.insert("verdict".into(), json!("inconclusive"));
            obj.insert(
                "reason".into(),
                json!(if *prime_range_exceeded { "prime_range_exceeded" } else { "budget_exhausted" }),
            );
            obj.insert("checked_up_to".into(), json!(checked_up_to.to_string()));
            writeln!(text, "Inconclusive").unwrap();
            writeln!(text, "checked_up_to={checked_up_to}").unwrap();
            if strict {
                exit = EXIT_INCONCLUSIVE;
            }
        }
    }
    obj.insert("delta".into(), json!(delta.to_string()));
    writeln!(text, "delta={delta}").unwrap();
    if let Some(s) = sigma {
        obj.insert("sigma".into(), json!(s.to_string()));
        writeln!(text, "sigma={s}").unwrap();
    }
    Ok(Outcome { text, json: Value::Object(obj), exit })
}

fn pcurvature(expr: &str, p: u64, naive: bool) -> Result<Outcome, CliError> {
    pcurv::arith::modp::check_prime_range(p)?;
    if !pcurv::arith::primes::is_prime_u64(p) {
        return Err(CliError::Input(format!("{p} is not prime")));
    }
    let input = parse_ratfun(expr)?;
    let mut obj = Map::new();
    obj.insert("p".into(), json!(p));
    let Some(nf) = normal_form(&input) else {
        obj.insert("outcome".into(), json!("zero"));
        return Ok(Outcome { text: "Zero\n".into(), json: Value::Object(obj), exit: EXIT_OK });
    };
    let admissible = classify(&nf) == StructuralClass::Admissible;
    let delta = if nf.degree() >= 1 { delta_of(&nf.b) } else { BigInt::from(1) };
    let mut text = String::new();
    let outcome = if naive || !admissible {
        let psi = curvature_naive(&nf.a, &nf.b, p)?;
        let shown = psi.to_string();
        obj.insert("curvature".into(), json!(shown));
        writeln!(text, "curvature: {shown}").unwrap();
        if admissible && delta.is_positive() && (&delta % p) == BigInt::from(0) {
            PCurvOutcome::BadPrime
        } else {
            match psi.num.coeffs().iter().position(|&c| c != 0) {
                None => PCurvOutcome::Zero,
                Some(i) => PCurvOutcome::NonZero { first_nonzero_index: i },
            }
        }
    } else {
        match curvature_prefix_with_delta(&nf.a, &nf.b, p, &delta) {
            Ok((prefix, outcome)) => {
                if outcome != PCurvOutcome::BadPrime {
                    obj.insert("shift".into(), json!(prefix.shift));
                    obj.insert("prefix".into(), json!(prefix.coeffs.coeffs()));
                }
                outcome
            }
            Err(pcurv::Error::NoOrdinaryPoint { .. }) => curvature_outcome(&nf.a, &nf.b, p, &delta)?,
            Err(e) => return Err(e.into()),
        }
    };
    let line = match outcome {
        PCurvOutcome::Zero => {
            obj.insert("outcome".into(), json!("zero"));
            "Zero".to_string()
        }
        PCurvOutcome::NonZero { first_nonzero_index } => {
            obj.insert("outcome".into(), json!("nonzero"));
            obj.insert("first_nonzero_index".into(), json!(first_nonzero_index));
            format!("NonZero first_nonzero_index={first_nonzero_index}")
        }
        PCurvOutcome::BadPrime => {
            obj.insert("outcome".into(), json!("bad_prime"));
            "BadPrime".to_string()
        }
    };
    Ok(Outcome { text: format!("{line}\n{text}"), json: Value::Object(obj), exit: EXIT_OK })
}

fn bounds_report(expr: &str) -> Result<BoundsReport, CliError> {
    let input = parse_ratfun(expr)?;
    let nf = normal_form(&input).ok_or_else(|| CliError::Input("u = 0 has no prime bound".into()))?;
    if classify(&nf) != StructuralClass::Admissible {
        return Err(CliError::Input(
            "the prime bound needs deg a < deg b and a squarefree denominator".into(),
        ));
    }
    let rt = rothstein_trager(&nf.a, &nf.b)?;
    Ok(effective_bounds(&rt.delta, &clamped_radius(&rt.r)))
}

fn bounds(expr: &str) -> Result<Outcome, CliError> {
    let r = bounds_report(expr)?;
    let json = json!({
        "delta": r.delta.to_string(),
        "delta_cubed_upper": r.delta_cubed_up.to_rational().to_string(),
        "b": r.b.to_rational().to_string(),
        "m": r.m.to_string(),
        "n": r.n.to_string(),
        "sigma": r.sigma.to_string(),
        "exceeds_prime_range": r.exceeds_prime_range,
    });
    let mut text = String::new();
    writeln!(text, "delta={}", r.delta).unwrap();
    writeln!(text, "delta_cubed_upper={}", r.delta_cubed_up).unwrap();
    writeln!(text, "B={}", r.b).unwrap();
    writeln!(text, "M={}", r.m).unwrap();
    writeln!(text, "N={}", r.n).unwrap();
    writeln!(text, "sigma={}", r.sigma).unwrap();
    if r.exceeds_prime_range {
        writeln!(text, "note: sigma exceeds the supported prime range 2^62").unwrap();
    }
    Ok(Outcome { text, json, exit: EXIT_OK })
}

fn kronecker(poly: &str, opts: ScanOptions) -> Result<Outcome, CliError> {
    let f = parse_poly(poly)?;
    if f.is_zero() {
        return Err(CliError::Input("the zero polynomial".into()));
    }
    let (_, r) = f.content_primitive()?;
    let (verdict, report) = kronecker_decide(&r, opts)?;
    let mut obj = Map::new();
    let mut text = String::new();
    match &verdict {
        KroneckerVerdict::SplitsOverQ { roots } => {
            obj.insert("verdict".into(), json!("splits"));
            obj.insert("roots".into(), json!(residue_strings(roots)));
            writeln!(text, "SplitsOverQ").unwrap();
            writeln!(text, "roots: {}", residue_strings(roots).join(", ")).unwrap();
        }
        KroneckerVerdict::NotSplit { witness } => {
            obj.insert("verdict".into(), json!("not_split"));
            writeln!(text, "NotSplit").unwrap();
            match witness {
                NonSplitWitness::Prime(p) => {
                    obj.insert("witness_prime".into(), json!(p));
                    writeln!(text, "witness_prime={p}").unwrap();
                }
                NonSplitWitness::IrrationalRoot => {
                    obj.insert("witness".into(), json!("irrational_root"));
                    writeln!(text, "witness: irrational root (budget ended before sigma)").unwrap();
                }
            }
        }
    }
    if let Some(report) = report {
        obj.insert("sigma".into(), json!(report.sigma.to_string()));
        writeln!(text, "sigma={}", report.sigma).unwrap();
    }
    Ok(Outcome { text, json: Value::Object(obj), exit: EXIT_OK })
}

fn hp(m: usize, n: usize) -> Result<Outcome, CliError> {
    let cert = hp_verify(m, n)?;
    let table: Vec<Vec<String>> = cert
        .approximants
        .iter()
        .map(|row| row.iter().map(|c| c.to_string()).collect())
        .collect();
    let json = json!({
        "m": m,
        "n": n,
        "sigma": cert.sigma,
        "lead": cert.lead.to_string(),
        "approximants": table,
    });
    let mut text = String::new();
    writeln!(text, "verified M={m} N={n} sigma={} lead={}", cert.sigma, cert.lead).unwrap();
    for (i, row) in table.iter().enumerate() {
        writeln!(text, "P_{}: [{}]", i + 1, row.join(", ")).unwrap();
    }
    Ok(Outcome { text, json, exit: EXIT_OK })
}
