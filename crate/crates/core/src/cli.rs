//! Command-line front end.
//!
//! Exit codes: 0 when everything verified, 1 when some congruence or
//! identity failed, 2 on usage or validation errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::arith::{parse_rational, primes_in, render_rational, BigRational, Prime};
use crate::error::{Error, Result};
use crate::eta::eta_product_qexp;
use crate::gamma::{gamma_p, GammaQuery};
use crate::hypergeom::{gs_lhs, gs_rhs, pfq_exact, pfq_mod_residue, GSParams, PfqSpec};
use crate::verify::{estimated_work, sweep, AlphaPolicy, CongruenceId, CongruenceReport, SweepConfig, CSV_HEADER};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "supercong",
    version,
    about = "p-adic Gamma values, truncated hypergeometric series and supercongruence checks"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check congruences over a range of primes
    Verify(VerifyArgs),
    /// Evaluate Morita's p-adic Gamma function mod p^k
    Gamma {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Evaluate a truncated hypergeometric series
    Pfq {
        /// Comma-separated upper parameters
        #[arg(long, allow_hyphen_values = true)]
        upper: String,
        /// Comma-separated lower parameters (may be empty)
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        lower: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        z: String,
        #[arg(long)]
        n: usize,
        /// Also reduce the sum mod p^k
        #[arg(long, requires = "k")]
        p: Option<u64>,
        #[arg(long, requires = "p")]
        k: Option<u32>,
    },
    /// Coefficients of q ∏ (1-q^{2n})^4 (1-q^{4n})^4
    Eta {
        #[arg(long)]
        limit: usize,
        #[arg(long)]
        coeff: Option<usize>,
    },
    /// Both sides of the terminating 7F6 summation
    Identity {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    /// Congruence IDs, comma-separated or repeated; all when omitted
    #[arg(long = "id", value_delimiter = ',')]
    ids: Vec<String>,
    /// Inclusive prime range `A..B` (both endpoints prime) or a single prime
    #[arg(long, default_value = "5..97")]
    primes: String,
    /// `all` or a comma-separated list of rationals
    #[arg(long, default_value = "all", allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Upper bound on total Γ_p sweep length
    #[arg(long, default_value_t = 100_000_000)]
    max_work: u128,
    /// Random arguments per law for gamma-laws
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Random parameter triples for gs-2.6
    #[arg(long, default_value_t = 100)]
    gs_cases: usize,
    /// Write elapsed_ms as 0 so output is byte-for-byte reproducible
    #[arg(long)]
    no_timing: bool,
}

/// Either a usage problem (exit 2) or an I/O failure.
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Parses `A..B` (both odd primes) or a single odd prime.
pub fn parse_prime_range(s: &str) -> Result<Vec<Prime>> {
    let endpoint = |t: &str| -> Result<Prime> {
        let n: u64 = t.trim().parse().map_err(|_| Error::Parse(t.to_string()))?;
        Prime::new(n)
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (endpoint(a)?, endpoint(b)?),
        None => {
            let p = endpoint(s)?;
            (p, p)
        }
    };
    if lo > hi {
        return Err(Error::Parse(s.to_string()));
    }
    Ok(primes_in(lo.get(), hi.get()))
}

fn parse_list(s: &str) -> Result<Vec<BigRational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

fn parse_alpha(s: &str) -> Result<AlphaPolicy> {
    if s.trim() == "all" {
        Ok(AlphaPolicy::All)
    } else {
        Ok(AlphaPolicy::List(parse_list(s)?))
    }
}

fn write_reports(w: &mut dyn Write, reports: &[CongruenceReport], format: Format, timing: bool) -> io::Result<()> {
    match format {
        Format::Json => {
            for r in reports {
                serde_json::to_writer(&mut *w, &r.record(timing))?;
                writeln!(w)?;
            }
        }
        Format::Csv => {
            writeln!(w, "{CSV_HEADER}")?;
            for r in reports {
                writeln!(w, "{}", r.record(timing).csv_row(r))?;
            }
        }
        Format::Text => {
            for r in reports {
                writeln!(w, "{}", r.text_line(timing))?;
            }
            let failed = reports.iter().filter(|r| !verified(r)).count();
            writeln!(w, "{} reports, {} failed", reports.len(), failed)?;
        }
    }
    Ok(())
}

fn verified(r: &CongruenceReport) -> bool {
    r.holds && r.oracle_agrees != Some(false)
}

fn cmd_verify(args: VerifyArgs, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    let ids = if args.ids.is_empty() {
        CongruenceId::ALL.to_vec()
    } else {
        args.ids
            .iter()
            .map(|s| s.parse::<CongruenceId>())
            .collect::<Result<Vec<_>>>()
            .map_err(|e| usage(format!("unknown congruence id: {e}")))?
    };
    let primes = parse_prime_range(&args.primes).map_err(|e| usage(format!("--primes: {e}")))?;
    if args.jobs == Some(0) {
        return Err(usage("--jobs must be at least 1"));
    }
    let cfg = SweepConfig {
        ids,
        primes,
        alpha: parse_alpha(&args.alpha).map_err(|e| usage(format!("--alpha: {e}")))?,
        seed: args.seed,
        law_samples: args.samples,
        gs_cases: args.gs_cases,
        jobs: args.jobs,
    };
    let work = estimated_work(&cfg);
    if work > args.max_work {
        return Err(usage(format!(
            "estimated Γ_p sweep length {work} exceeds --max-work {}",
            args.max_work
        )));
    }
    let reports = sweep(&cfg);
    let timing = !args.no_timing;
    match &args.out {
        Some(path) => {
            let mut f = BufWriter::new(File::create(path)?);
            write_reports(&mut f, &reports, args.format, timing)?;
            f.flush()?;
        }
        None => write_reports(out, &reports, args.format, timing)?,
    }
    Ok(if reports.iter().all(verified) {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn run_command(cmd: Command, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    match cmd {
        Command::Verify(args) => cmd_verify(args, out),
        Command::Gamma { p, k, x } => {
            let q = GammaQuery::new(&parse_rational(&x)?, Prime::new(p)?, k)?;
            writeln!(out, "{} (m = {})", gamma_p(&q), q.representative())?;
            Ok(EXIT_OK)
        }
        Command::Pfq {
            upper,
            lower,
            z,
            n,
            p,
            k,
        } => {
            let spec = PfqSpec::new(parse_list(&upper)?, parse_list(&lower)?, parse_rational(&z)?, n);
            writeln!(out, "{}", render_rational(&pfq_exact(&spec)?))?;
            if let (Some(p), Some(k)) = (p, k) {
                let p = Prime::new(p)?;
                writeln!(out, "{} (mod {}^{})", pfq_mod_residue(&spec, p, k)?, p, k)?;
            }
            Ok(EXIT_OK)
        }
        Command::Eta { limit, coeff } => {
            let series = eta_product_qexp(limit)?;
            match coeff {
                Some(i) => writeln!(out, "{}", series.coefficient(i)?)?,
                None => {
                    for (i, c) in series.coefficients().iter().enumerate().skip(1) {
                        writeln!(out, "{i} {c}")?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Identity { a, b, d, n } => {
            let g = GSParams::new(parse_rational(&a)?, parse_rational(&b)?, parse_rational(&d)?, n)?;
            let (lhs, rhs) = (gs_lhs(&g)?, gs_rhs(&g)?);
            let equal = lhs == rhs;
            writeln!(out, "lhs = {}", render_rational(&lhs))?;
            writeln!(out, "rhs = {}", render_rational(&rhs))?;
            writeln!(out, "{}", if equal { "equal" } else { "NOT equal" })?;
            Ok(if equal { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match run_command(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("supercong").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn prime_ranges() {
        assert_eq!(parse_prime_range("5..13").unwrap().len(), 4);
        assert_eq!(parse_prime_range("7").unwrap().len(), 1);
        assert!(parse_prime_range("4..6").is_err());
        assert!(parse_prime_range("5..9").is_err());
        assert!(parse_prime_range("13..5").is_err());
        assert!(parse_prime_range("2..7").is_err());
    }

    #[test]
    fn gamma_command() {
        assert_eq!(
            run_capture(&["gamma", "--p", "5", "--k", "3", "--x", "1"]).1,
            "124 (m = 1)\n"
        );
        assert_eq!(
            run_capture(&["gamma", "--p", "5", "--k", "1", "--x", "1/2"]).1,
            "3 (m = 3)\n"
        );
        let (code, _, err) = run_capture(&["gamma", "--p", "5", "--k", "3", "--x", "1/5"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("not a 5-adic integer"), "{err}");
        assert_eq!(
            run_capture(&["gamma", "--p", "5", "--k", "9", "--x", "1"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn pfq_command() {
        let args = [
            "pfq",
            "--upper",
            "1/2,1/2,1/2,5/4",
            "--lower",
            "1,1,1/4",
            "--z",
            "-1",
            "--n",
            "2",
            "--p",
            "5",
            "--k",
            "3",
        ];
        assert_eq!(run_capture(&args).1, "435/512\n5 (mod 5^3)\n");
        assert_eq!(run_capture(&["pfq", "--upper", "1/3", "--n", "0"]).1, "1\n");
        let (code, _, err) = run_capture(&["pfq", "--upper", "1", "--lower", "-1", "--n", "3"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("pole"));
    }

    #[test]
    fn eta_command() {
        assert_eq!(run_capture(&["eta", "--limit", "3"]).1, "1 1\n2 0\n3 -4\n");
        assert_eq!(run_capture(&["eta", "--limit", "4", "--coeff", "2"]).1, "0\n");
        assert_eq!(run_capture(&["eta", "--limit", "1"]).1, "1 1\n");
        assert_eq!(run_capture(&["eta", "--limit", "4", "--coeff", "9"]).0, EXIT_USAGE);
    }

    #[test]
    fn identity_command() {
        let (code, out, _) = run_capture(&["identity", "--a", "1/4", "--b", "1/2", "--d", "1/4", "--n", "2"]);
        assert_eq!((code, out.as_str()), (EXIT_OK, "lhs = 5/4\nrhs = 5/4\nequal\n"));
        let (_, out, _) = run_capture(&["identity", "--a", "2/3", "--b", "-1/5", "--d", "3/7", "--n", "0"]);
        assert!(out.starts_with("lhs = 1\nrhs = 1\n"));
        let (_, out, _) = run_capture(&["identity", "--a", "2/3", "--b", "1/5", "--d", "3/7", "--n", "3"]);
        assert!(out.starts_with("lhs = 0\nrhs = 0\n"));
    }

    #[test]
    fn verify_usage_errors() {
        assert_eq!(
            run_capture(&["verify", "--id", "main-1.4", "--primes", "4..6"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_capture(&["verify", "--id", "nope", "--primes", "5..7"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_capture(&["verify", "--primes", "5..7", "--alpha", "x"]).0,
            EXIT_USAGE
        );
        let (code, _, err) = run_capture(&[
            "verify",
            "--id",
            "gamma-laws",
            "--primes",
            "5..97",
            "--max-work",
            "1000",
        ]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--max-work"));
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }
}
