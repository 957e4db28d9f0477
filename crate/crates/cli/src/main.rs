//! Command-line front end: compute Stieltjes constants by any validated
//! representation, run the identity suites, or race the representations
//! against each other. Arguments for a are parsed exactly (decimal strings
//! become rationals, never binary floats), reports carry values as decimal
//! strings with the requested significant digits, and exit codes separate
//! invariant failures (1) from domain errors (2) and non-convergence (3).

mod report;

use clap::builder::PossibleValuesParser;
use clap::{Parser, Subcommand};
use report::{CheckRow, MethodResult, Report, Request};
use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use std::cmp::Ordering;
use std::path::{Path, PathBuf};
use std::time::Instant;
use stieltjes_core::validate::Suite;
use stieltjes_core::{
    combinatorics, eps_for_digits, gamma_by_method, methods_for, validate, BigReal, Error, Method,
    Zeta,
};

#[derive(Parser)]
#[command(name = "stieltjes", version, about = "Stieltjes constants via cross-validated series")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Output format
    #[arg(long, global = true, default_value = "plain",
          value_parser = PossibleValuesParser::new(["plain", "json", "csv"]))]
    format: String,
    /// Directory holding persisted combinatorics tables
    #[arg(long, global = true, env = "STIELTJES_CACHE")]
    seed_cache: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute gamma_k(a) by one or every in-domain representation
    Gamma {
        /// Index of the Stieltjes constant
        #[arg(long)]
        k: usize,
        /// Argument a, exact: decimal ("1.5") or rational ("3/4")
        #[arg(long)]
        a: String,
        /// Significant digits, 10..=10000
        #[arg(long, value_parser = parse_digits)]
        digits: usize,
        /// "all" or one method name
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// Run an identity-validation suite
    Validate {
        /// all, shift, cascade, exp-series, ser, lerch, bounds, moments
        #[arg(long, default_value = "all")]
        suite: String,
        /// Significant digits, 10..=10000
        #[arg(long, value_parser = parse_digits)]
        digits: usize,
    },
    /// Time every in-domain representation on the same gamma_k(a)
    Race {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        a: String,
        #[arg(long, value_parser = parse_digits)]
        digits: usize,
    },
}

fn parse_digits(s: &str) -> Result<usize, String> {
    let d: usize = s.parse().map_err(|_| "digits must be an integer".to_string())?;
    if (10..=10_000).contains(&d) {
        Ok(d)
    } else {
        Err("digits must lie in 10..=10000".into())
    }
}

/// Exact rational from "n", "n/d", or a decimal string.
fn parse_exact(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((ip, fp)) = s.split_once('.') {
        if fp.is_empty() {
            return ip.parse().ok();
        }
        if !fp.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let ipart: Integer = if ip.is_empty() || ip == "-" {
            Integer::new()
        } else {
            ip.parse().ok()?
        };
        let den = Integer::from(10).pow(fp.len() as u32);
        let mut num = ipart.abs() * &den + fp.parse::<Integer>().ok()?;
        if ip.starts_with('-') {
            num = -num;
        }
        Some(Rational::from((num, den)))
    } else {
        s.parse().ok()
    }
}

fn parse_a(z: &Zeta, s: &str) -> Result<BigReal, Error> {
    let r = parse_exact(s)
        .ok_or_else(|| Error::domain("cli", format!("cannot parse a = {s:?} exactly")))?;
    if r.cmp0() != Ordering::Greater {
        return Err(Error::domain("cli", "a must be positive"));
    }
    Ok(BigReal::from_rational(&r, z.prec()))
}

fn fmt_err(e: &Float) -> String {
    if e.is_zero() {
        "0".into()
    } else {
        format!("{:.2e}", e)
    }
}

/// In-domain methods for (k, a): the full-precision jet routes plus the
/// exponential series where it applies.
fn in_domain(k: usize, a: &BigReal, digits: usize) -> Vec<Method> {
    let mut v = methods_for(a, digits);
    if a.cmp_i64(1) == Ordering::Equal && k <= 1 {
        v.push(Method::ExpSeries);
    }
    v
}

fn notices(selected: &[Method], a_str: &str) -> Vec<CheckRow> {
    Method::ALL
        .into_iter()
        .filter(|m| !selected.contains(m))
        .map(|m| CheckRow {
            id: format!("notice-{}", m.name()),
            pass: true,
            detail: format!("skipped: outside its validated domain at a = {a_str}"),
        })
        .collect()
}

fn agreement_checks(vals: &[(Method, BigReal)], digits: usize) -> Vec<CheckRow> {
    let mut out = Vec::new();
    for i in 0..vals.len() {
        for j in i + 1..vals.len() {
            let (mi, vi) = &vals[i];
            let (mj, vj) = &vals[j];
            let d = vi.sub(vj).abs_f();
            let mut budget = Float::with_val(64, vi.err() + vj.err());
            budget += eps_for_digits(digits) * (vi.abs_f() + Float::with_val(32, 1));
            out.push(CheckRow {
                id: format!("agree-{}-{}", mi.name(), mj.name()),
                pass: d <= budget,
                detail: format!("|diff| = {:.3e}, budget {:.3e}", d, budget),
            });
        }
    }
    out
}

fn run_methods(
    z: &Zeta,
    methods: &[Method],
    k: usize,
    a: &BigReal,
    digits: usize,
) -> Result<(Vec<MethodResult>, Vec<CheckRow>), Error> {
    let mut results = Vec::new();
    let mut vals = Vec::new();
    for &m in methods {
        let t0 = Instant::now();
        let v = gamma_by_method(z, m, k, a)?;
        results.push(MethodResult {
            method: m.name().into(),
            value: v.value.to_decimal(digits),
            err_est: fmt_err(v.value.err()),
            terms: v.terms,
            ms: t0.elapsed().as_millis() as u64,
        });
        vals.push((m, v.value));
    }
    vals.sort_by_key(|(m, _)| m.name());
    Ok((results, agreement_checks(&vals, digits)))
}

fn cmd_gamma(k: usize, a_str: &str, digits: usize, method: &str, format: &str) -> Result<Report, Error> {
    let z = Zeta::new(digits);
    let a = parse_a(&z, a_str)?;
    let domain = in_domain(k, &a, digits);
    let (selected, mut checks) = if method == "all" {
        (domain.clone(), notices(&domain, a_str))
    } else {
        let m = Method::from_name(method)
            .ok_or_else(|| Error::domain("cli", format!("unknown method {method:?}")))?;
        if !domain.contains(&m) {
            return Err(Error::domain(
                "cli",
                format!("{method} is outside its validated domain at k = {k}, a = {a_str}; --method all lists candidates"),
            ));
        }
        (vec![m], Vec::new())
    };
    let (mut results, agree) = run_methods(&z, &selected, k, &a, digits)?;
    checks.extend(agree);
    checks.sort_by(|x, y| x.id.cmp(&y.id));
    results.sort_by(|x, y| x.method.cmp(&y.method));
    Ok(Report {
        request: Request {
            command: "gamma".into(),
            k: Some(k),
            a: Some(a_str.into()),
            digits,
            method: Some(method.into()),
            suite: None,
            format: format.into(),
        },
        results,
        checks,
    })
}

fn cmd_race(k: usize, a_str: &str, digits: usize, format: &str) -> Result<Report, Error> {
    let z = Zeta::new(digits);
    let a = parse_a(&z, a_str)?;
    let selected = in_domain(k, &a, digits);
    let mut checks = notices(&selected, a_str);
    let (mut results, agree) = run_methods(&z, &selected, k, &a, digits)?;
    checks.extend(agree);
    checks.sort_by(|x, y| x.id.cmp(&y.id));
    results.sort_by(|x, y| (x.ms, x.method.clone()).cmp(&(y.ms, y.method.clone())));
    Ok(Report {
        request: Request {
            command: "race".into(),
            k: Some(k),
            a: Some(a_str.into()),
            digits,
            method: None,
            suite: None,
            format: format.into(),
        },
        results,
        checks,
    })
}

fn cmd_validate(suite: &str, digits: usize, format: &str) -> Result<Report, Error> {
    let s = Suite::from_name(suite)
        .ok_or_else(|| Error::domain("cli", format!("unknown suite {suite:?}")))?;
    let checks = validate::run_suite(s, digits)?
        .into_iter()
        .map(|c| CheckRow { id: c.id, pass: c.pass, detail: c.detail })
        .collect();
    Ok(Report {
        request: Request {
            command: "validate".into(),
            k: None,
            a: None,
            digits,
            method: None,
            suite: Some(suite.into()),
            format: format.into(),
        },
        results: Vec::new(),
        checks,
    })
}

fn cache_file(dir: &Path) -> PathBuf {
    dir.join("combinatorics.tbl")
}

fn run(cli: &Cli) -> Result<Report, Error> {
    match &cli.command {
        Cmd::Gamma { k, a, digits, method } => cmd_gamma(*k, a, *digits, method, &cli.format),
        Cmd::Validate { suite, digits } => cmd_validate(suite, *digits, &cli.format),
        Cmd::Race { k, a, digits } => cmd_race(*k, a, *digits, &cli.format),
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Domain { .. } | Error::CacheCorrupt { .. } => 2,
        _ => 3,
    }
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    if let Some(dir) = cli.seed_cache.as_deref() {
        let path = cache_file(dir);
        if path.exists() {
            if let Err(e) = combinatorics::load_tables(&path) {
                eprintln!("warning: {e}; regenerating tables");
            }
        }
    }
    let out = run(&cli);
    if let Some(dir) = cli.seed_cache.as_deref() {
        if let Err(e) = std::fs::create_dir_all(dir)
            .map_err(|e| Error::domain("cli", e.to_string()))
            .and_then(|()| combinatorics::save_tables(&cache_file(dir)))
        {
            eprintln!("warning: could not persist tables: {e}");
        }
    }
    match out {
        Ok(report) => {
            let text = report.emit();
            if text.ends_with('\n') {
                print!("{text}");
            } else {
                println!("{text}");
            }
            if report.all_pass() {
                std::process::ExitCode::SUCCESS
            } else {
                std::process::ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::ExitCode::from(exit_code_for(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_argument_parsing() {
        assert_eq!(parse_exact("3/4").unwrap(), Rational::from((3, 4)));
        assert_eq!(parse_exact("1.5").unwrap(), Rational::from((3, 2)));
        assert_eq!(parse_exact("-0.25").unwrap(), Rational::from((-1, 4)));
        assert_eq!(parse_exact("1.39112").unwrap(), Rational::from((139112, 100000)));
        assert_eq!(parse_exact("2.").unwrap(), Rational::from(2));
        assert_eq!(parse_exact("7").unwrap(), Rational::from(7));
        assert!(parse_exact("1.5e3").is_none());
        assert!(parse_exact("x").is_none());
        assert!(parse_exact("1/0").is_none());
    }

    #[test]
    fn digits_bounds() {
        assert!(parse_digits("9").is_err());
        assert!(parse_digits("10").is_ok());
        assert!(parse_digits("10000").is_ok());
        assert!(parse_digits("10001").is_err());
    }

    #[test]
    fn error_exit_codes() {
        assert_eq!(exit_code_for(&Error::domain("x", "y")), 2);
        assert_eq!(exit_code_for(&Error::no_conv("x", "y")), 3);
        assert_eq!(exit_code_for(&Error::DegeneratePole), 3);
    }

    #[test]
    fn exp_series_only_at_one() {
        let z = Zeta::new(12);
        assert!(in_domain(1, &z.real(1.0), 12).contains(&Method::ExpSeries));
        assert!(!in_domain(2, &z.real(1.0), 12).contains(&Method::ExpSeries));
        assert!(!in_domain(1, &z.real(2.0), 12).contains(&Method::ExpSeries));
    }
}
