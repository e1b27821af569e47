//! The `hh` command line.
//!
//! Exit codes: 0 success, 1 a bound or enclosure failed, 2 usage or domain
//! error, 3 a class hypothesis was refuted.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::certifier::{refine_to_tolerance, select_rule};
use crate::error::{domain, Error, Result};
use crate::exponent::{ConjugatePair, Exponent};
use crate::function::find;
use crate::interval::Interval;
use crate::means::{
    chain_check, chain_means, check_prop_identric, check_prop_monomial_pm, check_prop_monomial_q1,
    check_prop_monomial_quasi, check_prop_reciprocal_pm, check_prop_reciprocal_quasi,
};
use crate::oracle::integrate;
use crate::report::{BoundKind, BoundReport};
use crate::theorem::evaluate;
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_HYPOTHESIS: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hh",
    version,
    about = "Midpoint-rule error bounds from second-derivative convexity"
)]
#[command(args_conflicts_with_subcommands = false)]
struct Cli {
    #[command(flatten)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct Format {
    /// Emit JSON (default)
    #[arg(long, global = true)]
    json: bool,
    /// Emit CSV
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a seeded property suite over the built-in catalog
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        cases: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate one bound for a catalog function on [a, b]
    #[command(allow_negative_numbers = true)]
    Bound {
        function: String,
        a: f64,
        b: f64,
        theorem: String,
        #[arg(long)]
        q: Option<f64>,
        #[arg(long)]
        p: Option<f64>,
    },
    /// Print H, G, L, I, A for a, b > 0 and check their ordering
    #[command(allow_negative_numbers = true)]
    Means { a: f64, b: f64 },
    /// Certified composite midpoint integral to within tol
    #[command(allow_negative_numbers = true)]
    Certify {
        function: String,
        a: f64,
        b: f64,
        tol: f64,
    },
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let csv = cli.format.csv;
    match dispatch(cli.command, csv, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "hh: {e}");
            match e {
                Error::Domain(_) => EXIT_USAGE,
                Error::Hypothesis(_) => EXIT_HYPOTHESIS,
                Error::Evaluation { .. } | Error::Convergence(_) | Error::Output(_) => {
                    EXIT_VIOLATION
                }
            }
        }
    }
}

fn dispatch(command: Command, csv: bool, out: &mut dyn Write) -> Result<u8> {
    match command {
        Command::Verify { suite, cases, seed } => cmd_verify(suite, cases, seed, csv, out),
        Command::Bound {
            function,
            a,
            b,
            theorem,
            q,
            p,
        } => cmd_bound(&function, a, b, &theorem, q, p, csv, out),
        Command::Means { a, b } => cmd_means(a, b, csv, out),
        Command::Certify {
            function,
            a,
            b,
            tol,
        } => cmd_certify(&function, a, b, tol, csv, out),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Output(e.to_string())
}

/// Writes the rows as JSON lines, or as CSV with the union of their keys as header.
fn emit(rows: &[Value], csv: bool, out: &mut dyn Write) -> Result<()> {
    if !csv {
        for row in rows {
            let line = serde_json::to_string(row).map_err(io_err)?;
            match writeln!(out, "{line}") {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => return Ok(()),
                other => other.map_err(io_err)?,
            }
        }
        return Ok(());
    }
    let header: BTreeSet<&str> = rows
        .iter()
        .filter_map(Value::as_object)
        .flat_map(|m| m.keys().map(String::as_str))
        .collect();
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&header).map_err(io_err)?;
    for row in rows {
        let cells = header.iter().map(|k| match row.get(*k) {
            None | Some(Value::Null) => String::new(),
            Some(Value::String(s)) => s.clone(),
            Some(v) => v.to_string(),
        });
        w.write_record(cells).map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

fn cmd_verify(suite: Suite, cases: u64, seed: u64, csv: bool, out: &mut dyn Write) -> Result<u8> {
    let records = run_suite(suite, seed, cases as usize)?;
    let failed = records.iter().filter(|r| !r.pass).count();
    let rows: Vec<Value> = records.iter().map(to_value).collect();
    emit(&rows, csv, out)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_VIOLATION })
}

fn exponent_arg(q: Option<f64>, p: Option<f64>) -> Result<Option<Exponent>> {
    Ok(match (p, q) {
        (None, None) => None,
        (Some(p), None) => Some(Exponent::Pair(ConjugatePair::from_p(p)?)),
        (None, Some(q)) => Some(Exponent::Power { q }),
        (Some(p), Some(q)) => Some(Exponent::Pair(ConjugatePair::new(p, q)?)),
    })
}

/// Monomial power from a catalog-style name such as `x3` or `x^-2`.
fn monomial_power(name: &str) -> Option<i32> {
    let digits = name.strip_prefix("x^").or_else(|| name.strip_prefix('x'))?;
    digits.parse().ok()
}

fn proposition(
    kind: BoundKind,
    function: &str,
    a: f64,
    b: f64,
    exponent: Option<Exponent>,
) -> Result<BoundReport> {
    let q = exponent.map(|e| e.q()).unwrap_or(2.0);
    let pair = || match exponent {
        Some(Exponent::Pair(pq)) => Ok(pq),
        _ => ConjugatePair::from_q(q),
    };
    let power = || {
        monomial_power(function).ok_or_else(|| {
            domain(format!(
                "{kind} needs a monomial such as x3, got '{function}'"
            ))
        })
    };
    let expect = |names: &[&str]| {
        if names.contains(&function) {
            Ok(())
        } else {
            Err(domain(format!(
                "{kind} applies to {}, got '{function}'",
                names[0]
            )))
        }
    };
    match kind {
        BoundKind::MonomialQ1 => check_prop_monomial_q1(a, b, power()?),
        BoundKind::MonomialPowerMean => check_prop_monomial_pm(a, b, power()?, q),
        BoundKind::MonomialQuasiHolder => check_prop_monomial_quasi(a, b, power()?, pair()?),
        BoundKind::IdentricHolder => {
            expect(&["neg_ln", "-ln x"])?;
            check_prop_identric(a, b, pair()?)
        }
        BoundKind::ReciprocalPowerMean => {
            expect(&["inv_x", "1/x"])?;
            check_prop_reciprocal_pm(a, b, q)
        }
        BoundKind::ReciprocalQuasi => {
            expect(&["inv_x", "1/x"])?;
            check_prop_reciprocal_quasi(a, b, q)
        }
        other => Err(domain(format!("'{other}' is not a proposition"))),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_bound(
    function: &str,
    a: f64,
    b: f64,
    theorem: &str,
    q: Option<f64>,
    p: Option<f64>,
    csv: bool,
    out: &mut dyn Write,
) -> Result<u8> {
    let kind: BoundKind = theorem.parse()?;
    let exponent = exponent_arg(q, p)?;
    let report = if kind.is_theorem() {
        let func =
            find(function).ok_or_else(|| domain(format!("unknown function '{function}'")))?;
        evaluate(kind, &func, Interval::new(a, b)?, exponent)?
    } else {
        proposition(kind, function, a, b, exponent)?
    };
    let row = to_value(&report);
    emit(std::slice::from_ref(&row), csv, out)?;
    Ok(if report.valid {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn cmd_means(a: f64, b: f64, csv: bool, out: &mut dyn Write) -> Result<u8> {
    let values = chain_means(a, b)?;
    let ordered = chain_check(a, b)?;
    let mut row = Map::new();
    row.insert("a".into(), json!(a));
    row.insert("b".into(), json!(b));
    for v in values {
        row.insert(v.kind.to_string(), json!(v.value));
    }
    row.insert("chain".into(), json!(ordered));
    let row = Value::Object(row);
    emit(std::slice::from_ref(&row), csv, out)?;
    Ok(if ordered { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_certify(
    function: &str,
    a: f64,
    b: f64,
    tol: f64,
    csv: bool,
    out: &mut dyn Write,
) -> Result<u8> {
    let func = find(function).ok_or_else(|| domain(format!("unknown function '{function}'")))?;
    let iv = Interval::new(a, b)?;
    func.check_interval(&iv)?;
    if !tol.is_finite() || tol <= 0.0 {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    let rule = select_rule(&func, iv).ok_or_else(|| {
        Error::Hypothesis(format!(
            "class check failed: |f''| of {} is neither convex nor quasi-convex on {iv}",
            func.id()
        ))
    })?;
    let c = refine_to_tolerance(&func, iv, tol, rule)?;
    let oracle = integrate(|x| func.value(x), iv, 1e-3 * tol.min(1e-9))?;
    let oracle_slack = oracle.est_error + 4.0 * f64::EPSILON * oracle.value.abs();
    let enclosed = (c.estimate - oracle.value).abs() <= c.error_radius + c.rounding + oracle_slack;
    let row = json!({
        "function": func.id(),
        "interval": iv,
        "tol": tol,
        "rule": c.rule,
        "estimate": c.estimate,
        "error_radius": c.error_radius,
        "rounding": c.rounding,
        "n": c.subintervals,
        "oracle_value": oracle.value,
        "enclosed": enclosed,
    });
    emit(std::slice::from_ref(&row), csv, out)?;
    Ok(if enclosed { EXIT_OK } else { EXIT_VIOLATION })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("hh").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn monomial_names() {
        assert_eq!(monomial_power("x3"), Some(3));
        assert_eq!(monomial_power("x^-2"), Some(-2));
        assert_eq!(monomial_power("exp"), None);
    }

    #[test]
    fn bound_exit_codes() {
        assert_eq!(call(&["bound", "x2", "0", "1", "convex_q1"]).0, 0);
        assert_eq!(call(&["bound", "sin", "0", "3.14159", "convex_q1"]).0, 3);
        assert_eq!(call(&["bound", "x2", "1", "0", "convex_q1"]).0, 2);
        assert_eq!(call(&["bound", "nope", "0", "1", "convex_q1"]).0, 2);
        assert_eq!(call(&["bound", "x2", "0", "1", "nope"]).0, 2);
    }

    #[test]
    fn proposition_through_bound() {
        let (code, out, _) = call(&["bound", "x3", "1", "2", "monomial_q1"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["bound"], 0.375);
        assert_eq!(v["uncorrected_bound"], 0.1875);
        assert_eq!(call(&["bound", "exp", "1", "2", "identric_holder"]).0, 2);
    }

    #[test]
    fn means_and_negative_arguments() {
        let (code, out, _) = call(&["means", "5", "5"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        for k in ["A", "G", "H", "I", "L"] {
            assert_eq!(v[k], 5.0);
        }
        assert_eq!(call(&["means", "-1", "2"]).0, 2);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["verify", "--cases", "0"]).0, 2);
        assert_eq!(call(&["certify", "x2", "0", "1", "0"]).0, 2);
        assert_eq!(call(&["--json", "--csv", "means", "1", "2"]).0, 2);
        assert_eq!(call(&[]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn csv_output_has_header() {
        let (code, out, _) = call(&["--csv", "means", "1", "2"]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert_eq!(lines.next().unwrap(), "A,G,H,I,L,a,b,chain");
        assert_eq!(lines.count(), 1);
    }
}
