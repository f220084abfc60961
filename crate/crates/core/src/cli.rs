//! Command-line front end.
//!
//! Exit codes: `0` every check passed, `1` at least one mathematical
//! mismatch, `2` usage error. Results go to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::determinant::{decompose, schur_finite, schur_finite_direct, DIRECT_MAX_N};
use crate::identities::{rr_product_first, rr_product_second, verify_gis_range};
use crate::poly::LaurentPoly;
use crate::report::{MismatchDetail, VerificationReport};
use crate::schur_poly::{schur, SchurKind, MIN_INDEX};
use crate::series::QSeries;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Product {
    Rr1,
    Rr2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    D,
    E,
}

/// Exact q-series for the Schur determinant and the Rogers-Ramanujan identities.
#[derive(Debug, Parser)]
#[command(name = "schur-qseries", version, allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the m-parametrized Rogers-Ramanujan identity for a range of m.
    Verify {
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        m_min: i64,
        #[arg(long, default_value_t = 10, allow_negative_numbers = true)]
        m_max: i64,
        #[arg(long, default_value_t = 200, allow_negative_numbers = true)]
        order: i64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print the Schur polynomial D_index or E_index.
    SchurPoly {
        #[arg(long, value_enum, ignore_case = true)]
        kind: KindArg,
        #[arg(long, allow_negative_numbers = true)]
        index: i64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print a truncated Rogers-Ramanujan product.
    Product {
        #[arg(long, value_enum)]
        which: Product,
        #[arg(long, allow_negative_numbers = true)]
        order: i64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print the finite Schur determinant Schur_n.
    Determinant {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        /// Cross-check against cofactor expansion and the lambda/mu decomposition.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

/// A series or polynomial on the wire. Coefficients are decimal strings for
/// exponents `min_exp..=order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDocument {
    pub min_exp: i64,
    pub order: i64,
    pub coeffs: Vec<String>,
    pub label: String,
}

impl SeriesDocument {
    pub fn from_series(label: impl Into<String>, series: &QSeries) -> Self {
        SeriesDocument {
            min_exp: series.min_exp(),
            order: series.order(),
            coeffs: series.coeffs().iter().map(ToString::to_string).collect(),
            label: label.into(),
        }
    }

    /// An exact polynomial; `order` is its degree (`-1` for zero).
    pub fn from_poly(label: impl Into<String>, poly: &LaurentPoly) -> Self {
        let (min_exp, coeffs) = poly.as_parts();
        SeriesDocument {
            min_exp,
            order: poly.max_exp().unwrap_or(min_exp - 1),
            coeffs: coeffs.iter().map(ToString::to_string).collect(),
            label: label.into(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain struct serializes")
    }
}

#[derive(Debug)]
struct UsageError(String);

fn nonnegative(name: &str, v: i64) -> Result<u32, UsageError> {
    u32::try_from(v)
        .map_err(|_| UsageError(format!("--{name} must be a nonnegative integer (got {v})")))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("usage error");
            let _ = writeln!(err, "{line}");
            return EXIT_USAGE;
        }
    };
    let result = match cli.command {
        Command::Verify {
            m_min,
            m_max,
            order,
            format,
        } => cmd_verify(m_min, m_max, order, format, out),
        Command::SchurPoly {
            kind,
            index,
            format,
        } => {
            let kind = match kind {
                KindArg::D => SchurKind::D,
                KindArg::E => SchurKind::E,
            };
            cmd_schur_poly(kind, index, format, out)
        }
        Command::Product {
            which,
            order,
            format,
        } => cmd_product(which, order, format, out),
        Command::Determinant {
            n,
            m,
            check,
            format,
        } => cmd_determinant(n, m, check, format, out, err),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn emit_report(r: &VerificationReport, format: OutputFormat, out: &mut impl Write) {
    let _ = match format {
        OutputFormat::Text => writeln!(out, "{r}"),
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(r).unwrap()),
    };
}

fn cmd_verify(
    m_min: i64,
    m_max: i64,
    order: i64,
    format: OutputFormat,
    out: &mut impl Write,
) -> Result<i32, UsageError> {
    let m_min = nonnegative("m-min", m_min)?;
    let m_max = nonnegative("m-max", m_max)?;
    let order = nonnegative("order", order)?;
    if m_min > m_max {
        return Err(UsageError(format!(
            "--m-min ({m_min}) must not exceed --m-max ({m_max})"
        )));
    }
    let suite = verify_gis_range(m_min, m_max, order);
    for r in &suite.reports {
        emit_report(r, format, out);
    }
    if format == OutputFormat::Text {
        let passed = suite.reports.iter().filter(|r| r.passed()).count();
        let _ = writeln!(out, "{passed}/{} passed", suite.reports.len());
    }
    Ok(if suite.all_passed {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

fn cmd_schur_poly(
    kind: SchurKind,
    index: i64,
    format: OutputFormat,
    out: &mut impl Write,
) -> Result<i32, UsageError> {
    let poly = schur(kind, index).map_err(|_| {
        UsageError(format!(
            "--index must be at least {MIN_INDEX} (got {index})"
        ))
    })?;
    let label = format!("{kind:?}_{index}");
    let _ = match format {
        OutputFormat::Text => writeln!(out, "{poly}"),
        OutputFormat::Json => {
            writeln!(out, "{}", SeriesDocument::from_poly(label, &poly).to_json())
        }
    };
    Ok(EXIT_OK)
}

/// Two right-aligned columns, one row per exponent.
pub fn render_series_table(label: &str, series: &QSeries) -> String {
    let rows: Vec<(String, String)> = (0.min(series.min_exp())..=series.order())
        .map(|e| {
            let c = series.coeff(e).cloned().unwrap_or_default();
            (format!("q^{e}"), c.to_string())
        })
        .collect();
    let w0 = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    let w1 = rows.iter().map(|r| r.1.len()).max().unwrap_or(0);
    let mut text = format!("# {label}, order {}\n", series.order());
    for (e, c) in rows {
        text.push_str(&format!("{e:>w0$}  {c:>w1$}\n"));
    }
    text
}

fn cmd_product(
    which: Product,
    order: i64,
    format: OutputFormat,
    out: &mut impl Write,
) -> Result<i32, UsageError> {
    let order = nonnegative("order", order)?;
    let (label, series) = match which {
        Product::Rr1 => ("rr1", rr_product_first(order)),
        Product::Rr2 => ("rr2", rr_product_second(order)),
    };
    let _ = match format {
        OutputFormat::Text => write!(out, "{}", render_series_table(label, &series)),
        OutputFormat::Json => writeln!(
            out,
            "{}",
            SeriesDocument::from_series(label, &series).to_json()
        ),
    };
    Ok(EXIT_OK)
}

fn cmd_determinant(
    n: i64,
    m: i64,
    check: bool,
    format: OutputFormat,
    out: &mut impl Write,
    err: &mut impl Write,
) -> Result<i32, UsageError> {
    let n = nonnegative("n", n)?;
    let m = nonnegative("m", m)?;
    let poly = schur_finite(n, m);
    let _ = match format {
        OutputFormat::Text => writeln!(out, "{poly}"),
        OutputFormat::Json => {
            let label = format!("Schur_{n}(m={m})");
            writeln!(out, "{}", SeriesDocument::from_poly(label, &poly).to_json())
        }
    };
    if !check {
        return Ok(EXIT_OK);
    }
    let params = [("n", i64::from(n)), ("m", i64::from(m))];
    let oracle = schur_finite_direct(n, m).ok().map(|direct| {
        let mismatch = poly
            .first_difference(&direct)
            .map(|(exponent, lhs, rhs)| MismatchDetail { exponent, lhs, rhs });
        VerificationReport::new("oracle", &params, mismatch)
    });
    if oracle.is_none() {
        let _ = writeln!(
            err,
            "note: n > {DIRECT_MAX_N}, direct cofactor oracle skipped"
        );
    }
    let split = decompose(n, m);
    let all_passed = split.passed() && oracle.as_ref().is_none_or(VerificationReport::passed);
    match format {
        OutputFormat::Text => {
            let word = |r: &VerificationReport| if r.passed() { "pass" } else { "FAIL" };
            let oracle_word = oracle.as_ref().map_or("skipped", word);
            let _ = writeln!(out, "oracle: {oracle_word}, decompose: {}", word(&split));
            for r in oracle.iter().chain([&split]).filter(|r| !r.passed()) {
                let _ = writeln!(out, "{r}");
            }
        }
        OutputFormat::Json => {
            for r in oracle.iter().chain([&split]) {
                emit_report(r, format, out);
            }
        }
    }
    Ok(if all_passed { EXIT_OK } else { EXIT_MISMATCH })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("schur-qseries").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn schur_poly_text() {
        assert_eq!(
            run_capture(&["schur-poly", "--kind", "D", "--index", "1"]).1,
            "1 + q\n"
        );
        assert_eq!(
            run_capture(&["schur-poly", "--kind", "E", "--index", "-1"]).1,
            "0\n"
        );
        assert_eq!(
            run_capture(&["schur-poly", "--kind", "D", "--index", "3"]).1,
            "1 + q + q^2 + q^3 + q^4\n"
        );
        let (code, out, err) = run_capture(&["schur-poly", "--kind", "D", "--index", "-3"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1);
    }

    #[test]
    fn zero_poly_document() {
        let doc = SeriesDocument::from_poly("E_-1", &LaurentPoly::zero());
        assert_eq!(
            doc.to_json(),
            r#"{"min_exp":0,"order":-1,"coeffs":[],"label":"E_-1"}"#
        );
    }

    #[test]
    fn series_table_alignment() {
        let table = render_series_table("rr1", &rr_product_first(10));
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines[0], "# rr1, order 10");
        assert_eq!(lines[1], " q^0  1");
        assert_eq!(lines[11], "q^10  6");
    }

    #[test]
    fn usage_errors() {
        for args in [
            &["verify", "--order", "-1"][..],
            &["verify", "--m-min", "3", "--m-max", "1"],
            &["verify", "--m-min", "-1"],
            &["product", "--which", "rr3", "--order", "3"],
            &["determinant", "--n", "-2", "--m", "0"],
            &["frobnicate"],
        ] {
            let (code, _, err) = run_capture(args);
            assert_eq!(code, EXIT_USAGE, "{args:?}");
            assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        }
    }
}
