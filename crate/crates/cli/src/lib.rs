//! Command-line front end for `rootzone`.
//!
//! [`run`] executes a parsed [`Cli`] against arbitrary output streams and
//! returns the process exit code, so every command can be tested in-process.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rootzone::bounds::BoundKind;
use rootzone::fuzz::{run_fuzz, Family, FuzzConfig, FuzzSummary};
use rootzone::polynomial::format::parse_auto;
use rootzone::report::{
    remark1_polynomial, remark2_polynomial, render_svg, render_table, sig9, Outcome, Remark1,
    Remark2, RemarkStatus,
};
use rootzone::{
    compare_remark_1, compare_remark_2, BoundId, ComparisonReport, ComplexScalar,
    GeneralPolynomial, MonicPolynomial,
};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum ExitCode {
    Success = 0,
    InputError = 1,
    ContainmentFailure = 2,
    NotConverged = 3,
}

impl From<ExitCode> for std::process::ExitCode {
    fn from(c: ExitCode) -> Self {
        std::process::ExitCode::from(c as u8)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "rootzone",
    version,
    about = "Inclusion regions for the zeros of complex polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Evaluate bounds and print the comparison report
    Bounds,
    /// Check every bound and region against the numerically computed roots
    Verify,
    /// Reproduce the two worked comparisons against earlier bounds
    Remarks,
    /// Random soundness sweep
    Fuzz,
    /// Write the report as an SVG figure
    Plot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Options {
    /// Coefficient file (JSON or plain text), ascending order
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Inline coefficients, ascending, comma-separated; complex as `re+imi`
    #[arg(long, global = true, value_name = "LIST", allow_hyphen_values = true)]
    pub poly: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
    /// `all` or a comma-separated list of bound ids
    #[arg(
        long,
        global = true,
        value_name = "all|ID[,ID...]",
        default_value = "all"
    )]
    pub bounds: String,
    /// Skip the root finder
    #[arg(long, global = true)]
    pub no_oracle: bool,
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 1000)]
    pub count: usize,
    #[arg(long, global = true, value_name = "LO:HI", default_value = "3:15")]
    pub degree_range: String,
    /// real, complex, sparse, palindromic or mixed
    #[arg(long, global = true, default_value = "mixed")]
    pub family: String,
    /// Write output here instead of standard output
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

/// A failure that ends the command with a diagnostic.
#[derive(Debug)]
pub struct Failure {
    pub code: ExitCode,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: ExitCode::InputError,
            message: message.into(),
        }
    }
}

type CmdResult = Result<ExitCode, Failure>;

/// Parses one inline coefficient: `2`, `-1.5`, `3i`, `-i`, `1+2i`, `1e-3-4.5i`.
pub fn parse_complex(s: &str) -> Result<ComplexScalar, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot parse coefficient {s:?}");
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return t
            .parse::<f64>()
            .map(|re| ComplexScalar::new(re, 0.0))
            .map_err(|_| bad());
    };
    // split at the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    let im: f64 = im.parse().map_err(|_| bad())?;
    Ok(ComplexScalar::new(re, im))
}

/// Parses an ascending comma-separated coefficient list.
pub fn parse_poly_list(list: &str) -> Result<GeneralPolynomial, String> {
    let coeffs = list
        .split(',')
        .map(parse_complex)
        .collect::<Result<Vec<_>, _>>()?;
    GeneralPolynomial::new(coeffs).map_err(|e| e.to_string())
}

/// Parses `all` or a comma-separated list of bound ids.
pub fn parse_bound_selection(s: &str) -> Result<Vec<BoundId>, String> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(BoundId::ALL.to_vec());
    }
    let mut ids = Vec::new();
    for part in s.split(',') {
        let id: BoundId = part.trim().parse().map_err(|e| format!("{e}"))?;
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    if ids.is_empty() {
        return Err("empty bound selection".into());
    }
    Ok(ids)
}

/// Parses `LO:HI`.
pub fn parse_degree_range(s: &str) -> Result<(usize, usize), String> {
    let bad = || format!("degree range must be LO:HI, got {s:?}");
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(format!("empty degree range {lo}:{hi}"));
    }
    Ok((lo, hi))
}

/// The polynomial named by `--input` or `--poly`, if either is given.
fn read_polynomial(options: &Options) -> Result<Option<GeneralPolynomial>, Failure> {
    match (&options.input, &options.poly) {
        (Some(_), Some(_)) => Err(Failure::input("--input and --poly are mutually exclusive")),
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            parse_auto(&text)
                .map(Some)
                .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
        }
        (None, Some(list)) => parse_poly_list(list).map(Some).map_err(Failure::input),
        (None, None) => Ok(None),
    }
}

/// Removes zero roots and normalizes. Zero roots are reported on `err`.
fn prepare(g: GeneralPolynomial, err: &mut dyn Write) -> Result<MonicPolynomial, Failure> {
    let (zeros, rest) = g.deflate_zero_roots();
    if zeros > 0 {
        let _ = writeln!(
            err,
            "note: z = 0 is a root of multiplicity {zeros}; bounds apply to the remaining factor"
        );
    }
    if rest.degree() == 0 {
        return Err(Failure::input(
            "no nonzero roots remain after removing z = 0",
        ));
    }
    rest.normalize().map_err(|e| Failure::input(e.to_string()))
}

fn required_polynomial(options: &Options, err: &mut dyn Write) -> Result<MonicPolynomial, Failure> {
    let g = read_polynomial(options)?.ok_or_else(|| {
        Failure::input("a polynomial is required: pass --input FILE or --poly LIST")
    })?;
    prepare(g, err)
}

fn selection(options: &Options, p: &MonicPolynomial) -> Result<Vec<BoundId>, Failure> {
    let ids = parse_bound_selection(&options.bounds).map_err(Failure::input)?;
    let n = p.degree();
    if n < 3 {
        let needy: Vec<&str> = ids
            .iter()
            .filter(|id| id.needs_degree_three())
            .map(|id| id.as_str())
            .collect();
        if !needy.is_empty() {
            return Err(Failure::input(format!(
                "degree {n} is below 3, required by {}; select classical bounds only with --bounds",
                needy.join(",")
            )));
        }
    }
    Ok(ids)
}

fn build_report(options: &Options, err: &mut dyn Write) -> Result<ComparisonReport, Failure> {
    let p = required_polynomial(options, err)?;
    let ids = selection(options, &p)?;
    ComparisonReport::build(&p, &ids, !options.no_oracle).map_err(|e| Failure::input(e.to_string()))
}

fn emit(options: &Options, bytes: &[u8], out: &mut dyn Write) -> Result<(), Failure> {
    let written = match &options.output {
        Some(path) => fs::write(path, bytes).map_err(|e| format!("{}: {e}", path.display())),
        None => out.write_all(bytes).map_err(|e| e.to_string()),
    };
    written.map_err(Failure::input)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Whether the report's bounds and regions all hold against its roots.
/// `None` without a converged oracle.
pub fn containment_holds(report: &ComparisonReport) -> Option<bool> {
    let checks = report.bound_checks()?;
    let bounds_ok = checks.iter().all(|(_, holds)| *holds != Some(false));
    Some(bounds_ok && report.verdicts.is_some_and(|v| v.all_pass()))
}

fn cmd_bounds(options: &Options, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let report = build_report(options, err)?;
    let bytes = match options.format {
        OutputFormat::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s.into_bytes()
        }
        OutputFormat::Table => render_table(&report).into_bytes(),
    };
    emit(options, &bytes, out)?;
    Ok(match containment_holds(&report) {
        Some(false) => {
            let _ = writeln!(err, "error: a bound or region misses a computed root");
            ExitCode::ContainmentFailure
        }
        Some(true) => ExitCode::Success,
        None => {
            if report.oracle.is_some() {
                let _ = writeln!(
                    err,
                    "warning: root finder did not converge; containment not checked"
                );
            }
            ExitCode::Success
        }
    })
}

#[derive(Debug, Serialize)]
struct CheckLine {
    id: String,
    kind: Option<BoundKind>,
    value: Option<f64>,
    verdict: &'static str,
}

#[derive(Debug, Serialize)]
struct Verification {
    converged: bool,
    passed: bool,
    checks: Vec<CheckLine>,
}

/// Per-bound and per-region verdicts for a report, plus the exit code they
/// imply.
pub fn verification(report: &ComparisonReport) -> (String, String, ExitCode) {
    let Some(checks) = report.bound_checks() else {
        let v = Verification {
            converged: false,
            passed: false,
            checks: Vec::new(),
        };
        return (
            "root finder did not converge\n".to_string(),
            to_json(&v),
            ExitCode::NotConverged,
        );
    };
    let mut lines = Vec::new();
    for (b, holds) in checks {
        lines.push(CheckLine {
            id: b.id.as_str().to_string(),
            kind: Some(b.kind),
            value: b.value,
            verdict: match holds {
                Some(true) => "pass",
                Some(false) => "fail",
                None => "n/a",
            },
        });
    }
    let outcome = |o: Outcome| match o {
        Outcome::Pass => "pass",
        Outcome::Fail => "fail",
    };
    let verdicts = report
        .verdicts
        .expect("verdicts accompany a converged oracle");
    lines.push(CheckLine {
        id: "ANNULUS".into(),
        kind: None,
        value: None,
        verdict: outcome(verdicts.annulus),
    });
    if let Some(r) = verdicts.rectangle {
        lines.push(CheckLine {
            id: "RECTANGLE".into(),
            kind: None,
            value: None,
            verdict: outcome(r),
        });
    }
    let passed = lines.iter().all(|l| l.verdict != "fail");

    let mut table = String::new();
    for l in &lines {
        let kind = match l.kind {
            Some(BoundKind::Upper) => "upper",
            Some(BoundKind::Lower) => "lower",
            None => "region",
        };
        let value = l.value.map_or_else(|| "-".to_string(), sig9);
        writeln!(
            table,
            "{:<18} {:<6} {:>14}  {}",
            l.id, kind, value, l.verdict
        )
        .unwrap();
    }
    let failures = lines.iter().filter(|l| l.verdict == "fail").count();
    writeln!(table, "{} checks, {failures} failed", lines.len()).unwrap();
    let json = to_json(&Verification {
        converged: true,
        passed,
        checks: lines,
    });
    let code = if passed {
        ExitCode::Success
    } else {
        ExitCode::ContainmentFailure
    };
    (table, json, code)
}

fn cmd_verify(options: &Options, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    if options.no_oracle {
        return Err(Failure::input(
            "verify needs the root finder; drop --no-oracle",
        ));
    }
    let report = build_report(options, err)?;
    let (table, json, code) = verification(&report);
    let text = match options.format {
        OutputFormat::Json => json,
        OutputFormat::Table => table,
    };
    emit(options, text.as_bytes(), out)?;
    Ok(code)
}

#[derive(Debug, Serialize)]
struct Remarks {
    remark_1: Remark1,
    remark_2: Remark2,
}

fn status_str(s: RemarkStatus) -> &'static str {
    match s {
        RemarkStatus::Pass => "pass",
        RemarkStatus::Fail => "fail",
        RemarkStatus::Informational => "informational",
        RemarkStatus::Inapplicable => "inapplicable",
    }
}

fn remarks_table(r: &Remarks) -> String {
    let mut s = String::new();
    let r1 = &r.remark_1;
    writeln!(
        s,
        "BP3 against classical upper bounds: {}",
        status_str(r1.status)
    )
    .unwrap();
    match r1.bp3 {
        Some(v) => writeln!(s, "  {:<18} {:>14}", "BP3", sig9(v)).unwrap(),
        None => writeln!(s, "  BP3 inapplicable").unwrap(),
    }
    for c in &r1.comparisons {
        writeln!(
            s,
            "  {:<18} {:>14}  margin {:>12}  {}",
            c.id.as_str(),
            sig9(c.value),
            sig9(c.margin),
            if c.bp3_smaller {
                "BP3 smaller"
            } else {
                "BP3 not smaller"
            }
        )
        .unwrap();
    }
    let r2 = &r.remark_2;
    writeln!(
        s,
        "BP3 annulus against Kim and Dalal-Govil: {}",
        status_str(r2.status)
    )
    .unwrap();
    let row =
        |s: &mut String, name: &str, a: &Option<rootzone::Annulus>, inside: Option<bool>| match a {
            Some(a) => {
                write!(
                    s,
                    "  {:<18} [{}, {}]",
                    name,
                    sig9(a.r_lower),
                    sig9(a.r_upper)
                )
                .unwrap();
                if let Some(inside) = inside {
                    write!(
                        s,
                        "  {}",
                        if inside {
                            "contains BP3 annulus"
                        } else {
                            "does not strictly contain BP3 annulus"
                        }
                    )
                    .unwrap();
                }
                s.push('\n');
            }
            None => writeln!(s, "  {name:<18} inapplicable").unwrap(),
        };
    row(&mut s, "BP3", &r2.bp3, None);
    row(&mut s, "KIM", &r2.kim, Some(r2.inside_kim));
    row(
        &mut s,
        "DALAL_GOVIL",
        &r2.dalal_govil,
        Some(r2.inside_dalal_govil),
    );
    if !r2.reason.is_empty() {
        writeln!(s, "  ({})", r2.reason).unwrap();
    }
    s
}

fn cmd_remarks(options: &Options, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let custom = read_polynomial(options)?
        .map(|g| prepare(g, err))
        .transpose()?;
    let r = match &custom {
        Some(p) => Remarks {
            remark_1: compare_remark_1(p),
            remark_2: compare_remark_2(p),
        },
        None => Remarks {
            remark_1: compare_remark_1(&remark1_polynomial()),
            remark_2: compare_remark_2(&remark2_polynomial()),
        },
    };
    let text = match options.format {
        OutputFormat::Json => to_json(&r),
        OutputFormat::Table => remarks_table(&r),
    };
    emit(options, text.as_bytes(), out)?;
    let passed = r.remark_1.status == RemarkStatus::Pass && r.remark_2.status == RemarkStatus::Pass;
    Ok(if custom.is_some() || passed {
        ExitCode::Success
    } else {
        ExitCode::ContainmentFailure
    })
}

/// Human-readable fuzz summary.
pub fn fuzz_table(s: &FuzzSummary) -> String {
    let mut t = String::new();
    let c = &s.config;
    writeln!(
        t,
        "family {} | degrees {}:{} | seed {} | {} instances",
        c.family, c.degree_lo, c.degree_hi, c.seed, s.instances
    )
    .unwrap();
    writeln!(
        t,
        "skipped (root finder did not converge): {}",
        s.skipped_nonconverged
    )
    .unwrap();
    writeln!(t, "containment checks: {}", s.checks).unwrap();
    writeln!(t, "violations: {}", s.violations.len()).unwrap();
    writeln!(
        t,
        "BP5/AOK sharpness criterion: {} checked, {} mismatches",
        s.iff_checked, s.iff_mismatches
    )
    .unwrap();
    writeln!(
        t,
        "inapplicable: KIM {}, DALAL_GOVIL {}",
        s.kim_inapplicable, s.dalal_govil_inapplicable
    )
    .unwrap();
    writeln!(
        t,
        "{:<18} {:>10} {:>16}",
        "bound", "applicable", "mean r2 / rmax"
    )
    .unwrap();
    for (id, tight) in &s.tightness {
        writeln!(
            t,
            "{:<18} {:>10} {:>16}",
            id,
            tight.applicable,
            sig9(tight.mean_ratio)
        )
        .unwrap();
    }
    for v in s.violations.iter().take(10) {
        writeln!(
            t,
            "violation: instance {} ({}, degree {}) {} claimed {} observed {}",
            v.instance,
            v.family,
            v.degree,
            v.check,
            sig9(v.claimed),
            sig9(v.observed)
        )
        .unwrap();
    }
    t
}

fn cmd_fuzz(options: &Options, out: &mut dyn Write) -> CmdResult {
    if options.count == 0 {
        return Err(Failure::input("--count must be at least 1"));
    }
    let (lo, hi) = parse_degree_range(&options.degree_range).map_err(Failure::input)?;
    if lo < 3 {
        return Err(Failure::input("degree range must start at 3 or above"));
    }
    let family: Family = options
        .family
        .parse()
        .map_err(|e: rootzone::Error| Failure::input(e.to_string()))?;
    let summary = run_fuzz(FuzzConfig {
        count: options.count,
        degree_lo: lo,
        degree_hi: hi,
        seed: options.seed,
        family,
    });
    let text = match options.format {
        OutputFormat::Json => to_json(&summary),
        OutputFormat::Table => fuzz_table(&summary),
    };
    emit(options, text.as_bytes(), out)?;
    Ok(if summary.failure_count() == 0 {
        ExitCode::Success
    } else {
        ExitCode::ContainmentFailure
    })
}

fn cmd_plot(options: &Options, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let report = build_report(options, err)?;
    emit(options, render_svg(&report).as_bytes(), out)?;
    Ok(ExitCode::Success)
}

/// Runs `cli`, writing results to `out` (unless `--output` is given) and
/// diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> ExitCode {
    let o = &cli.options;
    let result = match cli.command {
        Command::Bounds => cmd_bounds(o, out, err),
        Command::Verify => cmd_verify(o, out, err),
        Command::Remarks => cmd_remarks(o, out, err),
        Command::Fuzz => cmd_fuzz(o, out),
        Command::Plot => cmd_plot(o, out, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Parses `std::env::args` and runs against the process streams.
pub fn main_entry() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                ExitCode::InputError
            } else {
                ExitCode::Success
            };
            let _ = e.print();
            return code;
        }
    };
    run(&cli, &mut io::stdout().lock(), &mut io::stderr().lock())
}
