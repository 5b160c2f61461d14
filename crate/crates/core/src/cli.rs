//! Command-line front end.
//!
//! Every command builds a [`Report`]; text, JSON and CSV output are all
//! rendered from it, so a JSON document re-renders to the same text.

use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Number, Value};

use crate::ahss::{audit_filtrations, cohomology_table};
use crate::error::{Error, Result};
use crate::exactalg::IntPoly;
use crate::kring::{g_poly_audit, restriction_image, verify_presentation, PresentationAudit, RelationAudit};
use crate::polyzoo::{adams_psi, chebyshev_t, f_min, g_poly};
use crate::reptheory::RestrictionTarget;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "dihedral-k", version, about = "K-theory of dihedral classifying spaces: relation audits, tables and filtrations")]
pub struct Cli {
    /// Emit one JSON document.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV, one row per result.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Worker threads for sweeps.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Lift every relation of the presentation into R(D_2n).
    Verify(VerifyArgs),
    /// Print a polynomial's coefficients in ascending order.
    Poly {
        #[command(subcommand)]
        kind: PolyKind,
    },
    /// Print a cohomology table.
    Table {
        #[command(subcommand)]
        kind: TableKind,
    },
    /// Restrict a generator to a cyclic subgroup.
    Restrict(RestrictArgs),
    /// Compare truncated quotients with the claimed filtration orders.
    Audit(AuditArgs),
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// A single n.
    #[arg(conflicts_with_all = ["from", "to"], required_unless_present_all = ["from", "to"])]
    pub n: Option<u64>,
    #[arg(long, requires = "to")]
    pub from: Option<u64>,
    #[arg(long, requires = "from")]
    pub to: Option<u64>,
    /// Only odd n in the range.
    #[arg(long, conflicts_with = "even")]
    pub odd: bool,
    /// Only even n in the range.
    #[arg(long)]
    pub even: bool,
    /// Use the other labelling of η_1, η_2.
    #[arg(long)]
    pub swap_eta: bool,
}

#[derive(Subcommand, Debug)]
pub enum PolyKind {
    /// Adams polynomial ψ^I(w).
    Psi { i: u32 },
    /// f_N(w) for odd N.
    Fmin { n: u64 },
    /// g_2K(w) = ψ^{K+1}(w) - ψ^{K-1}(w).
    G { k: u32 },
    /// Chebyshev polynomial T_I.
    Cheb { i: u32 },
}

#[derive(Subcommand, Debug)]
pub enum TableKind {
    /// H^p(BD_2n; Z) for 0 <= p <= pmax.
    Cohomology {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        pmax: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Target {
    Zn,
    Z2s,
    Z2rs,
}

impl From<Target> for RestrictionTarget {
    fn from(t: Target) -> Self {
        match t {
            Target::Zn => RestrictionTarget::RotationZn,
            Target::Z2s => RestrictionTarget::ReflectionS,
            Target::Z2rs => RestrictionTarget::ReflectionRs,
        }
    }
}

#[derive(Args, Debug)]
pub struct RestrictArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub elem: String,
    #[arg(long, value_enum)]
    pub target: Target,
    #[arg(long)]
    pub swap_eta: bool,
}

#[derive(Args, Debug)]
pub struct AuditArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub depth: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Record {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    pub item: String,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defect: Option<Vec<Number>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Vec<Number>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub params: Value,
    pub results: Vec<Record>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// What a run printed and its exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn number(c: &BigInt) -> Number {
    Number::from_str(&c.to_string()).expect("integers are valid JSON numbers")
}

fn numbers(cs: &[BigInt]) -> Vec<Number> {
    cs.iter().map(number).collect()
}

fn join(ns: &[Number]) -> String {
    if ns.is_empty() {
        return "0".into();
    }
    ns.iter().map(Number::to_string).collect::<Vec<_>>().join(" ")
}

fn relation_record(n: u64, prefix: &str, r: &RelationAudit) -> Record {
    let item = match r.label.as_str() {
        "g" => format!("{prefix}g"),
        l => format!("{prefix}relation {l}"),
    };
    let status = if !r.oracle_agrees {
        "oracle-mismatch"
    } else if r.defect.is_zero() {
        "ok"
    } else {
        "defect"
    };
    Record {
        n: Some(n),
        item,
        status: status.into(),
        defect: (!r.defect.is_zero()).then(|| numbers(r.defect.coeffs())),
        basis: (!r.defect.is_zero()).then(|| r.defect.ring().basis_labels()),
        detail: (!r.defect.is_zero()).then(|| r.defect.reduced_string()),
        ..Record::default()
    }
}

fn verify_records(n: u64, swap_eta: bool) -> Result<Vec<Record>> {
    fn push(out: &mut Vec<Record>, a: &PresentationAudit, prefix: &str) {
        out.extend(a.relations.iter().map(|r| relation_record(a.n, prefix, r)));
    }
    let audit = verify_presentation(n, swap_eta)?;
    let mut out = Vec::new();
    push(&mut out, &audit, "");
    if n % 2 == 0 {
        out.push(relation_record(n, "", &g_poly_audit(n, swap_eta)?));
    }
    if let Some(other) = &audit.swapped {
        push(&mut out, other, "swapped η: ");
        if n % 2 == 0 {
            out.push(relation_record(n, "swapped η: ", &g_poly_audit(n, !swap_eta)?));
        }
    }
    Ok(out)
}

fn sweep_range(args: &VerifyArgs) -> Result<Vec<u64>> {
    let (lo, hi) = match (args.n, args.from, args.to) {
        (Some(n), _, _) => (n, n),
        (None, Some(a), Some(b)) => (a, b),
        _ => return Err(Error::InvalidArgument("give N or --from and --to".into())),
    };
    let ns: Vec<u64> = (lo..=hi)
        .filter(|n| !(args.odd && n % 2 == 0) && !(args.even && n % 2 == 1))
        .collect();
    if ns.is_empty() {
        return Err(Error::InvalidArgument(format!("empty range {lo}..={hi}")));
    }
    if let Some(bad) = ns.iter().find(|&&n| n <= 2) {
        return Err(Error::InvalidArgument(format!("n = {bad} must be at least 3")));
    }
    Ok(ns)
}

fn cmd_verify(args: &VerifyArgs, pool: &rayon::ThreadPool) -> Result<(Report, i32)> {
    let ns = sweep_range(args)?;
    let per_n: Vec<Result<Vec<Record>>> =
        pool.install(|| ns.par_iter().map(|&n| verify_records(n, args.swap_eta)).collect());
    let mut results = Vec::new();
    for r in per_n {
        results.extend(r?);
    }
    let code = if results.iter().all(|r| r.status == "ok" || r.item.starts_with("swapped")) {
        0
    } else {
        1
    };
    let params = json!({
        "n": args.n, "from": args.from, "to": args.to,
        "odd": args.odd, "even": args.even, "swap_eta": args.swap_eta,
    });
    Ok((report("verify", params, results), code))
}

fn cmd_poly(kind: &PolyKind) -> Result<(Report, i32)> {
    let (item, p): (String, IntPoly) = match *kind {
        PolyKind::Psi { i } => (format!("psi {i}"), adams_psi(i)?),
        PolyKind::Fmin { n } => (format!("fmin {n}"), f_min(n)?),
        PolyKind::G { k } => (format!("g {k}"), g_poly(k)?),
        PolyKind::Cheb { i } => (format!("cheb {i}"), chebyshev_t(i)),
    };
    let rec = Record {
        item: item.clone(),
        status: "ok".into(),
        coeffs: Some(numbers(p.coeffs())),
        detail: Some(p.to_string()),
        ..Record::default()
    };
    Ok((report("poly", json!({ "poly": item }), vec![rec]), 0))
}

fn cmd_table(kind: &TableKind) -> Result<(Report, i32)> {
    let TableKind::Cohomology { n, pmax } = *kind;
    let table = cohomology_table(n, pmax)?;
    let results = table
        .rows
        .iter()
        .map(|row| Record {
            n: Some(n),
            item: format!("H^{}", row.p),
            status: "ok".into(),
            detail: Some(row.label.clone()),
            ..Record::default()
        })
        .collect();
    Ok((report("table cohomology", json!({ "n": n, "pmax": pmax }), results), 0))
}

fn cmd_restrict(args: &RestrictArgs) -> Result<(Report, i32)> {
    let target = RestrictionTarget::from(args.target);
    let img = restriction_image(args.n, &args.elem, target, args.swap_eta)?;
    let m = img.modulus_m();
    let rec = Record {
        n: Some(args.n),
        item: format!("{} -> {}", args.elem, format!("{:?}", args.target).to_lowercase()),
        status: "ok".into(),
        coeffs: Some(numbers(img.to_poly().coeffs())),
        basis: Some((0..m).map(|i| format!("μ^{i}")).collect()),
        detail: Some(img.to_string()),
        ..Record::default()
    };
    let params = json!({
        "n": args.n, "elem": args.elem,
        "target": format!("{:?}", args.target).to_lowercase(), "swap_eta": args.swap_eta,
    });
    Ok((report("restrict", params, vec![rec]), 0))
}

fn cmd_audit(args: &AuditArgs) -> Result<(Report, i32)> {
    let audit = audit_filtrations(args.n, args.depth)?;
    let results = audit
        .rows
        .iter()
        .map(|r| Record {
            n: Some(args.n),
            item: format!("gr_{} (degree {})", r.depth, r.degree),
            status: r.status.as_str().into(),
            detail: Some(format!(
                "|gr| = {} ({}), {} order {}",
                r.graded_order, r.graded, r.expected_page, r.expected_order
            )),
            ..Record::default()
        })
        .collect();
    let code = if audit.pass() { 0 } else { 1 };
    Ok((report("audit", json!({ "n": args.n, "depth": args.depth }), results), code))
}

fn report(command: &str, params: Value, results: Vec<Record>) -> Report {
    Report {
        schema_version: SCHEMA_VERSION,
        command: command.into(),
        params,
        results,
    }
}

/// Human-readable rendering; depends only on the report contents.
pub fn render_text(report: &Report) -> String {
    let mut s = String::new();
    for r in &report.results {
        let line = match report.command.as_str() {
            "poly" | "restrict" => join(r.coeffs.as_deref().unwrap_or(&[])),
            "table cohomology" => format!(
                "{} ↦ {}",
                r.item.trim_start_matches("H^"),
                r.detail.as_deref().unwrap_or("")
            ),
            _ => {
                let mut line = String::new();
                if let Some(n) = r.n {
                    line.push_str(&format!("n={n} "));
                }
                line.push_str(&format!("{}: {}", r.item, r.status));
                if let Some(d) = &r.detail {
                    line.push(' ');
                    line.push_str(d);
                }
                line
            }
        };
        s.push_str(&line);
        s.push('\n');
    }
    s
}

pub fn render_csv(report: &Report) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::InvalidArgument(format!("csv: {e}"));
    w.write_record(["n", "item", "status", "detail", "coeffs", "defect"]).map_err(io)?;
    let list = |v: &Option<Vec<Number>>| v.as_ref().map(|v| join(v)).unwrap_or_default();
    for r in &report.results {
        w.write_record([
            r.n.map(|n| n.to_string()).unwrap_or_default(),
            r.item.clone(),
            r.status.clone(),
            r.detail.clone().unwrap_or_default(),
            list(&r.coeffs),
            list(&r.defect),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn render(report: &Report, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => render_text(report),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(report)?,
    })
}

/// Parses arguments, runs the command and captures its output.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Text
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.map(usize::from).unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => return usage(format!("cannot start worker pool: {e}")),
    };
    let result = match &cli.command {
        Command::Verify(a) => cmd_verify(a, &pool),
        Command::Poly { kind } => cmd_poly(kind),
        Command::Table { kind } => cmd_table(kind),
        Command::Restrict(a) => cmd_restrict(a),
        Command::Audit(a) => cmd_audit(a),
    };
    match result.and_then(|(report, code)| Ok((render(&report, format)?, code))) {
        Ok((stdout, code)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => usage(format!("error: {e}\n")),
    }
}

fn usage(msg: String) -> Outcome {
    Outcome {
        code: 2,
        stdout: String::new(),
        stderr: msg,
    }
}

pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let out = run(args);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    out.code
}
