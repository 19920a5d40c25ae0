//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification or comparison fails,
//! 2 on usage errors (bad flags, partition literals, or sizes a method
//! refuses).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::closedform::{self, HurwitzRecord};
use crate::cutjoin::CutJoinState;
use crate::oracle;
use crate::partitions::partitions_of;
use crate::verify::{self, Fault, VerifyOptions};
use crate::{hurwitz_number, HurwitzError, Method, Partition, Result, Truncation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hurwitz", version, about = "Exact genus-0 and genus-1 Hurwitz numbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute c_g(alpha) and the Hurwitz number for one partition.
    Count(CountArgs),
    /// Tabulate c_0, mu_0, c_1, mu_1 for every partition of n.
    Table(TableArgs),
    /// Run every identity check and print a JSON report.
    Verify(VerifyArgs),
    /// Compute every c_g(alpha) for alpha of n by all applicable methods.
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Oracle,
    Cutjoin,
    Closed,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Cutjoin => Method::CutJoin,
            MethodArg::Closed => Method::Closed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Truncation overrides.
#[derive(Debug, Clone, Args)]
pub struct TruncArgs {
    /// Maximum x-degree (degree of the covering).
    #[arg(long = "N", env = "HURWITZ_TRUNC_N", default_value_t = 8)]
    pub n: u32,
    /// Maximum p-index; defaults to N.
    #[arg(long = "K")]
    pub k: Option<u32>,
    /// Maximum genus.
    #[arg(long = "G", default_value_t = 1)]
    pub g: u32,
}

impl TruncArgs {
    pub fn truncation(&self) -> Result<Truncation> {
        Truncation::new(self.n, self.k.unwrap_or(self.n), self.g)
    }
}

#[derive(Debug, Clone, Args)]
pub struct CountArgs {
    /// Partition, parts separated by commas, e.g. 3,2,2.
    #[arg(long)]
    pub alpha: String,
    #[arg(long, default_value_t = 0)]
    pub genus: u32,
    #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// One row per (alpha, genus) with columns alpha,g,r,c,mu.
    #[arg(long)]
    pub long: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub trunc: TruncArgs,
    /// Per-variable order of the series checks on the symmetrized closed forms.
    #[arg(long, default_value_t = 10)]
    pub series_order: u32,
    /// Per-variable order of the series route for the symmetrized remainders.
    #[arg(long, default_value_t = 6)]
    pub u_series_order: u32,
    /// Deliberately break one input: g1, or a closed-form coefficient A0..E3.
    #[arg(long = "inject-fault", value_name = "FAULT")]
    pub inject_fault: Vec<String>,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = 1)]
    pub genus_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

fn exit_code(e: &HurwitzError) -> i32 {
    match e {
        HurwitzError::Integrality(_) | HurwitzError::Convergence(_) => EXIT_FAILURE,
        _ => EXIT_USAGE,
    }
}

/// Parses arguments and runs the command, writing results to `out` and
/// diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(&cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Count(a) => cmd_count(a, out, err),
        Command::Table(a) => cmd_table(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Compare(a) => cmd_compare(a, out, err),
    }
}

fn io_err(e: impl std::fmt::Display) -> HurwitzError {
    HurwitzError::Usage(format!("cannot write output: {e}"))
}

/// Parses a partition literal, warning on stderr if the parts had to be
/// reordered.
pub fn parse_alpha(s: &str, err: &mut dyn Write) -> Result<Partition> {
    let alpha: Partition = s.parse()?;
    let given: Vec<u32> = s
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .filter_map(|p| p.trim().parse().ok())
        .collect();
    if given != alpha.parts() {
        let _ = writeln!(err, "warning: parts reordered to {alpha}");
    }
    Ok(alpha)
}

#[derive(Serialize)]
struct RecordJson {
    alpha: Vec<u32>,
    genus: u32,
    r: u32,
    c: String,
    mu: String,
    method: &'static str,
}

fn record_json(rec: &HurwitzRecord, method: Method) -> RecordJson {
    RecordJson {
        alpha: rec.alpha.parts().to_vec(),
        genus: rec.genus,
        r: rec.r,
        c: rec.c.to_string(),
        mu: rec.mu.to_string(),
        method: method.name(),
    }
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out)
}

pub fn cmd_count(a: &CountArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let alpha = parse_alpha(&a.alpha, err)?;
    let method = Method::from(a.method);
    let rec = hurwitz_number(&alpha, a.genus, method)?;
    match a.format {
        Format::Json => {
            let s = serde_json::to_string(&record_json(&rec, method)).map_err(io_err)?;
            writeln!(out, "{s}").map_err(io_err)?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["alpha", "g", "r", "c", "mu"]).map_err(io_err)?;
            w.write_record([
                rec.alpha.to_string(),
                rec.genus.to_string(),
                rec.r.to_string(),
                rec.c.to_string(),
                rec.mu.to_string(),
            ])
            .map_err(io_err)?;
            w.flush().map_err(io_err)?;
        }
    }
    Ok(EXIT_OK)
}

/// `c_g(α)` for every `α ⊢ n` and `g ≤ genus_max` by one method.
pub fn counts_for(n: u32, genus_max: u32, method: Method) -> Result<BTreeMap<(Partition, u32), BigInt>> {
    if n == 0 {
        return Err(HurwitzError::Usage("n must be at least 1".into()));
    }
    let mut out = BTreeMap::new();
    match method {
        Method::CutJoin => {
            let state = CutJoinState::run(Truncation::new(n, n, genus_max)?)?;
            for alpha in partitions_of(n) {
                for g in 0..=genus_max {
                    out.insert((alpha.clone(), g), state.extract_c(&alpha, g)?);
                }
            }
        }
        Method::Oracle => {
            if n > oracle::WALK_MAX_N {
                return Err(HurwitzError::Size(format!(
                    "the oracle handles n <= {}, got {n}",
                    oracle::WALK_MAX_N
                )));
            }
            for alpha in partitions_of(n) {
                for g in 0..=genus_max {
                    out.insert((alpha.clone(), g), oracle::count_transitive(&alpha, g)?);
                }
            }
        }
        Method::Closed => {
            for alpha in partitions_of(n) {
                for g in 0..=genus_max {
                    out.insert((alpha.clone(), g), closedform::predicted_c(&alpha, g)?);
                }
            }
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct TableRowJson {
    alpha: Vec<u32>,
    c0: String,
    mu0: String,
    c1: String,
    mu1: String,
}

pub fn cmd_table(a: &TableArgs, out: &mut dyn Write) -> Result<i32> {
    let method = Method::from(a.method);
    let counts = counts_for(a.n, 1, method)?;
    let record = |alpha: &Partition, g: u32| -> Result<HurwitzRecord> {
        HurwitzRecord::from_count(alpha.clone(), g, counts[&(alpha.clone(), g)].clone())
    };
    let rows: Vec<(HurwitzRecord, HurwitzRecord)> =
        partitions_of(a.n).iter().map(|al| Ok((record(al, 0)?, record(al, 1)?))).collect::<Result<_>>()?;
    match (a.format, a.long) {
        (Format::Json, false) => {
            let json: Vec<TableRowJson> = rows
                .iter()
                .map(|(r0, r1)| TableRowJson {
                    alpha: r0.alpha.parts().to_vec(),
                    c0: r0.c.to_string(),
                    mu0: r0.mu.to_string(),
                    c1: r1.c.to_string(),
                    mu1: r1.mu.to_string(),
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&json).map_err(io_err)?).map_err(io_err)?;
        }
        (Format::Json, true) => {
            let json: Vec<RecordJson> =
                rows.iter().flat_map(|(r0, r1)| [record_json(r0, method), record_json(r1, method)]).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&json).map_err(io_err)?).map_err(io_err)?;
        }
        (Format::Csv, false) => {
            let mut w = csv_writer(out);
            w.write_record(["alpha", "c0", "mu0", "c1", "mu1"]).map_err(io_err)?;
            for (r0, r1) in &rows {
                w.write_record([
                    r0.alpha.to_string(),
                    r0.c.to_string(),
                    r0.mu.to_string(),
                    r1.c.to_string(),
                    r1.mu.to_string(),
                ])
                .map_err(io_err)?;
            }
            w.flush().map_err(io_err)?;
        }
        (Format::Csv, true) => {
            let mut w = csv_writer(out);
            w.write_record(["alpha", "g", "r", "c", "mu"]).map_err(io_err)?;
            for rec in rows.iter().flat_map(|(r0, r1)| [r0, r1]) {
                w.write_record([
                    rec.alpha.to_string(),
                    rec.genus.to_string(),
                    rec.r.to_string(),
                    rec.c.to_string(),
                    rec.mu.to_string(),
                ])
                .map_err(io_err)?;
            }
            w.flush().map_err(io_err)?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let faults = a.inject_fault.iter().map(|s| s.parse::<Fault>()).collect::<Result<Vec<_>>>()?;
    let opts = VerifyOptions {
        trunc: a.trunc.truncation()?,
        series_order: a.series_order,
        u_series_order: a.u_series_order,
        faults,
    };
    let report = verify::run_all(&opts)?;
    writeln!(out, "{}", report.to_json()).map_err(io_err)?;
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_FAILURE })
}

#[derive(Serialize)]
struct CompareRowJson {
    alpha: Vec<u32>,
    genus: u32,
    oracle: Option<String>,
    cutjoin: String,
    closed: Option<String>,
    agree: bool,
}

pub fn cmd_compare(a: &CompareArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let cutjoin = counts_for(a.n, a.genus_max, Method::CutJoin)?;
    let oracle = if a.n <= oracle::WALK_MAX_N {
        Some(counts_for(a.n, a.genus_max, Method::Oracle)?)
    } else {
        let _ = writeln!(err, "note: oracle skipped for n > {}", oracle::WALK_MAX_N);
        None
    };
    let closed = counts_for(a.n, a.genus_max.min(1), Method::Closed)?;

    let mut rows = Vec::new();
    let mut disagreements = 0usize;
    for alpha in partitions_of(a.n) {
        for g in 0..=a.genus_max {
            let key = (alpha.clone(), g);
            let cj = &cutjoin[&key];
            let or = oracle.as_ref().map(|m| &m[&key]);
            let cl = closed.get(&key);
            let agree = or.is_none_or(|v| v == cj) && cl.is_none_or(|v| v == cj);
            if !agree {
                disagreements += 1;
            }
            rows.push(CompareRowJson {
                alpha: alpha.parts().to_vec(),
                genus: g,
                oracle: or.map(BigInt::to_string),
                cutjoin: cj.to_string(),
                closed: cl.map(BigInt::to_string),
                agree,
            });
        }
    }
    match a.format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(&rows).map_err(io_err)?).map_err(io_err)?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["alpha", "g", "oracle", "cutjoin", "closed", "agree"]).map_err(io_err)?;
            for r in &rows {
                let alpha = Partition::new(r.alpha.clone())?;
                w.write_record([
                    alpha.to_string(),
                    r.genus.to_string(),
                    r.oracle.clone().unwrap_or_else(|| "-".into()),
                    r.cutjoin.clone(),
                    r.closed.clone().unwrap_or_else(|| "-".into()),
                    r.agree.to_string(),
                ])
                .map_err(io_err)?;
            }
            w.flush().map_err(io_err)?;
        }
    }
    let _ = writeln!(err, "{disagreements} disagreement(s)");
    Ok(if disagreements == 0 { EXIT_OK } else { EXIT_FAILURE })
}
