//! Command-line front end. [`run`] is the whole program minus process
//! plumbing, so it can be driven from tests.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{self, InvariantTable};
use crate::knot::{Frame, IteratedTorusKnot};
use crate::legendrian::{self, LegendrianClass, NonSimpleCabling};
use crate::oracle::{self, Fault, VerifyConfig, VerifyReport};
use crate::solid_tori::{self, TorusClass};

/// Environment variable capping the digits printed per integer in text and
/// TSV output. `0` or unset means unlimited.
pub const MAX_DIGITS_ENV: &str = "ITK_MAX_DIGITS";

#[derive(Parser, Debug)]
#[command(name = "itk", version, about = "Exact invariants of iterated torus knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariant table, uniform thickness verdict, solid tori, slice and cablings.
    Analyze {
        knot: String,
        #[arg(long, default_value_t = 10)]
        kmax: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Catalog of the solid tori N_i^k for k = 0..=kmax.
    Tori {
        knot: String,
        #[arg(long, default_value_t = 10)]
        kmax: u64,
        /// Prefix index i (defaults to the full knot).
        #[arg(long)]
        prefix: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Mountain-range slice points as (tb, rot, label).
    Slice {
        knot: String,
        /// Also list the stabilization chains between the slice points.
        #[arg(long)]
        chain: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Transversally non-simple cables with k <= kmax.
    Cablings {
        knot: String,
        #[arg(long, default_value_t = 20)]
        kmax: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run every oracle against the library.
    Verify {
        /// e.g. "r<=5,q<=4,p<=9,k<=50,n=100,seed=7"
        #[arg(long)]
        ranges: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, default_value = "C", value_parser = parse_frame)]
    frame: Frame,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn parse_frame(s: &str) -> std::result::Result<Frame, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Tsv,
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, stderr: String::new(), code: 0 }
    }

    fn err(e: &Error) -> Self {
        Output { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() }
    }
}

/// A knot in both frames.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotFrames {
    pub c: IteratedTorusKnot,
    pub cprime: IteratedTorusKnot,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UtpVerdict {
    pub fails_utp: bool,
    pub all_positive: bool,
}

/// A report section that only exists in the all-positive regime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Section<T> {
    Ok { items: Vec<T> },
    UnsupportedRegime { reason: String },
}

impl<T> Section<T> {
    fn from_result(r: Result<Vec<T>>) -> Result<Self> {
        match r {
            Ok(items) => Ok(Section::Ok { items }),
            Err(Error::UnsupportedRegime(reason)) => Ok(Section::UnsupportedRegime { reason }),
            Err(e) => Err(e),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub tool: String,
    pub version: String,
    pub kmax: u64,
    pub frame: Frame,
}

/// Output of `analyze`. The JSON form round-trips.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub knot: KnotFrames,
    pub invariants: InvariantTable,
    pub utp: UtpVerdict,
    pub tori: Section<TorusClass>,
    pub slice: Section<LegendrianClass>,
    pub cablings: Section<NonSimpleCabling>,
    pub metadata: Metadata,
}

/// Builds the full report; mixed-sign knots get unsupported-regime sections.
pub fn analyze(knot: &IteratedTorusKnot, kmax: u64, frame: Frame) -> Result<Report> {
    let k = knot.to_frame(Frame::C);
    let slice = legendrian::mountain_range_slice(&k).map(|mut pts| {
        legendrian::sort_points(&mut pts);
        pts
    });
    Ok(Report {
        knot: KnotFrames { c: k.clone(), cprime: k.to_frame(Frame::Cprime) },
        invariants: invariants::invariant_table(&k),
        utp: UtpVerdict { fails_utp: invariants::fails_utp(&k), all_positive: k.all_positive() },
        tori: Section::from_result(solid_tori::catalog(&k, k.len(), kmax))?,
        slice: Section::from_result(slice)?,
        cablings: Section::from_result(legendrian::enumerate_nonsimple_cablings(&k, kmax))?,
        metadata: Metadata {
            tool: "itk".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            kmax,
            frame,
        },
    })
}

/// Runs one invocation, reading the digit cap from the environment.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cap = std::env::var(MAX_DIGITS_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(0);
    run_with_digit_cap(args, cap)
}

/// [`run`] with an explicit digit cap (`0` = unlimited).
pub fn run_with_digit_cap<I, T>(args: I, max_digits: usize) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { stdout: String::new(), stderr: text, code: 2 }
            } else {
                Output::ok(text)
            };
        }
    };
    let (out, format) = match dispatch(cli.command) {
        Ok(pair) => pair,
        Err(e) => return Output::err(&e),
    };
    if format == Format::Json || max_digits == 0 {
        out
    } else {
        Output { stdout: cap_digits(&out.stdout, max_digits), ..out }
    }
}

fn dispatch(cmd: Command) -> Result<(Output, Format)> {
    match cmd {
        Command::Analyze { knot, kmax, out } => {
            let report = analyze(&knot.parse()?, kmax, out.frame)?;
            let text = match out.format {
                Format::Json => to_json(&report),
                Format::Text => render_report(&report, out.frame),
                Format::Tsv => invariants_tsv(&report.invariants),
            };
            Ok((Output::ok(text), out.format))
        }
        Command::Tori { knot, kmax, prefix, out } => {
            let k: IteratedTorusKnot = knot.parse()?;
            let rows = solid_tori::catalog(&k, prefix.unwrap_or(k.len()), kmax)?;
            let text = match out.format {
                Format::Json => to_json(&rows),
                Format::Text => tori_text(&rows, out.frame),
                Format::Tsv => tori_tsv(&rows),
            };
            Ok((Output::ok(text), out.format))
        }
        Command::Slice { knot, chain, out } => {
            let k: IteratedTorusKnot = knot.parse()?;
            let mut pts = legendrian::mountain_range_slice(&k)?;
            if chain {
                for p in legendrian::mountain_range_slice_with_chains(&k)? {
                    if !pts.iter().any(|q| q.tb == p.tb && q.rot == p.rot) {
                        pts.push(p);
                    }
                }
            }
            legendrian::sort_points(&mut pts);
            let text = match out.format {
                Format::Json => to_json(&pts),
                Format::Text => align(points_rows(&pts, true)),
                Format::Tsv => tsv(points_rows(&pts, true)),
            };
            Ok((Output::ok(text), out.format))
        }
        Command::Cablings { knot, kmax, out } => {
            let k: IteratedTorusKnot = knot.parse()?;
            let rows = legendrian::enumerate_nonsimple_cablings(&k, kmax)?;
            let text = match out.format {
                Format::Json => to_json(&rows),
                Format::Text => align(cabling_rows(&rows, Some(out.frame))),
                Format::Tsv => tsv(cabling_rows(&rows, None)),
            };
            Ok((Output::ok(text), out.format))
        }
        Command::Verify { ranges, format, inject_fault } => {
            let cfg: VerifyConfig = ranges.as_deref().map(str::parse).transpose()?.unwrap_or_default();
            let fault: Option<Fault> = inject_fault.as_deref().map(str::parse).transpose()?;
            let report = oracle::run_all(&cfg, fault);
            let text = match format {
                Format::Json => to_json(&report),
                Format::Text => verify_text(&report),
                Format::Tsv => verify_tsv(&report),
            };
            if report.all_pass() {
                Ok((Output::ok(text), format))
            } else {
                let names: Vec<&str> = report.failures().map(|r| r.check.as_str()).collect();
                let stderr = format!("error: failing checks: {}\n", names.join(", "));
                Ok((Output { stdout: text, stderr, code: 3 }, format))
            }
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".into(), ToString::to_string)
}

fn invariant_rows(t: &InvariantTable) -> Vec<Vec<String>> {
    let mut rows = vec![["i", "A", "B", "P", "p", "q", "chi", "genus", "tbbar", "width", "tbar", "C", "case"]
        .map(String::from)
        .to_vec()];
    for r in &t.rows {
        rows.push(vec![
            r.i.to_string(),
            r.A.to_string(),
            r.B.to_string(),
            r.P.to_string(),
            r.p.to_string(),
            r.q.to_string(),
            opt(&r.chi),
            opt(&r.genus),
            opt(&r.tbbar),
            opt(&r.width),
            opt(&r.tbar),
            opt(&r.C),
            r.case.map_or_else(|| "-".into(), |c| format!("{c:?}")),
        ]);
    }
    rows
}

fn invariants_tsv(t: &InvariantTable) -> String {
    tsv(invariant_rows(t))
}

fn torus_rows(rows: &[TorusClass], frame: Option<Frame>) -> Vec<Vec<String>> {
    let header = match frame {
        None => TorusClass::TSV_HEADER.split('\t').map(String::from).collect(),
        Some(_) => ["r", "k", "slope", "n", "dividing_curves", "status"].map(String::from).to_vec(),
    };
    let mut out = vec![header];
    for t in rows {
        let mut row = vec![t.r.to_string(), t.k.to_string()];
        match frame {
            None => {
                row.push(t.slope_cprime.to_string());
                row.push(t.slope_c.to_string());
            }
            Some(Frame::C) => row.push(t.slope_c.to_string()),
            Some(Frame::Cprime) => row.push(t.slope_cprime.to_string()),
        }
        row.extend([t.n.to_string(), t.dividing_curves.to_string(), t.status_label().into()]);
        out.push(row);
    }
    out
}

fn tori_text(rows: &[TorusClass], frame: Frame) -> String {
    align(torus_rows(rows, Some(frame)))
}

fn tori_tsv(rows: &[TorusClass]) -> String {
    tsv(torus_rows(rows, None))
}

fn points_rows(pts: &[LegendrianClass], header: bool) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    if header {
        out.push(LegendrianClass::TSV_HEADER.split('\t').map(String::from).collect());
    }
    out.extend(pts.iter().map(|p| vec![p.tb.to_string(), p.rot.to_string(), p.label.clone()]));
    out
}

fn cabling_rows(rows: &[NonSimpleCabling], frame: Option<Frame>) -> Vec<Vec<String>> {
    let header = match frame {
        None => NonSimpleCabling::TSV_HEADER.split('\t').map(String::from).collect(),
        Some(_) => ["k", "cable", "tbbar", "rot", "slbar", "chi_cable"].map(String::from).to_vec(),
    };
    let mut out = vec![header];
    for c in rows {
        let mut row = vec![c.k.to_string()];
        match frame {
            None => {
                row.push(c.cable_c.to_string());
                row.push(c.cable_cprime.to_string());
            }
            Some(Frame::C) => row.push(c.cable_c.to_string()),
            Some(Frame::Cprime) => row.push(c.cable_cprime.to_string()),
        }
        row.extend([
            c.tbbar.to_string(),
            format!("{},{}", c.rot_pair.0, c.rot_pair.1),
            c.slbar.to_string(),
            c.chi_cable.to_string(),
        ]);
        out.push(row);
    }
    out
}

fn render_report(r: &Report, frame: Frame) -> String {
    let mut s = String::new();
    let shown = match frame {
        Frame::C => &r.knot.c,
        Frame::Cprime => &r.knot.cprime,
    };
    let other = match frame {
        Frame::C => &r.knot.cprime,
        Frame::Cprime => &r.knot.c,
    };
    let _ = writeln!(s, "knot {shown}  (= {other})");
    let verdict = if r.utp.fails_utp {
        "fails (every P_i > 0)"
    } else {
        "holds (some P_i < 0)"
    };
    let _ = writeln!(s, "uniform thickness property: {verdict}");
    let _ = writeln!(s, "\ninvariants");
    s.push_str(&indent(&align(invariant_rows(&r.invariants))));
    section(&mut s, &format!("solid tori, k <= {}", r.metadata.kmax), &r.tori, |items| {
        align(torus_rows(items, Some(frame)))
    });
    section(&mut s, "mountain range slice", &r.slice, |items| align(points_rows(items, true)));
    section(&mut s, &format!("non-simple cablings, k <= {}", r.metadata.kmax), &r.cablings, |items| {
        if items.is_empty() {
            "none\n".into()
        } else {
            align(cabling_rows(items, Some(frame)))
        }
    });
    s
}

fn section<T>(s: &mut String, title: &str, sec: &Section<T>, body: impl FnOnce(&[T]) -> String) {
    let _ = writeln!(s, "\n{title}");
    match sec {
        Section::Ok { items } => s.push_str(&indent(&body(items))),
        Section::UnsupportedRegime { reason } => {
            let _ = writeln!(s, "  unsupported-regime: {reason}");
        }
    }
}

fn indent(block: &str) -> String {
    block.lines().map(|l| format!("  {l}\n")).collect()
}

fn verify_text(r: &VerifyReport) -> String {
    let mut s = format!("ranges {}\n", r.config);
    if let Some(f) = r.fault {
        let _ = writeln!(s, "injected fault {f:?}");
    }
    for rep in &r.reports {
        let verdict = if rep.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{verdict} {:<26} {:>7} cases", rep.check, rep.cases);
        if !rep.passed() {
            let _ = writeln!(s, "     at {}: expected {}, got {}", rep.inputs, rep.expected, rep.actual);
        }
    }
    let n_fail = r.failures().count();
    let _ = writeln!(s, "{} of {} checks passed", r.reports.len() - n_fail, r.reports.len());
    s
}

fn verify_tsv(r: &VerifyReport) -> String {
    let mut rows = vec![["check", "verdict", "cases", "inputs", "expected", "actual"].map(String::from).to_vec()];
    for rep in &r.reports {
        rows.push(vec![
            rep.check.clone(),
            format!("{:?}", rep.verdict).to_lowercase(),
            rep.cases.to_string(),
            rep.inputs.clone(),
            rep.expected.clone(),
            rep.actual.clone(),
        ]);
    }
    tsv(rows)
}

fn tsv(rows: Vec<Vec<String>>) -> String {
    rows.iter().map(|r| r.join("\t") + "\n").collect()
}

fn align(rows: Vec<Vec<String>>) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|v| v.chars().count()).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, v)| format!("{v:>w$}", w = widths[c]))
            .collect();
        s.push_str(line.join("  ").trim_end());
        s.push('\n');
    }
    s
}

/// Shortens every run of more than `max` digits to its leading `max`
/// digits followed by `…[n digits]`.
pub fn cap_digits(text: &str, max: usize) -> String {
    let mut out = String::with_capacity(text.len());
    let mut run = String::new();
    let flush = |run: &mut String, out: &mut String| {
        if max > 0 && run.len() > max {
            let _ = write!(out, "{}…[{} digits]", &run[..max], run.len());
        } else {
            out.push_str(run);
        }
        run.clear();
    };
    for ch in text.chars() {
        if ch.is_ascii_digit() {
            run.push(ch);
        } else {
            flush(&mut run, &mut out);
            out.push(ch);
        }
    }
    flush(&mut run, &mut out);
    out
}
