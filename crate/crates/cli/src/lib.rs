//! Command-line front end for `scrollcoh`.
//!
//! [`run`] takes the arguments after the program name and writes to the given
//! streams. Exit codes: 0 when a result was computed (including negative and
//! indeterminate verdicts), 2 for usage and parse errors, 3 for domain errors
//! such as an invalid scroll.

pub mod harness;
pub mod parse;
pub mod report;

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand};
use scrollcoh::{
    classify_regular_acm_log, decide_split_acm3, decide_split_th, detect_line_summand, ext1_dim,
    extension_cohomology, is_acm, is_pp_regular, is_ulrich, line_cohomology, log_splitting_type,
    make_ulrich, reg, residue_consistency, validate_arrangement, BundleExpr, DivisorClass, Error,
    Probe, Scroll, SplitVerdict, SummandVerdict, TwistGrid, Verdict,
};
use serde::Serialize;
use thiserror::Error;

pub use parse::{parse_bundle_spec, ParseError};
use report::{pair, pairs, verdict_text, witnesses, Dim, Witness};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Io(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse(_) => "parse",
            CliError::Domain(_) => "domain",
            CliError::Io(_) => "io",
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn parse_pair(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected two integers X,Y, got {s:?}"))?;
    let int = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
    Ok((int(a)?, int(b)?))
}

fn parse_range(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected MIN:MAX, got {s:?}"))?;
    let (lo, hi) = (
        a.trim().parse::<i64>().map_err(|e| format!("{a:?}: {e}"))?,
        b.trim().parse::<i64>().map_err(|e| format!("{b:?}: {e}"))?,
    );
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

fn parse_twists(s: &str) -> std::result::Result<TwistGrid, String> {
    let (h, f) = s
        .split_once(',')
        .ok_or_else(|| format!("expected HMIN:HMAX,FMIN:FMAX, got {s:?}"))?;
    let (h, f) = (parse_range(h)?, parse_range(f)?);
    Ok(TwistGrid::new(h.0, h.1, f.0, f.1))
}

#[derive(Debug, Parser)]
#[command(
    name = "scrollcoh",
    version,
    about = "Cohomology of vector bundles on rational normal scroll surfaces"
)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ScrollArg {
    /// Scroll S(A0,A1) with 0 < A0 <= A1.
    #[arg(long, value_name = "A0,A1", value_parser = parse_pair, allow_hyphen_values = true)]
    scroll: (i64, i64),
}

impl ScrollArg {
    fn get(&self) -> CliResult<Scroll> {
        Ok(Scroll::new(self.scroll.0, self.scroll.1)?)
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct BundleArg {
    /// A line bundle O(H*h + F*f).
    #[arg(long, value_name = "H,F", value_parser = parse_pair, allow_hyphen_values = true)]
    divisor: Option<(i64, i64)>,
    /// A bundle in the spec grammar, e.g. "O(1,-1) + ext(O(1,-1); O(0,2))".
    #[arg(long, value_name = "SPEC", allow_hyphen_values = true)]
    bundle: Option<String>,
}

impl BundleArg {
    fn get(&self) -> CliResult<BundleExpr> {
        match (&self.divisor, &self.bundle) {
            (Some((h, f)), _) => Ok(BundleExpr::line(DivisorClass::new(*h, *f))),
            (None, Some(text)) => Ok(parse_bundle_spec(text)?),
            (None, None) => Err(CliError::Usage(
                "one of --divisor or --bundle is required".into(),
            )),
        }
    }
}

#[derive(Debug, Args)]
struct ArrangementArg {
    /// Number of fibres.
    #[arg(long, allow_hyphen_values = true)]
    lines: i64,
    /// Number of rational curves in |H - a1 f|.
    #[arg(long, allow_hyphen_values = true)]
    curves: i64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// h^0, h^1, h^2 and chi of a line bundle or bundle expression.
    Cohomology {
        #[command(flatten)]
        scroll: ScrollArg,
        #[command(flatten)]
        bundle: BundleArg,
        /// Twist the bundle by O(H*h + F*f).
        #[arg(long, value_name = "H,F", value_parser = parse_pair, allow_hyphen_values = true)]
        twist: Option<(i64, i64)>,
    },
    /// CSV of cohomology over a rectangle of twists.
    Table {
        #[command(flatten)]
        scroll: ScrollArg,
        #[command(flatten)]
        bundle: BundleArg,
        #[arg(long, value_name = "HMIN:HMAX,FMIN:FMAX", value_parser = parse_twists, allow_hyphen_values = true)]
        twists: TwistGrid,
    },
    /// (p,p')-regularity and Reg.
    Regularity {
        #[command(flatten)]
        scroll: ScrollArg,
        #[command(flatten)]
        bundle: BundleArg,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        pp: i64,
    },
    /// Splitting into twists of O.
    SplitH {
        #[command(flatten)]
        scroll: ScrollArg,
        #[command(flatten)]
        bundle: BundleArg,
    },
    /// Splitting into twists of O, O(f) and O(H-f).
    SplitAcm {
        #[command(flatten)]
        scroll: ScrollArg,
        #[command(flatten)]
        bundle: BundleArg,
    },
    /// A line-bundle direct summand of a regular bundle.
    Summand {
        #[command(flatten)]
        scroll: ScrollArg,
        #[command(flatten)]
        bundle: BundleArg,
    },
    /// h^1(E(tH)) = 0 for all t.
    Acm {
        #[command(flatten)]
        scroll: ScrollArg,
        #[command(flatten)]
        bundle: BundleArg,
    },
    /// Ulrich test.
    Ulrich {
        #[command(flatten)]
        scroll: ScrollArg,
        #[command(flatten)]
        bundle: BundleArg,
    },
    /// Extension of O((c-1)f)^b by O(H-f)^a.
    UlrichMake {
        #[command(flatten)]
        scroll: ScrollArg,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// dim Ext^1(O(FROM), O(TO)).
    Ext1 {
        #[command(flatten)]
        scroll: ScrollArg,
        #[arg(long, value_name = "H,F", value_parser = parse_pair, allow_hyphen_values = true)]
        from: (i64, i64),
        #[arg(long, value_name = "H,F", value_parser = parse_pair, allow_hyphen_values = true)]
        to: (i64, i64),
    },
    /// Splitting type of the logarithmic cotangent bundle.
    Log {
        #[command(flatten)]
        scroll: ScrollArg,
        #[command(flatten)]
        arrangement: ArrangementArg,
    },
    /// Residue-sequence check of a splitting type.
    LogCheck {
        #[command(flatten)]
        scroll: ScrollArg,
        #[command(flatten)]
        arrangement: ArrangementArg,
        /// Splitting type to check; defaults to the computed one.
        #[arg(long, value_name = "SPEC", allow_hyphen_values = true)]
        claimed: Option<String>,
        #[arg(long, value_name = "HMIN:HMAX,FMIN:FMAX", value_parser = parse_twists, allow_hyphen_values = true, default_value = "-4:4,-6:6")]
        twists: TwistGrid,
    },
    /// Arrangements with regular ACM logarithmic bundle.
    ClassifyLog {
        #[command(flatten)]
        scroll: ScrollArg,
        #[arg(long)]
        max_lines: u32,
        #[arg(long)]
        max_curves: u32,
    },
}

struct Emitter<'a> {
    out: &'a mut dyn Write,
    json: bool,
}

impl Emitter<'_> {
    fn emit<T: Serialize>(&mut self, report: &T, text: String) -> CliResult<()> {
        if self.json {
            let s = serde_json::to_string(report).expect("reports serialize");
            writeln!(self.out, "{s}")?;
        } else {
            self.out.write_all(text.as_bytes())?;
        }
        Ok(())
    }
}

/// Runs the CLI on `args` (without the program name). Returns the exit code.
pub fn run<S: AsRef<str>>(args: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let argv = std::iter::once("scrollcoh").chain(args.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let json = cli.json;
    let mut em = Emitter { out, json };
    match dispatch(cli.command, &mut em) {
        Ok(()) => 0,
        Err(e) => {
            if json {
                #[derive(Serialize)]
                struct ErrorReport<'a> {
                    error: &'a str,
                    message: String,
                }
                let r = ErrorReport {
                    error: e.kind(),
                    message: e.to_string(),
                };
                let _ = writeln!(err, "{}", serde_json::to_string(&r).expect("serializes"));
            } else {
                let _ = writeln!(err, "error: {e}");
            }
            e.exit_code()
        }
    }
}

#[derive(Serialize)]
struct Verdicted<'a> {
    scroll: Scroll,
    input: &'a str,
    verdict: Verdict,
    witnesses: Vec<Witness>,
}

fn dispatch(cmd: Command, em: &mut Emitter<'_>) -> CliResult<()> {
    match cmd {
        Command::Cohomology {
            scroll,
            bundle,
            twist,
        } => cohomology(em, scroll.get()?, &bundle, twist),
        Command::Table {
            scroll,
            bundle,
            twists,
        } => table(em, scroll.get()?, &bundle.get()?, &twists),
        Command::Regularity {
            scroll,
            bundle,
            p,
            pp,
        } => regularity(em, scroll.get()?, &bundle.get()?, p, pp),
        Command::SplitH { scroll, bundle } => {
            let (s, b) = (scroll.get()?, bundle.get()?);
            splitting(em, s, &b, decide_split_th(&s, &b))
        }
        Command::SplitAcm { scroll, bundle } => {
            let (s, b) = (scroll.get()?, bundle.get()?);
            splitting(em, s, &b, decide_split_acm3(&s, &b))
        }
        Command::Summand { scroll, bundle } => summand(em, scroll.get()?, &bundle.get()?),
        Command::Acm { scroll, bundle } => {
            let (s, b) = (scroll.get()?, bundle.get()?);
            let d = is_acm(&s, &b);
            decision(em, s, &b, d.verdict, &d.witnesses)
        }
        Command::Ulrich { scroll, bundle } => {
            let (s, b) = (scroll.get()?, bundle.get()?);
            let d = is_ulrich(&s, &b);
            decision(em, s, &b, d.verdict, &d.witnesses)
        }
        Command::UlrichMake { scroll, a, b } => ulrich_make(em, scroll.get()?, a, b),
        Command::Ext1 { scroll, from, to } => {
            let s = scroll.get()?;
            #[derive(Serialize)]
            struct Input {
                from: [i64; 2],
                to: [i64; 2],
            }
            #[derive(Serialize)]
            struct Report {
                scroll: Scroll,
                input: Input,
                ext1: u64,
            }
            let (from, to) = (DivisorClass::from(from), DivisorClass::from(to));
            let r = Report {
                scroll: s,
                input: Input {
                    from: pair(from),
                    to: pair(to),
                },
                ext1: ext1_dim(&s, from, to),
            };
            let text = format!("ext1(O{from}, O{to}) = {}\n", r.ext1);
            em.emit(&r, text)
        }
        Command::Log {
            scroll,
            arrangement,
        } => log(em, scroll.get()?, &arrangement),
        Command::LogCheck {
            scroll,
            arrangement,
            claimed,
            twists,
        } => log_check(em, scroll.get()?, &arrangement, claimed.as_deref(), &twists),
        Command::ClassifyLog {
            scroll,
            max_lines,
            max_curves,
        } => classify_log(em, scroll.get()?, max_lines, max_curves),
    }
}

fn cohomology(
    em: &mut Emitter<'_>,
    s: Scroll,
    bundle: &BundleArg,
    twist: Option<(i64, i64)>,
) -> CliResult<()> {
    #[derive(Serialize)]
    struct Report<'a> {
        scroll: Scroll,
        #[serde(skip_serializing_if = "Option::is_none")]
        divisor: Option<[i64; 2]>,
        #[serde(skip_serializing_if = "Option::is_none")]
        input: Option<&'a str>,
        #[serde(skip_serializing_if = "Option::is_none")]
        twist: Option<[i64; 2]>,
        h: [Dim; 3],
        chi: i64,
    }
    let t = twist.map(DivisorClass::from).unwrap_or_default();
    let b = bundle.get()?;
    let input = b.to_string();
    let (h, chi) = match bundle.divisor {
        Some(d) => {
            let r = line_cohomology(&s, DivisorClass::from(d) + t);
            (r.as_array().map(Dim::Exact), r.chi())
        }
        None => {
            let r = extension_cohomology(&s, &b, t);
            (r.h.map(Dim::from), r.chi)
        }
    };
    let r = Report {
        scroll: s,
        divisor: bundle.divisor.map(|d| pair(d.into())),
        input: bundle.bundle.as_ref().map(|_| input.as_str()),
        twist: twist.map(|d| pair(d.into())),
        h,
        chi,
    };
    let text = format!(
        "h0 = {}, h1 = {}, h2 = {}, chi = {}\n",
        h[0], h[1], h[2], chi
    );
    em.emit(&r, text)
}

fn table(em: &mut Emitter<'_>, s: Scroll, b: &BundleExpr, grid: &TwistGrid) -> CliResult<()> {
    #[derive(Serialize)]
    struct Row {
        twist: [i64; 2],
        h: [Dim; 3],
        chi: i64,
    }
    #[derive(Serialize)]
    struct Report {
        scroll: Scroll,
        input: String,
        rows: Vec<Row>,
    }
    let rows: Vec<Row> = grid
        .iter()
        .map(|t| {
            let c = extension_cohomology(&s, b, t);
            Row {
                twist: pair(t),
                h: c.h.map(Dim::from),
                chi: c.chi,
            }
        })
        .collect();
    let mut text = String::from("tH,tf,h0,h1,h2,chi\n");
    for r in &rows {
        text += &format!(
            "{},{},{},{},{},{}\n",
            r.twist[0], r.twist[1], r.h[0], r.h[1], r.h[2], r.chi
        );
    }
    em.emit(
        &Report {
            scroll: s,
            input: b.to_string(),
            rows,
        },
        text,
    )
}

fn regularity(em: &mut Emitter<'_>, s: Scroll, b: &BundleExpr, p: i64, pp: i64) -> CliResult<()> {
    #[derive(Serialize)]
    struct Report {
        scroll: Scroll,
        input: String,
        p: i64,
        pp: i64,
        verdict: Verdict,
        reg: Option<i64>,
        witnesses: Vec<Witness>,
    }
    let r = is_pp_regular(&s, b, p, pp);
    let reg = match reg(&s, b) {
        Ok(v) => Some(v),
        Err(Error::Indeterminate { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let ws = witnesses(&r.witnesses);
    let mut text = verdict_text(r.verdict, &ws);
    text += &match reg {
        Some(v) => format!("reg: {v}\n"),
        None => "reg: indeterminate\n".to_string(),
    };
    let report = Report {
        scroll: s,
        input: b.to_string(),
        p,
        pp,
        verdict: r.verdict,
        reg,
        witnesses: ws,
    };
    em.emit(&report, text)
}

fn splitting(em: &mut Emitter<'_>, s: Scroll, b: &BundleExpr, v: SplitVerdict) -> CliResult<()> {
    #[derive(Serialize)]
    struct Report {
        scroll: Scroll,
        input: String,
        verdict: Verdict,
        splitting: Option<Vec<[i64; 2]>>,
        witnesses: Vec<Witness>,
    }
    let (verdict, split, ws) = match &v {
        SplitVerdict::Splits(sum) => (Verdict::True, Some(sum.clone()), vec![]),
        SplitVerdict::Fails {
            condition,
            t,
            value,
        } => {
            let p = Probe {
                name: condition.name(),
                degree: 1,
                twist: DivisorClass::new(*t, condition.f_offset(&s)),
                value: *value,
            };
            (Verdict::False, None, vec![Witness::from(&p)])
        }
        SplitVerdict::Indeterminate(ps) => (Verdict::Indeterminate, None, witnesses(ps)),
    };
    let mut text = verdict_text(verdict, &ws);
    if let Some(sum) = &split {
        text += &format!("splitting: {sum}\n");
    }
    let r = Report {
        scroll: s,
        input: b.to_string(),
        verdict,
        splitting: split.as_ref().map(pairs),
        witnesses: ws,
    };
    em.emit(&r, text)
}

fn summand(em: &mut Emitter<'_>, s: Scroll, b: &BundleExpr) -> CliResult<()> {
    #[derive(Serialize)]
    struct Report {
        scroll: Scroll,
        input: String,
        verdict: Verdict,
        summand: Option<[i64; 2]>,
        witnesses: Vec<Witness>,
    }
    let (verdict, class, ws) = match detect_line_summand(&s, b)? {
        SummandVerdict::Summand { class, witness } => {
            (Verdict::True, Some(class), vec![Witness::from(&witness)])
        }
        SummandVerdict::None => (Verdict::False, None, vec![]),
        SummandVerdict::Indeterminate(ps) => (Verdict::Indeterminate, None, witnesses(&ps)),
    };
    let mut text = verdict_text(verdict, &ws);
    if let Some(c) = class {
        text += &format!("summand: O{c}\n");
    }
    let r = Report {
        scroll: s,
        input: b.to_string(),
        verdict,
        summand: class.map(pair),
        witnesses: ws,
    };
    em.emit(&r, text)
}

fn decision(
    em: &mut Emitter<'_>,
    s: Scroll,
    b: &BundleExpr,
    verdict: Verdict,
    probes: &[Probe],
) -> CliResult<()> {
    let input = b.to_string();
    let ws = witnesses(probes);
    let text = verdict_text(verdict, &ws);
    em.emit(
        &Verdicted {
            scroll: s,
            input: &input,
            verdict,
            witnesses: ws,
        },
        text,
    )
}

fn ulrich_make(em: &mut Emitter<'_>, s: Scroll, a: usize, b: usize) -> CliResult<()> {
    #[derive(Serialize)]
    struct Input {
        a: usize,
        b: usize,
    }
    #[derive(Serialize)]
    struct Report {
        scroll: Scroll,
        input: Input,
        bundle: String,
        rank: usize,
        verdict: Verdict,
        witnesses: Vec<Witness>,
    }
    let e = make_ulrich(&s, a, b)?;
    let d = is_ulrich(&s, &e);
    let ws = witnesses(&d.witnesses);
    let text = format!("bundle: {e}\nrank: {}\n", e.rank()) + &verdict_text(d.verdict, &ws);
    let r = Report {
        scroll: s,
        input: Input { a, b },
        bundle: e.to_string(),
        rank: e.rank(),
        verdict: d.verdict,
        witnesses: ws,
    };
    em.emit(&r, text)
}

#[derive(Serialize)]
struct ArrangementInput {
    lines: i64,
    curves: i64,
}

fn log(em: &mut Emitter<'_>, s: Scroll, arr: &ArrangementArg) -> CliResult<()> {
    #[derive(Serialize)]
    struct Report {
        scroll: Scroll,
        input: ArrangementInput,
        splitting: Vec<[i64; 2]>,
        flags: Vec<&'static str>,
    }
    let a = validate_arrangement(&s, arr.lines, arr.curves)?;
    let split = log_splitting_type(&a)?;
    let flags = a.flags();
    let mut text = format!("splitting: {split}\n");
    for f in &flags {
        text += &format!("flag: {f}\n");
    }
    let r = Report {
        scroll: s,
        input: ArrangementInput {
            lines: arr.lines,
            curves: arr.curves,
        },
        splitting: pairs(&split),
        flags,
    };
    em.emit(&r, text)
}

fn log_check(
    em: &mut Emitter<'_>,
    s: Scroll,
    arr: &ArrangementArg,
    claimed: Option<&str>,
    grid: &TwistGrid,
) -> CliResult<()> {
    #[derive(Serialize)]
    struct Failure {
        twist: [i64; 2],
        lhs: i64,
        rhs: i64,
    }
    #[derive(Serialize)]
    struct Report {
        scroll: Scroll,
        input: ArrangementInput,
        splitting: Vec<[i64; 2]>,
        verdict: Verdict,
        c1_check: bool,
        chi_checked: usize,
        chi_failures: Vec<Failure>,
        flags: Vec<&'static str>,
    }
    let a = validate_arrangement(&s, arr.lines, arr.curves)?;
    let claimed = match claimed {
        None => log_splitting_type(&a)?,
        Some(text) => match parse_bundle_spec(text)? {
            BundleExpr::Sum(sum) => sum,
            other => {
                return Err(CliError::Usage(format!(
                    "--claimed must be a sum of line bundles, got {other}"
                )))
            }
        },
    };
    let rep = residue_consistency(&a, &claimed, grid)?;
    let verdict = if rep.passes() {
        Verdict::True
    } else {
        Verdict::False
    };
    let failures: Vec<Failure> = rep
        .chi_checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| Failure {
            twist: pair(c.twist),
            lhs: c.lhs,
            rhs: c.rhs,
        })
        .collect();
    let mut text = format!(
        "splitting: {claimed}\nverdict: {verdict}\nc1: {}\nchi: {} of {} twists agree\n",
        if rep.c1_check { "ok" } else { "mismatch" },
        rep.chi_checks.len() - failures.len(),
        rep.chi_checks.len()
    );
    for f in &failures {
        text += &format!(
            "  chi mismatch at ({},{}): {} != {}\n",
            f.twist[0], f.twist[1], f.lhs, f.rhs
        );
    }
    let r = Report {
        scroll: s,
        input: ArrangementInput {
            lines: arr.lines,
            curves: arr.curves,
        },
        splitting: pairs(&claimed),
        verdict,
        c1_check: rep.c1_check,
        chi_checked: rep.chi_checks.len(),
        chi_failures: failures,
        flags: a.flags(),
    };
    em.emit(&r, text)
}

fn classify_log(em: &mut Emitter<'_>, s: Scroll, max_lines: u32, max_curves: u32) -> CliResult<()> {
    #[derive(Serialize)]
    struct Input {
        max_lines: u32,
        max_curves: u32,
    }
    #[derive(Serialize)]
    struct Class {
        lines: u32,
        curves: u32,
        splitting: Vec<[i64; 2]>,
    }
    #[derive(Serialize)]
    struct Report {
        scroll: Scroll,
        input: Input,
        classes: Vec<Class>,
    }
    let found = classify_regular_acm_log(&s, max_lines, max_curves)?;
    let mut text = String::new();
    for c in &found {
        text += &format!(
            "lines = {}, curves = {}: {}\n",
            c.lines, c.curves, c.splitting
        );
    }
    if found.is_empty() {
        text += "none\n";
    }
    let r = Report {
        scroll: s,
        input: Input {
            max_lines,
            max_curves,
        },
        classes: found
            .iter()
            .map(|c| Class {
                lines: c.lines,
                curves: c.curves,
                splitting: pairs(&c.splitting),
            })
            .collect(),
    };
    em.emit(&r, text)
}
