//! Command-line front end: parse a wedge expression, run the engine, and
//! emit a human-readable or JSON report.
//!
//! Exit codes: 0 = computed (finite, infinite, and unknown all count as
//! computed); 2 = parse or usage error; 3 = reducibility undetermined and
//! not assumed; 4 = table load error. Reports go to standard output,
//! everything else to standard error.

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;

use crate::engine::{aut_order_with, EngineOptions, Factor, FactorKind, FactorReport, Reducibility};
use crate::space::{parse_space_at, Cursor, SummandError, SuspendedSummand, WedgeInput};
use crate::table::GroupTable;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IRREDUCIBLE: i32 = 3;
pub const EXIT_TABLE: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "wedge-aut",
    about = "Order of the self-homotopy-equivalence group of a wedge of suspended spheres and Moore spaces",
    long_about = "Computes the order of Aut(ΣX1 ∨ ... ∨ ΣXk) by expanding the basic-commutator \
                  product formula and multiplying tabulated mapping-group orders.\n\n\
                  Summands are spheres \"S<n>\" (n >= 2) and Moore spaces \"M(<q>,<n>)\" \
                  (q >= 2, n >= 2), joined by \"v\", e.g. \"S2 v M(2,2)\"."
)]
pub struct Args {
    /// Wedge expression, e.g. "S2 v M(2,2)"
    pub wedge: String,

    /// Emit the report as JSON
    #[arg(long)]
    pub json: bool,

    /// List every factor, including the trivial ones, with commutators and rules
    #[arg(long)]
    pub explain: bool,

    /// Merge a group-table JSON file over the bundled table
    #[arg(long, value_name = "PATH")]
    pub table: Option<PathBuf>,

    /// Override the commutator weight bound (testing aid)
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    pub max_weight: Option<u32>,

    /// Proceed even when the reducibility check is undetermined
    #[arg(long)]
    pub assume_reducible: bool,
}

/// Parse a wedge expression: summand ("v" summand)*.
pub fn parse_wedge(expr: &str) -> Result<WedgeInput, SummandError> {
    let mut cur = Cursor::new(expr);
    if cur.at_end() {
        return Err(SummandError::Parse {
            message: "empty wedge expression".into(),
            offset: 0,
        });
    }
    let mut summands = Vec::new();
    loop {
        let space = parse_space_at(&mut cur)?;
        summands.push(SuspendedSummand::new(space)?);
        if cur.at_end() {
            break;
        }
        match cur.peek() {
            Some('v') => {
                cur.bump();
            }
            Some(c) => {
                return Err(cur.err(format!("expected 'v' between summands, found '{c}'")))
            }
            None => break,
        }
    }
    Ok(WedgeInput::new(summands).expect("at least one summand parsed"))
}

/// Run the CLI against explicit argument and output streams. Returns the
/// process exit code.
pub fn run<I, S, O, E>(argv: I, out: &mut O, err: &mut E) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
    O: Write,
    E: Write,
{
    let args = match Args::try_parse_from(argv) {
        Ok(args) => args,
        Err(e) => {
            let rendered = e.render();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };

    let wedge = match parse_wedge(&args.wedge) {
        Ok(w) => w,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };

    let table = match &args.table {
        Some(path) => match GroupTable::load_path(path) {
            Ok((table, warnings)) => {
                for w in warnings {
                    let _ = writeln!(err, "warning: {w}");
                }
                table
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_TABLE;
            }
        },
        None => GroupTable::bundled(),
    };

    let opts = EngineOptions {
        assume_reducible: args.assume_reducible,
        max_weight: args.max_weight,
        include_trivial: args.explain,
    };
    let report = match aut_order_with(&wedge, &table, &opts) {
        Ok(report) => report,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_IRREDUCIBLE;
        }
    };

    if args.json {
        let json = render_json(&report);
        let _ = writeln!(out, "{json}");
    } else {
        let _ = write_text(out, &report, args.explain);
    }
    EXIT_OK
}

#[derive(Serialize)]
struct JsonReport {
    input: Vec<String>,
    reducibility: JsonReducibility,
    total: crate::order::ExtOrder,
    factors: Vec<JsonFactor>,
    omitted_trivial: serde_json::Number,
    notes: Vec<String>,
}

#[derive(Serialize)]
struct JsonReducibility {
    mode: &'static str,
    pairs: Vec<JsonPair>,
}

#[derive(Serialize)]
struct JsonPair {
    pair: [usize; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    direction: Option<String>,
}

#[derive(Serialize)]
struct JsonFactor {
    kind: &'static str,
    summand: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    commutator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    target: Option<String>,
    order: crate::order::ExtOrder,
    rule: &'static str,
}

/// The machine-readable report. Key order is fixed; finite totals render as
/// exact JSON integers.
pub fn render_json(report: &FactorReport) -> String {
    let pairs = match &report.reducibility {
        Reducibility::Checked { pairs } => pairs
            .iter()
            .map(|p| JsonPair {
                pair: [p.first + 1, p.second + 1],
                direction: Some(format!("{} -> {}", p.hom_source, p.hom_target)),
            })
            .collect(),
        Reducibility::Assumed { unverified } => unverified
            .iter()
            .map(|(r, s)| JsonPair {
                pair: [r + 1, s + 1],
                direction: None,
            })
            .collect(),
    };
    let json = JsonReport {
        input: report
            .input
            .summands()
            .iter()
            .map(|s| s.to_string())
            .collect(),
        reducibility: JsonReducibility {
            mode: report.reducibility.mode_str(),
            pairs,
        },
        total: report.total.clone(),
        factors: report
            .factors
            .iter()
            .map(|f| JsonFactor {
                kind: f.kind.as_str(),
                summand: f.summand + 1,
                commutator: f.commutator.as_ref().map(|c| c.to_string()),
                target: f.target.as_ref().map(|t| t.to_string()),
                order: f.order.clone(),
                rule: f.rule.as_str(),
            })
            .collect(),
        omitted_trivial: serde_json::Number::from_str(&report.omitted_trivial.to_string())
            .expect("counts are valid JSON integers"),
        notes: report.notes.clone(),
    };
    serde_json::to_string_pretty(&json).expect("report serializes")
}

fn factor_label(report: &FactorReport, f: &Factor) -> String {
    let source = &report.input.summands()[f.summand];
    match f.kind {
        FactorKind::AutSummand => format!("Aut({source})"),
        _ => format!("[{}, {}]", source, f.target.as_ref().expect("mapping factor")),
    }
}

fn write_text<O: Write>(out: &mut O, report: &FactorReport, explain: bool) -> std::io::Result<()> {
    writeln!(out, "wedge: {}", report.input)?;
    match &report.reducibility {
        Reducibility::Checked { pairs } => {
            writeln!(out, "reducibility: checked")?;
            for p in pairs {
                writeln!(
                    out,
                    "  pair ({}, {}): Hom(H_*({}), H_*({})) = 0",
                    p.first + 1,
                    p.second + 1,
                    p.hom_source,
                    p.hom_target
                )?;
            }
        }
        Reducibility::Assumed { unverified } => {
            writeln!(out, "reducibility: assumed")?;
            for (r, s) in unverified {
                writeln!(
                    out,
                    "  pair ({}, {}): unverified ({} / {})",
                    r + 1,
                    s + 1,
                    report.input.summands()[*r],
                    report.input.summands()[*s]
                )?;
            }
        }
    }
    writeln!(out, "weight bound: {}", report.max_weight)?;

    if report.factors.is_empty() {
        writeln!(out, "factors: none above order 1")?;
    } else if explain {
        writeln!(out, "factors:")?;
    } else {
        writeln!(out, "nontrivial factors:")?;
    }
    for f in &report.factors {
        let label = factor_label(report, f);
        if explain {
            let commutator = f
                .commutator
                .as_ref()
                .map(|c| format!(", c = {c}"))
                .unwrap_or_default();
            writeln!(
                out,
                "  {label} = {}  (summand {}{commutator})  [{}]",
                f.order,
                f.summand + 1,
                f.rule
            )?;
        } else {
            writeln!(out, "  {label} = {}", f.order)?;
        }
    }
    if !report.omitted_trivial.to_string().eq("0") {
        writeln!(
            out,
            "  ({} trivial factor(s) omitted; --explain lists every factor)",
            report.omitted_trivial
        )?;
    }
    for note in &report.notes {
        writeln!(out, "note: {note}")?;
    }
    writeln!(out, "total: {}", report.total)?;
    Ok(())
}
