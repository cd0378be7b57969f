//! Command-line front end.
//!
//! Exit codes: 0 success (including `NotApplicable`), 1 parse or usage error,
//! 2 internal identity failure, 3 the inequality fails.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::ade_data::{resolution_data, AdeKind, AdeLabel};
use crate::error::Error;
use crate::exact_arith::format_rational;
use crate::invariants::{
    gerbe_scale, isolated_report, snc_report, InvariantReport, IsolatedPointsDescription,
    SncPairDescription, Verdict,
};
use crate::quaternion_groups::build_ade_group;
use crate::todd::{
    contribution_report, contribution_report_for, verify_type_a_identity,
    verify_type_d_half_angle_identity,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_IDENTITY: i32 = 2;
pub const EXIT_BMY_FAILS: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "duval-bmy", version, about = "Exact orbifold Chern numbers and ADE twisted-sector sums")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    #[value(alias = "structured")]
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentityKind {
    #[value(name = "type_a")]
    TypeA,
    #[value(name = "half_angle")]
    HalfAngle,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute c1^2, c2 and the BMY verdict for a surface description file.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the group of an ADE label with its classes and contributions.
    Group { label: String },
    /// Verify one of the cyclotomic sum identities for a given n.
    Identity {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        which: IdentityKind,
    },
    /// Closed forms against brute-force sums for A and D up to max-n, and E6-E8.
    Table {
        #[arg(long = "max-n")]
        max_n: u32,
        /// Also evaluate the element-by-element sum.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// A parsed description file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceDescription {
    SncPair(SncPairDescription),
    IsolatedPoints(IsolatedPointsDescription),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceDescriptionFile {
    pub description: SurfaceDescription,
    pub gerbe_order: Option<u64>,
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Parses a description from JSON text. Unknown fields are rejected.
///
/// ```text
/// { "kind": "isolated_points", "chi_structure_sheaf": 2, "c1_squared": "0",
///   "points": ["A1", "A1"], "canonical_nef_asserted": true, "gerbe_order": 1 }
/// ```
pub fn parse_description(text: &str) -> Result<SurfaceDescriptionFile, Error> {
    let value: Value = serde_json::from_str(text).map_err(|e| {
        parse_err(format!("line {}, column {}: {e}", e.line(), e.column()))
    })?;
    let Value::Object(mut map) = value else {
        return Err(parse_err("top level must be an object"));
    };
    let kind = match map.remove("kind") {
        Some(Value::String(s)) => s,
        Some(_) => return Err(parse_err("field `kind`: expected a string")),
        None => return Err(parse_err("missing field `kind`")),
    };
    let gerbe_order = match map.remove("gerbe_order") {
        None => None,
        Some(v) => match v.as_u64() {
            Some(k) if k >= 1 => Some(k),
            _ => return Err(parse_err("field `gerbe_order`: must be an integer ≥ 1")),
        },
    };
    let rest = Value::Object(map);
    fn typed<T: serde::de::DeserializeOwned>(v: Value) -> Result<T, Error> {
        serde_path_to_error::deserialize(v).map_err(|e| {
            let path = e.path().to_string();
            let inner = e.into_inner();
            if path == "." {
                parse_err(inner.to_string())
            } else {
                parse_err(format!("field `{path}`: {inner}"))
            }
        })
    }
    let description = match kind.as_str() {
        "snc_pair" => {
            let d: SncPairDescription = typed(rest)?;
            d.validate()?;
            SurfaceDescription::SncPair(d)
        }
        "isolated_points" => SurfaceDescription::IsolatedPoints(typed(rest)?),
        other => {
            return Err(parse_err(format!(
                "field `kind`: unknown kind {other:?}, expected \"snc_pair\" or \"isolated_points\""
            )))
        }
    };
    Ok(SurfaceDescriptionFile {
        description,
        gerbe_order,
    })
}

pub fn load_description(path: &Path) -> Result<SurfaceDescriptionFile, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| parse_err(format!("{}: {e}", path.display())))?;
    parse_description(&text).map_err(|e| match e {
        Error::Parse(m) => parse_err(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// Runs the full pipeline for a description, including gerbe scaling.
pub fn evaluate(file: &SurfaceDescriptionFile) -> Result<InvariantReport, Error> {
    let report = match &file.description {
        SurfaceDescription::SncPair(d) => snc_report(d)?,
        SurfaceDescription::IsolatedPoints(d) => isolated_report(d),
    };
    match file.gerbe_order {
        Some(k) => gerbe_scale(&report, k),
        None => Ok(report),
    }
}

pub fn render_report(kind: &str, report: &InvariantReport) -> String {
    let mut s = String::new();
    let r = format_rational;
    let _ = writeln!(s, "kind:        {kind}");
    let _ = writeln!(s, "c1^2:        {}", r(&report.c1_squared));
    let _ = writeln!(s, "c2:          {}", r(&report.c2));
    let _ = writeln!(s, "3c2 - c1^2:  {}", r(&report.margin));
    let _ = writeln!(s, "verdict:     {}", report.verdict);
    if !report.per_point.is_empty() {
        let _ = writeln!(s, "points:");
        for p in &report.per_point {
            let _ = writeln!(s, "  {:<6} {}", p.label.to_string(), r(&p.contribution));
        }
    }
    let _ = writeln!(s, "notes:       {}", report.notes);
    s
}

fn cmd_check(path: &Path, format: Format, out: &mut String) -> Result<i32, Error> {
    let file = load_description(path)?;
    let report = evaluate(&file)?;
    let kind = match file.description {
        SurfaceDescription::SncPair(_) => "snc_pair",
        SurfaceDescription::IsolatedPoints(_) => "isolated_points",
    };
    match format {
        Format::Text => out.push_str(&render_report(kind, &report)),
        Format::Json => {
            out.push_str(&serde_json::to_string_pretty(&report).expect("serializable"));
            out.push('\n');
        }
    }
    Ok(if report.verdict == Verdict::Fails {
        EXIT_BMY_FAILS
    } else {
        EXIT_OK
    })
}

fn group_name(label: AdeLabel) -> String {
    match (label.kind(), label.parameter()) {
        (AdeKind::A, n) => format!("cyclic Z_{n}"),
        (AdeKind::D, n) => format!("binary dihedral Dic_{n}"),
        (AdeKind::E, 6) => "binary tetrahedral 2T".into(),
        (AdeKind::E, 7) => "binary octahedral 2O".into(),
        (AdeKind::E, _) => "binary icosahedral 2I".into(),
    }
}

fn cmd_group(label: &str, out: &mut String) -> Result<i32, Error> {
    let label: AdeLabel = label.parse()?;
    let group = build_ade_group(label)?;
    let report = contribution_report_for(&group, true)?;
    let data = resolution_data(label);
    let _ = writeln!(out, "{label}: {}", group_name(label));
    let _ = writeln!(out, "order:   {}", group.order);
    let _ = writeln!(out, "classes: {}", group.classes.len());
    let _ = writeln!(out, "chi(E):  {}", data.chi_exceptional);
    let _ = writeln!(out, "{:>4}  {:>5}  {:>8}  {:<24}  representative", "#", "size", "|C(g)|", "trace");
    for (i, c) in group.classes.iter().enumerate() {
        let _ = writeln!(
            out,
            "{:>4}  {:>5}  {:>8}  {:<24}  {}",
            i + 1,
            c.size,
            c.centralizer_order,
            c.trace.canonical_string(),
            c.representative
        );
    }
    let r = format_rational;
    let element = report.element_sum.as_ref().expect("requested");
    let _ = writeln!(out, "class sum:   {}", r(&report.class_sum));
    let _ = writeln!(out, "element sum: {}", r(element));
    let _ = writeln!(
        out,
        "closed form: {}  = ({} - 1/{})/12",
        r(&report.closed_form),
        data.chi_exceptional,
        data.group_order
    );
    let _ = writeln!(out, "exact agreement: class sum = element sum = closed form");
    Ok(EXIT_OK)
}

fn cmd_identity(n: u32, which: IdentityKind, out: &mut String) -> Result<i32, Error> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("--n must be >= 2, got {n}")));
    }
    let (name, field, closed, result) = match which {
        IdentityKind::TypeA => (
            "type_a",
            format!("Q(zeta_{n})"),
            format!("(n^2-1)/(12n) = {}", format_rational(&crate::exact_arith::rat(i64::from(n) * i64::from(n) - 1, 12 * i64::from(n)))),
            verify_type_a_identity(n),
        ),
        IdentityKind::HalfAngle => (
            "half_angle",
            format!("Q(zeta_{})", 2 * n),
            format!("(n^2-1)/6 = {}", format_rational(&crate::exact_arith::rat(i64::from(n) * i64::from(n) - 1, 6))),
            verify_type_d_half_angle_identity(n),
        ),
    };
    let _ = writeln!(out, "identity: {name}, n = {n}");
    match result {
        Ok(v) => {
            let _ = writeln!(out, "sum in {field}: {}", format_rational(&v));
            let _ = writeln!(out, "closed form: {closed}");
            let _ = writeln!(out, "PASS");
            Ok(EXIT_OK)
        }
        Err(Error::IdentityFailure { lhs, rhs, .. }) => {
            let _ = writeln!(out, "sum in {field}: {lhs}");
            let _ = writeln!(out, "closed form: {rhs}");
            let _ = writeln!(out, "FAIL");
            Ok(EXIT_IDENTITY)
        }
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct TableRow {
    pub label: String,
    pub group_order: u64,
    pub chi_exceptional: u32,
    pub closed_form: String,
    pub class_sum: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub element_sum: Option<String>,
    pub agree: bool,
}

pub fn table_labels(max_n: u32) -> Vec<AdeLabel> {
    let mut labels = Vec::new();
    for n in 2..=max_n {
        labels.push(AdeLabel::cyclic(n).expect("n >= 2"));
    }
    for n in 2..=max_n {
        labels.push(AdeLabel::binary_dihedral(n).expect("n >= 2"));
    }
    for e in 6..=8 {
        labels.push(AdeLabel::e(e).expect("E6-E8"));
    }
    labels
}

/// One row per label. Rows are computed on worker threads and returned in label order.
pub fn table_rows(max_n: u32, oracle: bool) -> Vec<Result<TableRow, Error>> {
    let labels = table_labels(max_n);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(8);
    let chunk = labels.len().div_ceil(workers).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = labels
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(|&l| table_row(l, oracle)).collect::<Vec<_>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("table worker panicked"))
            .collect()
    })
}

fn table_row(label: AdeLabel, oracle: bool) -> Result<TableRow, Error> {
    let data = resolution_data(label);
    let (class_sum, element_sum, closed_form, agree) = match contribution_report(label, oracle) {
        Ok(r) => (
            format_rational(&r.class_sum),
            r.element_sum.as_ref().map(format_rational),
            format_rational(&r.closed_form),
            true,
        ),
        Err(Error::IdentityFailure { lhs, rhs, .. }) => (lhs, None, rhs, false),
        Err(e) => return Err(e),
    };
    Ok(TableRow {
        label: label.to_string(),
        group_order: data.group_order,
        chi_exceptional: data.chi_exceptional,
        closed_form,
        class_sum,
        element_sum,
        agree,
    })
}

fn cmd_table(max_n: u32, oracle: bool, format: Format, out: &mut String) -> Result<i32, Error> {
    if max_n < 2 {
        return Err(Error::InvalidArgument(format!("--max-n must be >= 2, got {max_n}")));
    }
    let rows: Vec<TableRow> = table_rows(max_n, oracle).into_iter().collect::<Result<_, _>>()?;
    match format {
        Format::Json => {
            out.push_str(&serde_json::to_string_pretty(&rows).expect("serializable"));
            out.push('\n');
        }
        Format::Text => {
            let _ = write!(out, "{:<6} {:>6} {:>6}  {:<14} {:<14}", "label", "|G|", "chi(E)", "closed form", "class sum");
            if oracle {
                let _ = write!(out, " {:<14}", "element sum");
            }
            let _ = writeln!(out, " agree");
            for row in &rows {
                let _ = write!(
                    out,
                    "{:<6} {:>6} {:>6}  {:<14} {:<14}",
                    row.label, row.group_order, row.chi_exceptional, row.closed_form, row.class_sum
                );
                if let Some(e) = &row.element_sum {
                    let _ = write!(out, " {e:<14}");
                }
                let _ = writeln!(out, " {}", if row.agree { "yes" } else { "NO" });
            }
        }
    }
    Ok(if rows.iter().all(|r| r.agree) {
        EXIT_OK
    } else {
        EXIT_IDENTITY
    })
}

/// Parses `args` (including the program name), runs the command, writes to
/// `out`/`err`, and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut buf = String::new();
    let result = match cli.command {
        Command::Check { file, format } => cmd_check(&file, format, &mut buf),
        Command::Group { label } => cmd_group(&label, &mut buf),
        Command::Identity { n, which } => cmd_identity(n, which, &mut buf),
        Command::Table {
            max_n,
            oracle,
            format,
        } => cmd_table(max_n, oracle, format, &mut buf),
    };
    let _ = out.write_all(buf.as_bytes());
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::IdentityFailure { .. }
                | Error::NonRationalTotal(_)
                | Error::TraceTwoNonIdentity(_) => EXIT_IDENTITY,
                _ => EXIT_PARSE,
            }
        }
    }
}
