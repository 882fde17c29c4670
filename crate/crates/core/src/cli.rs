//! The `qpart` command line. [`run`] takes the argument list and output
//! streams and returns the exit code, so the binary is a one-liner and the
//! commands can be tested in process.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 verification failure or
//! golden mismatch, 3 input outside the map's domain class.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::bijection::{apply_traced, Direction};
use crate::classes::{count, ClassKind, ClassSpec};
use crate::error::{BijectionError, SeriesError};
use crate::expansion::ExpansionReading;
use crate::genfun::class_genfun;
use crate::golden::{diff_against_printed, printed_table};
use crate::partition::Partition;
use crate::recurrence::{c4_triangular, c_table, d4_two_parts, d_table, m_table, CountTable, TableKind};
use crate::verify::{run_check, Check, VerifyOptions};

/// Largest `n` for which `count --check` also enumerates.
pub const ORACLE_CHECK_LIMIT: u32 = 60;

#[derive(Debug, Parser)]
#[command(name = "qpart", version, about = "Exact counts, tables, bijections and identity checks for modular, congruent and duplicate partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count the partitions of n in a class.
    Count(CountArgs),
    /// Print the (n, k) table of a class by number of parts.
    Table(TableArgs),
    /// Apply one of the maps between modular, congruent and duplicate partitions.
    Bijection(BijectionArgs),
    /// Run a named identity or consistency check.
    Verify(VerifyArgs),
    /// Write the first terms of a sequence.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassName {
    Unrestricted,
    Modular,
    Congruent,
    Duplicate,
    CongruentDistinct,
    EClass,
    VClass,
    WClass,
    Pod,
    Ped,
    /// 4-duplicate partitions with exactly two parts.
    D4k2,
}

#[derive(Debug, Args)]
struct ClassArgs {
    #[arg(long, value_enum)]
    class: Option<ClassName>,
    /// Modulus s (even, at least 4).
    #[arg(long)]
    s: Option<u32>,
    /// Multiplicity bound or E-class parameter t.
    #[arg(long)]
    t: Option<u32>,
    /// Andrews parameter k.
    #[arg(long)]
    k: Option<u32>,
    /// Andrews parameter i.
    #[arg(long)]
    i: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Oracle,
    Series,
    Recurrence,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[command(flatten)]
    class: ClassArgs,
    #[arg(long)]
    n: u32,
    /// Defaults to the product form when the class has one, else enumeration.
    #[arg(long, value_enum)]
    engine: Option<Engine>,
    /// Compute with every applicable engine and fail on disagreement.
    #[arg(long)]
    check: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableClass {
    Modular,
    Congruent,
    Duplicate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Bfile,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    class: TableClass,
    #[arg(long)]
    s: u32,
    #[arg(long, default_value_t = 20)]
    max_n: usize,
    /// Defaults to max-n.
    #[arg(long)]
    max_k: Option<usize>,
    /// bfile writes the row sums.
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Compare with the printed table for s = 4 and report differences.
    #[arg(long)]
    golden: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DirectionArg {
    ToCongruent,
    ToDuplicate,
    FromCongruent,
    FromDuplicate,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::ToCongruent => Direction::ToCongruent,
            DirectionArg::ToDuplicate => Direction::ToDuplicate,
            DirectionArg::FromCongruent => Direction::FromCongruent,
            DirectionArg::FromDuplicate => Direction::FromDuplicate,
        }
    }
}

#[derive(Debug, Args)]
struct BijectionArgs {
    #[arg(value_enum)]
    direction: DirectionArg,
    #[arg(long)]
    s: u32,
    /// Partition literal such as "4,3,2,1^9".
    partition: String,
    /// Print the rule applied to each block.
    #[arg(long)]
    trace: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReadingArg {
    FactoredBracket,
    ProofCases,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// One of: gauss, pentagonal, lebesgue, sylvester, rogers-fine, jacobi,
    /// alladi, generalized-expansion, over-forms, merca, andrews-vw,
    /// equinumerosity, congruence-spot.
    check: Check,
    /// Truncation order, or largest n for counting checks.
    #[arg(long, visible_alias = "max-n", env = "QPART_ORDER")]
    order: Option<usize>,
    /// Moduli, for the checks that take them.
    #[arg(long, value_delimiter = ',')]
    s: Vec<u32>,
    /// Congruence family for congruence-spot.
    #[arg(long, default_value = "radu-sellers")]
    family: String,
    /// Only this reading of the Durfee-square expansion.
    #[arg(long, value_enum)]
    reading: Option<ReadingArg>,
}

#[derive(Debug, Args)]
struct ExportArgs {
    /// pod, c6, d4k2, c4t3 or c4t5; omit to use the class flags.
    sequence: Option<String>,
    #[command(flatten)]
    class: ClassArgs,
    /// Last index written.
    #[arg(long, env = "QPART_ORDER", default_value_t = 50)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Bfile)]
    format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Verification(String),
    Precondition(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Verification(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Verification(m) | Failure::Precondition(m) => m,
        }
    }
}

type Outcome = Result<(), Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn io(e: std::io::Error) -> Failure {
    Failure::Usage(format!("write failed: {e}"))
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    let result = match cli.command {
        Command::Count(a) => cmd_count(a, out, err),
        Command::Table(a) => cmd_table(a, out),
        Command::Bijection(a) => cmd_bijection(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Export(a) => cmd_export(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn need(v: Option<u32>, flag: &str, class: ClassName) -> Result<u32, Failure> {
    v.ok_or_else(|| usage(format!("--{flag} is required for class {class:?}")))
}

fn class_spec(a: &ClassArgs) -> Result<ClassSpec, Failure> {
    let name = a.class.ok_or_else(|| usage("--class is required"))?;
    let spec = match name {
        ClassName::Unrestricted => Ok(ClassSpec::unrestricted()),
        ClassName::Modular => ClassSpec::modular(need(a.s, "s", name)?),
        ClassName::Congruent => ClassSpec::congruent(need(a.s, "s", name)?),
        ClassName::Duplicate => ClassSpec::duplicate(need(a.s, "s", name)?),
        ClassName::CongruentDistinct => {
            ClassSpec::congruent_distinct(need(a.s, "s", name)?, need(a.t, "t", name)?)
        }
        ClassName::EClass => ClassSpec::e_class(need(a.s, "s", name)?, need(a.t, "t", name)?),
        ClassName::VClass => ClassSpec::v_class(need(a.k, "k", name)?, need(a.i, "i", name)?),
        ClassName::WClass => ClassSpec::w_class(need(a.k, "k", name)?, need(a.i, "i", name)?),
        ClassName::Pod => Ok(ClassSpec::pod()),
        ClassName::Ped => Ok(ClassSpec::ped()),
        ClassName::D4k2 => Ok(ClassSpec::two_part_duplicate4()),
    };
    spec.map_err(usage)
}

fn by_series(class: &ClassSpec, n: u32) -> Result<BigInt, SeriesError> {
    Ok(class_genfun(class, n as usize)?.coeff(i64::from(n)))
}

/// Recurrence engines for `class`, by name.
fn by_recurrences(class: &ClassSpec, n: u32) -> Vec<(&'static str, BigInt)> {
    let nn = n as usize;
    let valid = "modulus validated by ClassSpec";
    match class.kind() {
        ClassKind::Modular { s } => vec![("recurrence", m_table(s, nn, nn).expect(valid).row_sum(nn))],
        ClassKind::Congruent { s } => {
            let k_sum = ("recurrence k-sum", c_table(s, nn, nn).expect(valid).table.row_sum(nn));
            if s == 4 {
                vec![("recurrence", c4_triangular(nn)), k_sum]
            } else {
                vec![("recurrence", k_sum.1)]
            }
        }
        ClassKind::Duplicate { s } => vec![("recurrence", d_table(s, nn, nn).expect(valid).row_sum(nn))],
        ClassKind::TwoPartDuplicate4 => vec![("recurrence", d4_two_parts(u64::from(n)))],
        _ => Vec::new(),
    }
}

fn cmd_count(a: CountArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let class = class_spec(&a.class)?;
    let n = a.n;
    let series = by_series(&class, n);
    let value = match a.engine {
        Some(Engine::Oracle) => count(i64::from(n), &class),
        Some(Engine::Series) => series.clone().map_err(usage)?,
        Some(Engine::Recurrence) => by_recurrences(&class, n)
            .into_iter()
            .next()
            .map(|(_, v)| v)
            .ok_or_else(|| usage(format!("no recurrence engine for class {class}")))?,
        None => match &series {
            Ok(v) => v.clone(),
            Err(_) => count(i64::from(n), &class),
        },
    };
    writeln!(out, "{value}").map_err(io)?;
    if a.check {
        let mut all: Vec<(&str, BigInt)> = Vec::new();
        if let Ok(v) = series {
            all.push(("series", v));
        }
        all.extend(by_recurrences(&class, n));
        if n <= ORACLE_CHECK_LIMIT {
            all.push(("oracle", count(i64::from(n), &class)));
        }
        let names: Vec<&str> = all.iter().map(|e| e.0).collect();
        if all.iter().any(|(_, v)| *v != value) {
            let detail: Vec<String> = all.iter().map(|(e, v)| format!("{e} {v}")).collect();
            return Err(Failure::Verification(format!("engines disagree: {}", detail.join(", "))));
        }
        writeln!(err, "agree: {}", names.join(", ")).map_err(io)?;
    }
    Ok(())
}

fn build_table(class: TableClass, s: u32, max_n: usize, max_k: usize) -> Result<CountTable, Failure> {
    match class {
        TableClass::Modular => m_table(s, max_n, max_k),
        TableClass::Congruent => c_table(s, max_n, max_k).map(|t| t.table),
        TableClass::Duplicate => d_table(s, max_n, max_k),
    }
    .map_err(usage)
}

fn table_kind(c: TableClass) -> TableKind {
    match c {
        TableClass::Modular => TableKind::Modular,
        TableClass::Congruent => TableKind::Congruent,
        TableClass::Duplicate => TableKind::Duplicate,
    }
}

fn cmd_table(a: TableArgs, out: &mut dyn Write) -> Outcome {
    if a.golden {
        if a.s != 4 {
            return Err(usage("--golden compares against the printed tables, which have s = 4"));
        }
        let printed = printed_table(table_kind(a.class));
        let table = build_table(a.class, 4, printed.max_n, printed.max_k)?;
        let diffs = diff_against_printed(&table);
        let mut unexpected = 0;
        for d in &diffs {
            let tag = if d.known_erratum { "known erratum" } else { "UNEXPECTED" };
            writeln!(out, "({}, {}): printed {}, computed {}  [{tag}]", d.n, d.k, d.printed, d.computed)
                .map_err(io)?;
            unexpected += usize::from(!d.known_erratum);
        }
        writeln!(
            out,
            "{} table, s = 4, n <= {}, k <= {}: {} cells, {} known errata, {} unexpected",
            table.kind,
            printed.max_n,
            printed.max_k,
            printed.max_n * printed.max_k,
            diffs.len() - unexpected,
            unexpected
        )
        .map_err(io)?;
        return if unexpected == 0 {
            Ok(())
        } else {
            Err(Failure::Verification(format!("{unexpected} cells differ from the printed table")))
        };
    }
    let max_k = a.max_k.unwrap_or(a.max_n);
    let table = build_table(a.class, a.s, a.max_n, max_k)?;
    let text = render_table(&table, a.format);
    out.write_all(text.as_bytes()).map_err(io)
}

fn render_table(t: &CountTable, format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Bfile => {
            for n in 0..=t.max_n {
                s.push_str(&format!("{n} {}\n", t.row_sum(n)));
            }
        }
        Format::Csv => {
            let head: Vec<String> = (0..=t.max_k).map(|k| k.to_string()).collect();
            s.push_str(&format!("n,{}\n", head.join(",")));
            for n in 0..=t.max_n {
                let row: Vec<String> = t.row(n).iter().map(|v| v.to_string()).collect();
                s.push_str(&format!("{n},{}\n", row.join(",")));
            }
        }
        Format::Plain => {
            let mut rows: Vec<Vec<String>> = vec![std::iter::once("n\\k".to_string())
                .chain((0..=t.max_k).map(|k| k.to_string()))
                .collect()];
            for n in 0..=t.max_n {
                rows.push(
                    std::iter::once(n.to_string())
                        .chain(t.row(n).iter().map(|v| v.to_string()))
                        .collect(),
                );
            }
            let widths: Vec<usize> = (0..rows[0].len())
                .map(|j| rows.iter().map(|r| r[j].len()).max().unwrap_or(0))
                .collect();
            for r in rows {
                let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                s.push_str(&cells.join(" "));
                s.push('\n');
            }
        }
    }
    s
}

fn cmd_bijection(a: BijectionArgs, out: &mut dyn Write) -> Outcome {
    let lambda: Partition = a.partition.parse().map_err(usage)?;
    let (image, steps) = apply_traced(&lambda, a.s, a.direction.into()).map_err(|e| match e {
        BijectionError::PreconditionViolated { .. } => Failure::Precondition(e.to_string()),
        BijectionError::InvalidModulus(_) => usage(e),
        _ => Failure::Verification(e.to_string()),
    })?;
    if a.trace {
        for step in &steps {
            writeln!(out, "{step}").map_err(io)?;
        }
    }
    writeln!(out, "{image}").map_err(io)
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> Outcome {
    if a.check == Check::CongruenceSpot && a.family != "radu-sellers" {
        return Err(usage(format!("unknown congruence family `{}`", a.family)));
    }
    let opts = VerifyOptions {
        order: a.order,
        moduli: a.s,
        reading: a.reading.map(|r| match r {
            ReadingArg::FactoredBracket => ExpansionReading::FactoredBracket,
            ReadingArg::ProofCases => ExpansionReading::ProofCases,
        }),
    };
    let report = run_check(a.check, &opts);
    writeln!(out, "{report}").map_err(io)?;
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{} failed", a.check)))
    }
}

/// Named sequences accepted by `export`, with the class each one counts.
pub const NAMED_SEQUENCES: [(&str, &str); 5] = [
    ("pod", "A006950"),
    ("c6", "A096981"),
    ("d4k2", "A004524"),
    ("c4t3", "A036018"),
    ("c4t5", "A036026"),
];

fn named_class(name: &str) -> Result<ClassSpec, Failure> {
    let c = match name {
        "pod" => Ok(ClassSpec::pod()),
        "c6" => ClassSpec::congruent(6),
        "d4k2" => Ok(ClassSpec::two_part_duplicate4()),
        "c4t3" => ClassSpec::congruent_distinct(4, 3),
        "c4t5" => ClassSpec::congruent_distinct(4, 5),
        other => return Err(usage(format!("unknown sequence `{other}`"))),
    };
    c.map_err(usage)
}

/// The first `n + 1` terms counting `class`.
pub fn sequence_terms(class: &ClassSpec, n: usize) -> Vec<BigInt> {
    match class_genfun(class, n) {
        Ok(s) => s.coeffs().to_vec(),
        Err(_) => (0..=n).map(|m| count(m as i64, class)).collect(),
    }
}

fn render_sequence(terms: &[BigInt], format: Format) -> String {
    match format {
        Format::Bfile => terms.iter().enumerate().map(|(i, v)| format!("{i} {v}\n")).collect(),
        Format::Csv => std::iter::once("n,value\n".to_string())
            .chain(terms.iter().enumerate().map(|(i, v)| format!("{i},{v}\n")))
            .collect(),
        Format::Plain => {
            let v: Vec<String> = terms.iter().map(|v| v.to_string()).collect();
            format!("{}\n", v.join(","))
        }
    }
}

fn cmd_export(a: ExportArgs, out: &mut dyn Write) -> Outcome {
    let class = match &a.sequence {
        Some(name) => {
            if a.class.class.is_some() {
                return Err(usage("give either a sequence name or --class, not both"));
            }
            named_class(name)?
        }
        None => class_spec(&a.class)?,
    };
    let text = render_sequence(&sequence_terms(&class, a.n), a.format);
    match a.output {
        Some(path) => fs::write(&path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => out.write_all(text.as_bytes()).map_err(io),
    }
}
