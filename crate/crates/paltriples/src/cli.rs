//! Command-line interface: argument parsing, output records, and the
//! json/csv/table emitters.
//!
//! Every subcommand produces a stream of [`OutputRecord`]s on stdout in
//! the requested format. `--out FILE` additionally writes the records as
//! JSON lines behind a `# `-prefixed metadata header (tool version, query,
//! timestamp, thread count); the header never appears on stdout.
//!
//! Exit codes: 0 on success, 1 when a verification subcommand finds a
//! failure, 2 on usage errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::catalog::{self, RowVerdict};
use crate::digits::{self, Natural, Parity};
use crate::error::Error;
use crate::families::{self, FamilyId, FamilyMember};
use crate::search::{self, AnchorRole, AnchoredQuery, EuclidQuery, SearchHit};
use crate::triples::Triple;

/// Environment variable consulted for the default thread count.
pub const THREADS_ENV: &str = "PAL_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "paltriples",
    version,
    about = "Pythagorean triples with palindrome components: families, searches, verification"
)]
struct Cli {
    /// Output format for stdout.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,

    /// Also write records as JSON lines (with a metadata header) to this
    /// file.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Worker threads for searches; defaults to PAL_THREADS or the
    /// machine's parallelism.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit members of a constructive family.
    Family {
        /// NPPT-1A, NPPT-1B, NPPT-2A, NPPT-2B, NPPT-3, or PPT-1.
        #[arg(value_parser = parse_family)]
        family: FamilyId,
        /// First member index.
        #[arg(long)]
        from: u32,
        /// How many consecutive members.
        #[arg(long)]
        count: u32,
        /// Check each member's digit patterns, palindrome count, and
        /// primitivity; exit 1 on any failure.
        #[arg(long)]
        verify: bool,
    },
    /// Run a search engine.
    Search {
        #[command(subcommand)]
        engine: SearchCommand,
    },
    /// List every triple containing a given component.
    Decompose {
        /// Which role the value plays: odd-leg, even-leg, or hypotenuse.
        #[arg(long, value_parser = parse_role)]
        role: AnchorRole,
        /// Keep only primitive triples.
        #[arg(long)]
        primitive_only: bool,
        /// The component value.
        #[arg(value_parser = parse_natural)]
        value: Natural,
    },
    /// Exhaustively scan for all-palindrome primitive triples.
    Evidence {
        /// Hypotenuse bound.
        #[arg(long = "max-z", value_parser = parse_natural)]
        max_z: Natural,
        /// Skip the pruning ladder and run the full palindrome tests on
        /// every candidate (reference mode).
        #[arg(long)]
        no_prune: bool,
    },
    /// Classify one triple: palindrome profile, divisibility facts,
    /// factor-placement form, and the all-palindrome prefilter verdict.
    Classify {
        #[arg(value_parser = parse_natural)]
        x: Natural,
        #[arg(value_parser = parse_natural)]
        y: Natural,
        #[arg(value_parser = parse_natural)]
        z: Natural,
    },
    /// Re-verify the bundled reference tables; exit 1 if any row fails.
    VerifyTables,
}

#[derive(Debug, Subcommand)]
enum SearchCommand {
    /// Sweep generator pairs, keeping triples that clear a palindrome
    /// threshold.
    Euclid {
        /// Upper bound on the generator s.
        #[arg(long = "max-s", value_parser = parse_natural)]
        max_s: Option<Natural>,
        /// Upper bound on the hypotenuse.
        #[arg(long = "max-z", value_parser = parse_natural)]
        max_z: Option<Natural>,
        /// Minimum number of palindromic components.
        #[arg(long = "min-pal", default_value_t = 0)]
        min_pal: u8,
        /// Accepted for symmetry; generator sweeps only ever emit
        /// primitive triples.
        #[arg(long)]
        primitive_only: bool,
    },
    /// Decompose palindrome anchors of one role across a digit range.
    Anchored {
        #[arg(long, value_parser = parse_role)]
        role: AnchorRole,
        #[arg(long = "min-digits")]
        min_digits: u32,
        #[arg(long = "max-digits")]
        max_digits: u32,
        #[arg(long = "min-pal", default_value_t = 0)]
        min_pal: u8,
        #[arg(long)]
        primitive_only: bool,
    },
}

fn parse_natural(s: &str) -> Result<Natural, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("{s:?} is not an unsigned decimal integer"));
    }
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_family(s: &str) -> Result<FamilyId, String> {
    FamilyId::from_str(s)
}

fn parse_role(s: &str) -> Result<AnchorRole, String> {
    AnchorRole::from_str(s)
}

/// One output line: a triple, its palindrome facts, and where it came
/// from. Big components are decimal strings so that no consumer needs
/// arbitrary-precision JSON numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub x: String,
    pub y: String,
    pub z: String,
    pub primitive: bool,
    pub pal_flags: [bool; 3],
    pub pal_count: u8,
    pub digit_parity: String,
    pub source: String,
    pub params: BTreeMap<String, String>,
}

impl OutputRecord {
    fn from_values(
        x: &Natural,
        y: &Natural,
        z: &Natural,
        primitive: bool,
        source: &str,
        params: BTreeMap<String, String>,
    ) -> OutputRecord {
        let values = [x, y, z];
        let pal_flags = values.map(|n| digits::is_palindrome(n).unwrap_or(false));
        let digit_parity = values
            .iter()
            .map(|n| Parity::of_len(digits::digit_count(n).map_or(0, |d| d)).letter())
            .collect();
        OutputRecord {
            x: x.to_string(),
            y: y.to_string(),
            z: z.to_string(),
            primitive,
            pal_flags,
            pal_count: pal_flags.iter().filter(|f| **f).count() as u8,
            digit_parity,
            source: source.to_string(),
            params,
        }
    }

    pub fn from_hit(hit: &SearchHit) -> OutputRecord {
        let params: BTreeMap<String, String> = hit.provenance.params().into_iter().collect();
        let [x, y, z] = hit.triple.components();
        Self::from_values(x, y, z, hit.primitive, hit.provenance.source(), params)
    }

    pub fn from_triple(t: &Triple, source: &str, params: BTreeMap<String, String>) -> OutputRecord {
        let [x, y, z] = t.components();
        Self::from_values(x, y, z, t.is_primitive(), source, params)
    }

    pub fn from_member(m: &FamilyMember, verified: Option<bool>) -> OutputRecord {
        let mut params = BTreeMap::new();
        params.insert("family".to_string(), m.family.tag().to_string());
        params.insert("index".to_string(), m.index.to_string());
        params.insert(
            "declared_pal_count".to_string(),
            m.declared_pal_count.to_string(),
        );
        for (key, template) in ["pattern_x", "pattern_y", "pattern_z"]
            .into_iter()
            .zip(&m.predicted_pattern)
        {
            params.insert(key.to_string(), template.to_string());
        }
        if let Some(ok) = verified {
            params.insert("pattern_ok".to_string(), ok.to_string());
        }
        let [x, y, z] = m.triple.components();
        Self::from_values(x, y, z, m.primitive, "family", params)
    }

    pub fn from_verdict(v: &RowVerdict) -> OutputRecord {
        let mut params = BTreeMap::new();
        params.insert("row".to_string(), v.row.index.to_string());
        params.insert("pythagorean".to_string(), v.pythagorean.to_string());
        if let Some(erratum) = &v.erratum {
            params.insert("erratum".to_string(), erratum.clone());
        }
        Self::from_values(
            &v.row.x,
            &v.row.y,
            &v.row.z,
            v.primitive,
            v.row.source.tag(),
            params,
        )
    }
}

struct Outcome {
    records: Vec<OutputRecord>,
    /// A verification ran and found at least one failure.
    failed: bool,
    /// Human-oriented remarks, printed to stderr.
    notes: Vec<String>,
}

impl Outcome {
    fn of(records: Vec<OutputRecord>) -> Outcome {
        Outcome {
            records,
            failed: false,
            notes: Vec::new(),
        }
    }
}

/// Parse `argv` and run the command, returning the process exit code.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString>,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };

    let threads = resolve_threads(cli.threads);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };

    match pool.install(|| execute(&cli.command)) {
        Ok(outcome) => {
            let stdout = io::stdout();
            if let Err(e) = emit(&outcome.records, cli.format, &mut stdout.lock()) {
                eprintln!("error: {e}");
                return 2;
            }
            if let Some(path) = &cli.out {
                if let Err(e) = write_json_lines(path, &argv, threads, &outcome.records) {
                    eprintln!("error: {e}");
                    return 2;
                }
            }
            for note in &outcome.notes {
                eprintln!("{note}");
            }
            if outcome.failed {
                1
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn resolve_threads(cli: Option<usize>) -> usize {
    cli.filter(|&n| n >= 1)
        .or_else(|| {
            std::env::var(THREADS_ENV)
                .ok()
                .and_then(|v| v.parse().ok())
                .filter(|&n| n >= 1)
        })
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(std::num::NonZeroUsize::get)
                .unwrap_or(1)
        })
}

fn execute(command: &Command) -> crate::error::Result<Outcome> {
    match command {
        Command::Family {
            family,
            from,
            count,
            verify,
        } => {
            let mut outcome = Outcome::of(Vec::new());
            for index in *from..from.saturating_add(*count) {
                let m = families::member(*family, index)?;
                let checked = verify.then(|| families::pattern_check(&m));
                if checked == Some(false) {
                    outcome.failed = true;
                    outcome
                        .notes
                        .push(format!("{} index {index}: pattern check failed", family.tag()));
                }
                outcome.records.push(OutputRecord::from_member(&m, checked));
            }
            Ok(outcome)
        }
        Command::Search { engine } => match engine {
            SearchCommand::Euclid {
                max_s,
                max_z,
                min_pal,
                primitive_only: _,
            } => {
                let hits = search::search_euclid(&EuclidQuery {
                    max_s: max_s.clone(),
                    max_c: max_z.clone(),
                    min_pal_count: *min_pal,
                })?;
                Ok(Outcome::of(hits.iter().map(OutputRecord::from_hit).collect()))
            }
            SearchCommand::Anchored {
                role,
                min_digits,
                max_digits,
                min_pal,
                primitive_only,
            } => {
                let hits = search::anchored_search(&AnchoredQuery {
                    role: *role,
                    min_digits: *min_digits,
                    max_digits: *max_digits,
                    min_pal_count: *min_pal,
                    primitive_only: *primitive_only,
                })?;
                Ok(Outcome::of(hits.iter().map(OutputRecord::from_hit).collect()))
            }
        },
        Command::Decompose {
            role,
            primitive_only,
            value,
        } => {
            let triples = match role {
                AnchorRole::OddLeg => search::decompose_odd_leg(value)?,
                AnchorRole::EvenLeg => search::decompose_even_leg(value)?,
                AnchorRole::Hypotenuse => search::decompose_hypotenuse(value, *primitive_only)?,
            };
            let records = triples
                .iter()
                .filter(|t| !primitive_only || t.is_primitive())
                .map(|t| {
                    let mut params = BTreeMap::new();
                    params.insert("role".to_string(), role.tag().to_string());
                    params.insert("anchor".to_string(), value.to_string());
                    OutputRecord::from_triple(t, "decompose", params)
                })
                .collect();
            Ok(Outcome::of(records))
        }
        Command::Evidence { max_z, no_prune } => {
            let hits = search::evidence_search(max_z, !no_prune)?;
            Ok(Outcome::of(hits.iter().map(OutputRecord::from_hit).collect()))
        }
        Command::Classify { x, y, z } => classify(x, y, z),
        Command::VerifyTables => {
            let verdicts = catalog::verify_catalog();
            let mut outcome = Outcome::of(Vec::new());
            for v in &verdicts {
                if !v.passes() {
                    outcome.failed = true;
                    let what = v.erratum.clone().unwrap_or_else(|| "row fails".to_string());
                    outcome.notes.push(format!(
                        "{} row {}: identity fails; {what}",
                        v.row.source, v.row.index
                    ));
                }
                outcome.records.push(OutputRecord::from_verdict(v));
            }
            let passing = verdicts.iter().filter(|v| v.passes()).count();
            outcome
                .notes
                .push(format!("{passing}/{} rows pass", verdicts.len()));
            Ok(outcome)
        }
    }
}

fn classify(x: &Natural, y: &Natural, z: &Natural) -> crate::error::Result<Outcome> {
    let triple = match Triple::new(x.clone(), y.clone(), z.clone()) {
        Ok(t) => t,
        Err(e @ (Error::NotPythagorean { .. } | Error::ZeroComponent)) => {
            // Not a triple at all: that is a verification failure, not a
            // usage error.
            return Ok(Outcome {
                records: Vec::new(),
                failed: true,
                notes: vec![format!("classify: {e}")],
            });
        }
        Err(e) => return Err(e),
    };
    let mut params = BTreeMap::new();
    let parity_form = triple.digit_parity_form();
    params.insert(
        "parity_admissible".to_string(),
        parity_form.admissible.to_string(),
    );
    if triple.is_primitive() {
        let report = triple.divisibility_report()?;
        params.insert(
            "div3_exactly_one_leg".to_string(),
            report.exactly_one_leg_div3.to_string(),
        );
        params.insert("div4_even_leg".to_string(), report.even_leg_div4.to_string());
        params.insert(
            "div5_exactly_one".to_string(),
            report.exactly_one_component_div5.to_string(),
        );
        params.insert(
            "factor_form".to_string(),
            triple.factor_form()?.tag().to_string(),
        );
        params.insert(
            "prefilter".to_string(),
            triple.all_palindrome_prefilter()?.to_string(),
        );
    } else {
        params.insert(
            "note".to_string(),
            "divisibility classification applies to primitive triples only".to_string(),
        );
    }
    Ok(Outcome::of(vec![OutputRecord::from_triple(
        &triple,
        "classify",
        params,
    )]))
}

fn emit(records: &[OutputRecord], format: OutputFormat, w: &mut impl Write) -> io::Result<()> {
    match format {
        OutputFormat::Json => {
            for r in records {
                let line = serde_json::to_string(r).map_err(io::Error::other)?;
                writeln!(w, "{line}")?;
            }
        }
        OutputFormat::Csv => {
            let mut csv = csv::Writer::from_writer(w);
            csv.write_record(CSV_HEADER)?;
            for r in records {
                csv.write_record(csv_row(r))?;
            }
            csv.flush()?;
        }
        OutputFormat::Table => emit_table(records, w)?,
    }
    Ok(())
}

const CSV_HEADER: [&str; 11] = [
    "x",
    "y",
    "z",
    "primitive",
    "pal_x",
    "pal_y",
    "pal_z",
    "pal_count",
    "digit_parity",
    "source",
    "params",
];

fn csv_row(r: &OutputRecord) -> [String; 11] {
    [
        r.x.clone(),
        r.y.clone(),
        r.z.clone(),
        r.primitive.to_string(),
        r.pal_flags[0].to_string(),
        r.pal_flags[1].to_string(),
        r.pal_flags[2].to_string(),
        r.pal_count.to_string(),
        r.digit_parity.clone(),
        r.source.clone(),
        join_params(&r.params),
    ]
}

fn join_params(params: &BTreeMap<String, String>) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join("; ")
}

fn emit_table(records: &[OutputRecord], w: &mut impl Write) -> io::Result<()> {
    const HEADER: [&str; 9] = [
        "x",
        "y",
        "z",
        "prim",
        "pals",
        "count",
        "parity",
        "source",
        "params",
    ];
    let rows: Vec<[String; 9]> = records
        .iter()
        .map(|r| {
            let pals: String = r
                .pal_flags
                .iter()
                .map(|f| if *f { 'T' } else { 'F' })
                .collect();
            [
                r.x.clone(),
                r.y.clone(),
                r.z.clone(),
                if r.primitive { "yes" } else { "no" }.to_string(),
                pals,
                r.pal_count.to_string(),
                r.digit_parity.clone(),
                r.source.clone(),
                join_params(&r.params),
            ]
        })
        .collect();
    let mut widths: [usize; 9] = HEADER.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let write_row = |w: &mut dyn Write, cells: &[String; 9]| -> io::Result<()> {
        let mut line = String::new();
        for (i, (cell, width)) in cells.iter().zip(widths).enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            // Last column unpadded.
            if i + 1 == cells.len() {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{cell:<width$}"));
            }
        }
        writeln!(w, "{}", line.trim_end())
    };
    write_row(w, &HEADER.map(str::to_string))?;
    for row in &rows {
        write_row(w, row)?;
    }
    Ok(())
}

fn write_json_lines(
    path: &PathBuf,
    argv: &[OsString],
    threads: usize,
    records: &[OutputRecord],
) -> io::Result<()> {
    let query = argv
        .get(1..)
        .unwrap_or_default()
        .iter()
        .map(|s| s.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let meta = serde_json::json!({
        "tool": "paltriples",
        "version": env!("CARGO_PKG_VERSION"),
        "query": query,
        "timestamp": chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        "threads": threads,
    });
    let mut out = BufWriter::new(File::create(path)?);
    writeln!(out, "# {meta}")?;
    for r in records {
        let line = serde_json::to_string(r).map_err(io::Error::other)?;
        writeln!(out, "{line}")?;
    }
    out.flush()
}
