//! Bundled reference rows of primitive triples with at least two
//! palindromic components, exactly as printed in their source tables, plus
//! the machinery to re-verify them and to diff them against fresh search
//! results.
//!
//! The rows are stored verbatim — including one row that fails the
//! Pythagorean identity as printed. Verification reports such rows with
//! the unique single-component correction that restores the identity
//! rather than silently fixing the data.

use std::fmt;
use std::str::FromStr;

use crate::digits::{self, Natural};
use crate::search::SearchHit;
use crate::triples::Triple;

/// Which bundled table a row belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableSource {
    /// Generator sweep up to `s = 81` with hypotenuse below 6000.
    Table1,
    /// Wider searches beyond the first sweep.
    Table2,
}

impl TableSource {
    pub const ALL: [TableSource; 2] = [TableSource::Table1, TableSource::Table2];

    pub fn tag(self) -> &'static str {
        match self {
            TableSource::Table1 => "table1",
            TableSource::Table2 => "table2",
        }
    }
}

impl fmt::Display for TableSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for TableSource {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<TableSource, String> {
        TableSource::ALL
            .into_iter()
            .find(|t| t.tag() == s)
            .ok_or_else(|| format!("unknown table {s:?} (expected table1 or table2)"))
    }
}

/// One reference row, exactly as printed in its source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenRow {
    /// 1-based position within its table.
    pub index: usize,
    pub x: Natural,
    pub y: Natural,
    pub z: Natural,
    pub source: TableSource,
    /// Free-text annotation; empty for all current rows.
    pub note: String,
}

/// Verification outcome for one row, computed from the printed values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowVerdict {
    pub row: GoldenRow,
    /// Does the printed row satisfy the identity?
    pub pythagorean: bool,
    /// Primitivity of the printed components.
    pub primitive: bool,
    /// Palindrome count of the printed components.
    pub pal_count: u8,
    /// When the identity fails: the corrections that would repair it.
    pub erratum: Option<String>,
}

impl RowVerdict {
    /// A row passes when it is a primitive Pythagorean triple with at
    /// least two palindromic components, as every bundled row claims to
    /// be.
    pub fn passes(&self) -> bool {
        self.pythagorean && self.primitive && self.pal_count >= 2
    }
}

/// Outcome of comparing search output against one bundled table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogDiff {
    /// Rows whose (corrected) triple showed up in the search results.
    pub matched: Vec<GoldenRow>,
    /// Rows the search did not produce.
    pub missing: Vec<GoldenRow>,
    /// Search hits matching no row.
    pub extra: Vec<SearchHit>,
}

impl CatalogDiff {
    pub fn is_clean(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

const TABLE1: [[&str; 3]; 8] = [
    ["3", "4", "5"],
    ["99", "20", "101"],
    ["225", "272", "353"],
    ["275", "252", "373"],
    ["33", "544", "545"],
    ["595", "468", "797"],
    ["555", "572", "797"],
    ["777", "464", "905"],
];

const TABLE2: [[&str; 3]; 13] = [
    ["313", "48984", "48985"],
    ["34743", "42824", "55145"],
    ["55755", "25652", "61373"],
    ["52625", "80808", "96433"],
    ["575575", "2152512", "2228137"],
    ["5578755", "80308", "5579333"],
    ["5853585", "2532352", "6377873"],
    ["5679765", "23711732", "24382493"],
    ["304070403", "402080204", "504110405"],
    ["341484143", "420282024", "541524145"],
    ["345696543", "422282224", "545736545"],
    ["359575953", "401141104", "538710545"],
    ["55873637855", "27280108272", "62177710753"],
];

/// The rows of one bundled table, in printed order.
pub fn golden_rows(source: TableSource) -> Vec<GoldenRow> {
    let raw: &[[&str; 3]] = match source {
        TableSource::Table1 => &TABLE1,
        TableSource::Table2 => &TABLE2,
    };
    raw.iter()
        .enumerate()
        .map(|(i, [x, y, z])| GoldenRow {
            index: i + 1,
            x: x.parse().expect("table entries are decimal"),
            y: y.parse().expect("table entries are decimal"),
            z: z.parse().expect("table entries are decimal"),
            source,
            note: String::new(),
        })
        .collect()
}

/// The bundled tables in machine-readable form: a JSON array whose
/// elements use the same schema as CLI output records.
pub fn golden_tables_json() -> &'static str {
    include_str!("../resources/golden_tables.json")
}

/// Re-verify every bundled row, table 1 first, preserving row order.
pub fn verify_catalog() -> Vec<RowVerdict> {
    TableSource::ALL
        .into_iter()
        .flat_map(golden_rows)
        .map(verify_row)
        .collect()
}

fn verify_row(row: GoldenRow) -> RowVerdict {
    let pythagorean = identity_holds(&row.x, &row.y, &row.z);
    let primitive = match Triple::new(row.x.clone(), row.y.clone(), row.z.clone()) {
        Ok(t) => t.is_primitive(),
        // Identity broken: measure primitivity on the printed values
        // directly.
        Err(_) => gcd3(&row.x, &row.y, &row.z) == Natural::from(1u32),
    };
    let pal_count = [&row.x, &row.y, &row.z]
        .into_iter()
        .filter(|n| digits::is_palindrome(n).unwrap_or(false))
        .count() as u8;
    let erratum = if pythagorean {
        None
    } else {
        Some(describe_corrections(&row))
    };
    RowVerdict {
        row,
        pythagorean,
        primitive,
        pal_count,
        erratum,
    }
}

/// The triple a row denotes: the printed values when they satisfy the
/// identity, otherwise the unique single-component correction. `None`
/// when no unique correction exists.
pub fn corrected_triple(row: &GoldenRow) -> Option<Triple> {
    if let Ok(t) = Triple::new(row.x.clone(), row.y.clone(), row.z.clone()) {
        return Some(t);
    }
    let fixes = single_component_fixes(row);
    match fixes.as_slice() {
        [(_, triple)] => Some(triple.clone()),
        _ => None,
    }
}

/// Compare search hits against one table: every row should be matched by
/// some hit (after erratum correction), and ideally no hit is left over.
pub fn diff_against_search(hits: &[SearchHit], source: TableSource) -> CatalogDiff {
    let rows = golden_rows(source);
    let mut matched = Vec::new();
    let mut missing = Vec::new();
    let mut claimed: Vec<Triple> = Vec::new();
    for row in rows {
        match corrected_triple(&row) {
            Some(triple) if hits.iter().any(|h| h.triple == triple) => {
                claimed.push(triple);
                matched.push(row);
            }
            _ => missing.push(row),
        }
    }
    let extra = hits
        .iter()
        .filter(|h| !claimed.contains(&h.triple))
        .cloned()
        .collect();
    CatalogDiff {
        matched,
        missing,
        extra,
    }
}

fn identity_holds(x: &Natural, y: &Natural, z: &Natural) -> bool {
    x * x + y * y == z * z
}

fn gcd3(x: &Natural, y: &Natural, z: &Natural) -> Natural {
    use num_integer::Integer;
    x.gcd(y).gcd(z)
}

/// All ways to repair the identity by replacing exactly one component,
/// described as `component := value` assignments against the printed
/// x/y/z positions.
fn single_component_fixes(row: &GoldenRow) -> Vec<(String, Triple)> {
    let mut fixes = Vec::new();
    let squares = |n: &Natural| n * n;
    // Replace z.
    let zz = squares(&row.x) + squares(&row.y);
    if let Some(z) = exact_sqrt(&zz) {
        if let Ok(t) = Triple::new(row.x.clone(), row.y.clone(), z.clone()) {
            fixes.push((format!("z := {z}"), t));
        }
    }
    // Replace x.
    if row.z > row.y {
        let xx = squares(&row.z) - squares(&row.y);
        if let Some(x) = exact_sqrt(&xx) {
            if let Ok(t) = Triple::new(x.clone(), row.y.clone(), row.z.clone()) {
                fixes.push((format!("x := {x}"), t));
            }
        }
    }
    // Replace y.
    if row.z > row.x {
        let yy = squares(&row.z) - squares(&row.x);
        if let Some(y) = exact_sqrt(&yy) {
            if let Ok(t) = Triple::new(row.x.clone(), y.clone(), row.z.clone()) {
                fixes.push((format!("y := {y}"), t));
            }
        }
    }
    fixes
}

fn describe_corrections(row: &GoldenRow) -> String {
    let fixes = single_component_fixes(row);
    if fixes.is_empty() {
        "no single-component correction restores identity".to_string()
    } else {
        let parts: Vec<String> = fixes
            .into_iter()
            .map(|(fix, _)| format!("{fix} satisfies identity"))
            .collect();
        parts.join("; ")
    }
}

fn exact_sqrt(n: &Natural) -> Option<Natural> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}
