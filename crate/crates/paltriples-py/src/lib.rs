//! Python extension module `paltriples_py`.
//!
//! Exposes the triple type plus the digit utilities, constructive
//! families, searches, and reference-table verification. Components cross
//! the boundary as Python ints of any size; search hits and verdicts come
//! back as plain dicts so callers need no extra types.

use num_bigint::BigUint;
use num_traits::Zero;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use std::str::FromStr;

use paltriples::catalog::{self, TableSource};
use paltriples::digits::{self, Parity};
use paltriples::families::{self, FamilyId};
use paltriples::search::{self, AnchorRole, AnchoredQuery, EuclidQuery, SearchHit};
use paltriples::triples::{EuclidParams, Triple as CoreTriple};

fn err(e: paltriples::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_role(role: &str) -> PyResult<AnchorRole> {
    AnchorRole::from_str(role).map_err(PyValueError::new_err)
}

fn parse_parity(parity: Option<&str>) -> PyResult<Option<Parity>> {
    match parity {
        None => Ok(None),
        Some("odd") => Ok(Some(Parity::Odd)),
        Some("even") => Ok(Some(Parity::Even)),
        Some(other) => Err(PyValueError::new_err(format!(
            "parity must be \"odd\" or \"even\", not {other:?}"
        ))),
    }
}

/// A Pythagorean triple in canonical component order.
#[pyclass(frozen, eq, hash, name = "Triple", skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyTriple {
    inner: CoreTriple,
}

#[pymethods]
impl PyTriple {
    /// Validate `x^2 + y^2 == z^2` and canonicalize the components.
    #[new]
    fn new(x: BigUint, y: BigUint, z: BigUint) -> PyResult<Self> {
        CoreTriple::new(x, y, z)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    /// The primitive triple generated by a descending, coprime,
    /// opposite-parity pair.
    #[staticmethod]
    fn from_euclid(s: BigUint, t: BigUint) -> PyResult<Self> {
        let params = EuclidParams::new(s, t).map_err(err)?;
        Ok(Self {
            inner: CoreTriple::from_euclid(&params),
        })
    }

    #[getter]
    fn x(&self) -> BigUint {
        self.inner.a().clone()
    }

    #[getter]
    fn y(&self) -> BigUint {
        self.inner.b().clone()
    }

    #[getter]
    fn z(&self) -> BigUint {
        self.inner.c().clone()
    }

    fn is_primitive(&self) -> bool {
        self.inner.is_primitive()
    }

    fn scale(&self, m: BigUint) -> PyResult<Self> {
        if m.is_zero() {
            return Err(PyValueError::new_err("scale factor must be positive"));
        }
        Ok(Self {
            inner: self.inner.scale(&m),
        })
    }

    /// Which components read the same forwards and backwards.
    fn pal_flags(&self) -> (bool, bool, bool) {
        let f = self.inner.profile().flags;
        (f[0], f[1], f[2])
    }

    fn pal_count(&self) -> u8 {
        self.inner.profile().count
    }

    /// Digit-count parity of each component, e.g. "OOE".
    fn digit_parity(&self) -> String {
        self.inner.digit_parity_form().pattern_string()
    }

    /// Could all three components be palindromes, going by digit-count
    /// parity alone?
    fn parity_admissible(&self) -> bool {
        self.inner.digit_parity_form().admissible
    }

    /// The three divisibility facts of a primitive triple, plus their
    /// conjunction under "all_hold".
    fn divisibility_report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = self.inner.divisibility_report().map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("exactly_one_leg_div3", r.exactly_one_leg_div3)?;
        d.set_item("even_leg_div4", r.even_leg_div4)?;
        d.set_item("exactly_one_component_div5", r.exactly_one_component_div5)?;
        d.set_item("all_hold", r.all_hold())?;
        Ok(d)
    }

    /// Which component carries each of the factors 3, 4, and 5, as a tag
    /// like "3a-4b-5c".
    fn factor_form(&self) -> PyResult<String> {
        self.inner
            .factor_form()
            .map(|f| f.tag().to_string())
            .map_err(err)
    }

    /// Cheap necessary conditions for all three components to be
    /// palindromes.
    fn all_palindrome_prefilter(&self) -> PyResult<bool> {
        self.inner.all_palindrome_prefilter().map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Triple({}, {}, {})",
            self.inner.a(),
            self.inner.b(),
            self.inner.c()
        )
    }

    fn __str__(&self) -> String {
        format!(
            "({}, {}, {})",
            self.inner.a(),
            self.inner.b(),
            self.inner.c()
        )
    }
}

fn hit_dict<'py>(py: Python<'py>, hit: &SearchHit) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item(
        "triple",
        PyTriple {
            inner: hit.triple.clone(),
        },
    )?;
    d.set_item("primitive", hit.primitive)?;
    let f = hit.profile.flags;
    d.set_item("pal_flags", (f[0], f[1], f[2]))?;
    d.set_item("pal_count", hit.profile.count)?;
    d.set_item("digit_parity", hit.profile.parity_string())?;
    d.set_item("source", hit.provenance.source())?;
    let params = PyDict::new(py);
    for (k, v) in hit.provenance.params() {
        params.set_item(k, v)?;
    }
    d.set_item("params", params)?;
    Ok(d)
}

fn hit_dicts<'py>(py: Python<'py>, hits: &[SearchHit]) -> PyResult<Vec<Bound<'py, PyDict>>> {
    hits.iter().map(|h| hit_dict(py, h)).collect()
}

/// Does the number read the same forwards and backwards?
#[pyfunction]
fn is_palindrome(n: BigUint) -> PyResult<bool> {
    digits::is_palindrome(&n).map_err(err)
}

/// The number with its decimal digits reversed.
#[pyfunction]
fn reverse_digits(n: BigUint) -> BigUint {
    digits::reverse_digits(&n)
}

/// How many decimal digits the number has.
#[pyfunction]
fn digit_count(n: BigUint) -> PyResult<usize> {
    digits::digit_count(&n).map_err(err)
}

/// `extra + 1` copies of the decimal expansion, concatenated.
#[pyfunction]
fn concat_copies(a: BigUint, extra: u32) -> BigUint {
    digits::concat_copies(&a, extra)
}

/// The digit `d` written `k` times.
#[pyfunction]
fn repeat_digit(d: u8, k: u32) -> PyResult<BigUint> {
    digits::repeat_digit(d, k).map_err(err)
}

/// Alternating sum of the decimal digits, most significant first.
#[pyfunction]
fn alternating_digit_sum(n: BigUint) -> i64 {
    digits::alternating_digit_sum(&n)
}

/// All palindromes with `min_digits` to `max_digits` digits, ascending;
/// `parity` ("odd"/"even") filters by value, `limit` truncates.
#[pyfunction]
#[pyo3(signature = (min_digits, max_digits, parity=None, limit=None))]
fn enumerate_palindromes(
    min_digits: u32,
    max_digits: u32,
    parity: Option<&str>,
    limit: Option<usize>,
) -> PyResult<Vec<BigUint>> {
    let parity = parse_parity(parity)?;
    let it = digits::enumerate_palindromes(min_digits, max_digits, parity);
    Ok(match limit {
        Some(n) => it.take(n).collect(),
        None => it.collect(),
    })
}

/// The base-100 repunit multiplier `1, 101, 10101, ...`.
#[pyfunction]
fn f_multiplier(n: u32) -> BigUint {
    families::f_multiplier(n)
}

/// The first `limit` generator values of the primitive family's stream.
#[pyfunction]
fn ppt1_s_values(limit: usize) -> Vec<BigUint> {
    families::ppt1_s_values(limit)
}

/// One member of a constructive family, with its predicted digit
/// patterns and the outcome of checking them.
#[pyfunction]
fn family_member<'py>(py: Python<'py>, family: &str, index: u32) -> PyResult<Bound<'py, PyDict>> {
    let family = FamilyId::from_str(family).map_err(PyValueError::new_err)?;
    let m = families::member(family, index).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("family", m.family.tag())?;
    d.set_item("index", m.index)?;
    d.set_item(
        "triple",
        PyTriple {
            inner: m.triple.clone(),
        },
    )?;
    let [px, py_, pz] = &m.predicted_pattern;
    d.set_item(
        "patterns",
        (px.to_string(), py_.to_string(), pz.to_string()),
    )?;
    d.set_item("declared_pal_count", m.declared_pal_count)?;
    d.set_item("primitive", m.primitive)?;
    d.set_item("pattern_ok", families::pattern_check(&m))?;
    Ok(d)
}

/// Sweep generator pairs bounded by `max_s` and/or `max_z`, keeping
/// triples with at least `min_pal` palindromic components.
#[pyfunction]
#[pyo3(signature = (max_s=None, max_z=None, min_pal=0))]
fn search_euclid(
    py: Python<'_>,
    max_s: Option<BigUint>,
    max_z: Option<BigUint>,
    min_pal: u8,
) -> PyResult<Vec<Bound<'_, PyDict>>> {
    let hits = search::search_euclid(&EuclidQuery {
        max_s,
        max_c: max_z,
        min_pal_count: min_pal,
    })
    .map_err(err)?;
    hit_dicts(py, &hits)
}

/// Decompose every palindrome of one role across a digit range.
#[pyfunction]
#[pyo3(signature = (role, min_digits, max_digits, min_pal=0, primitive_only=false))]
fn anchored_search<'py>(
    py: Python<'py>,
    role: &str,
    min_digits: u32,
    max_digits: u32,
    min_pal: u8,
    primitive_only: bool,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let hits = search::anchored_search(&AnchoredQuery {
        role: parse_role(role)?,
        min_digits,
        max_digits,
        min_pal_count: min_pal,
        primitive_only,
    })
    .map_err(err)?;
    hit_dicts(py, &hits)
}

/// Exhaustively scan for all-palindrome primitive triples with
/// hypotenuse at most `max_z`.
#[pyfunction]
#[pyo3(signature = (max_z, prune=true))]
fn evidence_search(py: Python<'_>, max_z: BigUint, prune: bool) -> PyResult<Vec<Bound<'_, PyDict>>> {
    let hits = search::evidence_search(&max_z, prune).map_err(err)?;
    hit_dicts(py, &hits)
}

/// Every triple containing `value` in the given role.
#[pyfunction]
#[pyo3(signature = (role, value, primitive_only=false))]
fn decompose(role: &str, value: BigUint, primitive_only: bool) -> PyResult<Vec<PyTriple>> {
    let triples = match parse_role(role)? {
        AnchorRole::OddLeg => search::decompose_odd_leg(&value),
        AnchorRole::EvenLeg => search::decompose_even_leg(&value),
        AnchorRole::Hypotenuse => search::decompose_hypotenuse(&value, primitive_only),
    }
    .map_err(err)?;
    Ok(triples
        .into_iter()
        .filter(|t| !primitive_only || t.is_primitive())
        .map(|inner| PyTriple { inner })
        .collect())
}

/// The bundled reference rows of one table ("table1" or "table2"),
/// exactly as printed in the source.
#[pyfunction]
fn golden_rows<'py>(py: Python<'py>, source: &str) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let source = TableSource::from_str(source).map_err(PyValueError::new_err)?;
    catalog::golden_rows(source)
        .iter()
        .map(|row| {
            let d = PyDict::new(py);
            d.set_item("source", row.source.tag())?;
            d.set_item("index", row.index)?;
            d.set_item("x", row.x.clone())?;
            d.set_item("y", row.y.clone())?;
            d.set_item("z", row.z.clone())?;
            Ok(d)
        })
        .collect()
}

/// Re-verify every bundled reference row; each verdict reports the
/// identity, primitivity, palindrome count, and any erratum.
#[pyfunction]
fn verify_tables(py: Python<'_>) -> PyResult<Vec<Bound<'_, PyDict>>> {
    catalog::verify_catalog()
        .iter()
        .map(|v| {
            let d = PyDict::new(py);
            d.set_item("source", v.row.source.tag())?;
            d.set_item("index", v.row.index)?;
            d.set_item("x", v.row.x.clone())?;
            d.set_item("y", v.row.y.clone())?;
            d.set_item("z", v.row.z.clone())?;
            d.set_item("pythagorean", v.pythagorean)?;
            d.set_item("primitive", v.primitive)?;
            d.set_item("pal_count", v.pal_count)?;
            d.set_item("erratum", v.erratum.clone())?;
            d.set_item("passes", v.passes())?;
            Ok(d)
        })
        .collect()
}

#[pymodule]
fn paltriples_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTriple>()?;
    m.add_function(wrap_pyfunction!(is_palindrome, m)?)?;
    m.add_function(wrap_pyfunction!(reverse_digits, m)?)?;
    m.add_function(wrap_pyfunction!(digit_count, m)?)?;
    m.add_function(wrap_pyfunction!(concat_copies, m)?)?;
    m.add_function(wrap_pyfunction!(repeat_digit, m)?)?;
    m.add_function(wrap_pyfunction!(alternating_digit_sum, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_palindromes, m)?)?;
    m.add_function(wrap_pyfunction!(f_multiplier, m)?)?;
    m.add_function(wrap_pyfunction!(ppt1_s_values, m)?)?;
    m.add_function(wrap_pyfunction!(family_member, m)?)?;
    m.add_function(wrap_pyfunction!(search_euclid, m)?)?;
    m.add_function(wrap_pyfunction!(anchored_search, m)?)?;
    m.add_function(wrap_pyfunction!(evidence_search, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(golden_rows, m)?)?;
    m.add_function(wrap_pyfunction!(verify_tables, m)?)?;
    Ok(())
}
