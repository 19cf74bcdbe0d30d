//! Python bindings. Structured results cross the boundary as plain tuples
//! and lists; tables and atlas records as JSON text.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use refsheaf::atlas::{expected_dimension as expected_dim, Atlas, Query};
use refsheaf::chow::{euler_char as chi, ChernTriple};
use refsheaf::cohomtable::{synthesize, CohomError, Fact, TwistRange};
use refsheaf::curves::{serre_curve as serre, CurveClass};
use refsheaf::liaison::{linked_curve as link, LinkSpec};
use refsheaf::regression::run_regression;
use refsheaf::spectrum::{enumerate_spectra as enumerate, Spectrum};

create_exception!(refsheaf_py, ContradictionError, PyValueError);

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// `[(values, realized)]` for every admissible spectrum.
#[pyfunction]
fn enumerate_spectra(c1: i64, c2: i64, c3: i64) -> PyResult<Vec<(Vec<i64>, bool)>> {
    let v = enumerate(c1, c2, c3).map_err(value_err)?;
    Ok(v.iter().map(|x| (x.spectrum.values().to_vec(), x.is_realized())).collect())
}

/// `chi(F(l))` for a rank-2 sheaf with the given Chern classes.
#[pyfunction]
fn euler_char(c1: i64, c2: i64, c3: i64, l: i64) -> PyResult<i64> {
    chi(&ChernTriple::rank2(c1, c2, c3), l).map_err(value_err)
}

/// `(degree, genus)` of the zero locus of a section of `F(k)`.
#[pyfunction]
fn serre_curve(c1: i64, c2: i64, c3: i64, k: i64) -> PyResult<(i64, i64)> {
    let s = serre(c1, c2, c3, k).map_err(value_err)?;
    Ok((s.curve.degree, s.curve.genus))
}

#[pyfunction]
fn linked_curve(degree: i64, genus: i64, s: i64, t: i64) -> PyResult<(i64, i64)> {
    let c = CurveClass::new(degree, genus).map_err(value_err)?;
    let g = link(&LinkSpec::new(c, s, t).map_err(value_err)?).map_err(value_err)?;
    Ok((g.degree, g.genus))
}

/// The forced cohomology table, as JSON.
#[pyfunction]
#[pyo3(signature = (c1, c2, c3, spectrum, lo, hi, facts = Vec::new()))]
fn synthesize_table(
    c1: i64,
    c2: i64,
    c3: i64,
    spectrum: Vec<i64>,
    lo: i64,
    hi: i64,
    facts: Vec<String>,
) -> PyResult<String> {
    let s = Spectrum::new(c1, spectrum).map_err(value_err)?;
    let facts = facts
        .iter()
        .map(|f| Fact::parse(f, &Default::default()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(value_err)?;
    match synthesize(c1, c2, c3, &s, TwistRange::new(lo, hi), &facts) {
        Ok(t) => Ok(t.to_json().to_string()),
        Err(e @ CohomError::Contradiction { .. }) => Err(ContradictionError::new_err(e.to_string())),
        Err(e) => Err(value_err(e)),
    }
}

#[pyfunction]
fn expected_dimension(c1: i64, c2: i64) -> PyResult<i64> {
    expected_dim(c1, c2).map_err(value_err)
}

/// Matching atlas records as a JSON list.
#[pyfunction]
#[pyo3(signature = (c1 = None, c3 = None, label = None))]
fn atlas_query(c1: Option<i64>, c3: Option<i64>, label: Option<String>) -> String {
    let a = Atlas::builtin();
    serde_json::to_string(&a.query(&Query { c1, c3, label })).expect("records serialize")
}

/// Failure messages of the atlas verifier; empty when it passes.
#[pyfunction]
fn atlas_failures() -> Vec<String> {
    Atlas::builtin().verify().failures()
}

/// `(checks run, failing check names)` over the regression corpus.
#[pyfunction]
fn check() -> (usize, Vec<String>) {
    let lines = run_regression();
    let bad = lines
        .iter()
        .filter(|l| !l.passed)
        .map(|l| format!("{} {}", l.group, l.name))
        .collect();
    (lines.len(), bad)
}

#[pymodule]
fn refsheaf_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ContradictionError", m.py().get_type::<ContradictionError>())?;
    m.add_function(wrap_pyfunction!(enumerate_spectra, m)?)?;
    m.add_function(wrap_pyfunction!(euler_char, m)?)?;
    m.add_function(wrap_pyfunction!(serre_curve, m)?)?;
    m.add_function(wrap_pyfunction!(linked_curve, m)?)?;
    m.add_function(wrap_pyfunction!(synthesize_table, m)?)?;
    m.add_function(wrap_pyfunction!(expected_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(atlas_query, m)?)?;
    m.add_function(wrap_pyfunction!(atlas_failures, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    Ok(())
}
