//! Python bindings: planning, validation, coordinate conversion, word
//! evaluation, and the group certificates. Structured results come back as
//! plain dicts (decoded from the same JSON the CLI emits) so the Python
//! side needs no wrapper classes.

use geo4::geography::{self, Bounds, LatticePoint, PlanOutcome};
use geo4::grouppres::{coset_enumeration, smith_normal_form, CosetResult};
use geo4::invariants::CharNumbers;
use geo4::matrix::IntMat;
use geo4::mcg::{evaluate as mcg_evaluate, Character, SurfaceModel};
use geo4_cli::dsl;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

fn json_to_py<'py>(py: Python<'py>, value: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match value {
        serde_json::Value::Null => py.None().into_bound(py),
        serde_json::Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any()
            } else {
                n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any()
            }
        }
        serde_json::Value::String(s) => s.into_pyobject(py)?.into_any(),
        serde_json::Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any()
        }
        serde_json::Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, v) in map {
                dict.set_item(k, json_to_py(py, v)?)?;
            }
            dict.into_any()
        }
    })
}

fn chars_dict<'py>(py: Python<'py>, chars: &CharNumbers) -> PyResult<Bound<'py, PyAny>> {
    let value = serde_json::to_value(chars).map_err(|e| PyValueError::new_err(e.to_string()))?;
    json_to_py(py, &value)
}

/// Full coordinate row from (e, σ, b₁).
#[pyfunction]
#[pyo3(signature = (e, sigma, b1 = 0))]
fn convert(py: Python<'_>, e: i64, sigma: i64, b1: i64) -> PyResult<Bound<'_, PyAny>> {
    let chars = CharNumbers::from_e_sigma_b1(e, sigma, b1).map_err(|e| PyValueError::new_err(e.to_string()))?;
    chars_dict(py, &chars)
}

/// Plans the lattice point; returns status, rule/citation, and the recipe
/// document for realized points.
#[pyfunction]
fn plan(py: Python<'_>, m: i64, n: i64) -> PyResult<Bound<'_, PyAny>> {
    let outcome = geography::plan(LatticePoint::new(m, n)).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let value = match outcome {
        PlanOutcome::Realized(recipe) => serde_json::json!({
            "status": "realized",
            "rule": recipe.rule,
            "recipe": dsl::print_recipe(&recipe),
        }),
        PlanOutcome::External { citation } => serde_json::json!({"status": "external", "citation": citation}),
        PlanOutcome::Open => serde_json::json!({"status": "open"}),
    };
    json_to_py(py, &value)
}

/// Parses and validates a recipe document; returns the folded descriptor.
#[pyfunction]
fn validate_recipe<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    let recipe = dsl::parse_recipe(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let descriptor = geography::validate(&recipe).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let value = serde_json::to_value(&descriptor).map_err(|e| PyValueError::new_err(e.to_string()))?;
    json_to_py(py, &value)
}

/// Coverage summary over a rectangle of lattice points.
#[pyfunction]
#[pyo3(signature = (m_min, m_max, n_min = None, n_max = None))]
fn scan(py: Python<'_>, m_min: i64, m_max: i64, n_min: Option<i64>, n_max: Option<i64>) -> PyResult<Bound<'_, PyAny>> {
    let bounds = Bounds { m_min, m_max, n_min: n_min.unwrap_or(m_min), n_max: n_max.unwrap_or(m_max) };
    let report = geography::scan(bounds).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let value = serde_json::json!({
        "realized": report.realized.len(),
        "external": report.external.len(),
        "open": report.open.iter().map(|p| (p.m, p.n)).collect::<Vec<_>>(),
        "figure_markers": report.figure_markers().iter().map(|p| (p.m, p.n)).collect::<Vec<_>>(),
        "fixture_hash": report.fixture_hash,
        "csv": geography::report::to_csv(&report),
    });
    json_to_py(py, &value)
}

/// Smith normal form with the unimodular certificate.
#[pyfunction]
fn snf(py: Python<'_>, rows: Vec<Vec<i64>>) -> PyResult<Bound<'_, PyAny>> {
    let converted: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    if converted.iter().any(|r| r.len() != converted[0].len()) {
        return Err(PyValueError::new_err("ragged matrix"));
    }
    let m = if converted.is_empty() { IntMat::zeros(0, 0) } else { IntMat::from_rows(&converted) };
    let result = smith_normal_form(&m);
    if !result.verify(&m) {
        return Err(PyValueError::new_err("certificate verification failed"));
    }
    // transforms are arbitrary precision; ship them as decimal strings
    let to_rows = |mat: &geo4::grouppres::snf::BigMat| -> Vec<Vec<String>> {
        mat.iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect()
    };
    let value = serde_json::json!({
        "divisors": result.divisors.iter().map(|&d| d as i64).collect::<Vec<_>>(),
        "u": to_rows(&result.u),
        "v": to_rows(&result.v),
    });
    json_to_py(py, &value)
}

/// Abelianization and bounded coset certificate for a presentation literal.
#[pyfunction]
#[pyo3(signature = (presentation, cap = 100_000))]
fn group_certificate<'py>(py: Python<'py>, presentation: &str, cap: usize) -> PyResult<Bound<'py, PyAny>> {
    let group = dsl::parse_group(presentation).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let ab = group.abelianization();
    let index = match coset_enumeration(&group, &[], cap) {
        CosetResult::Finite(n) => Some(n),
        CosetResult::Exceeded => None,
    };
    let value = serde_json::json!({
        "divisors": ab.divisors.iter().map(|&d| d as i64).collect::<Vec<_>>(),
        "rank": ab.rank,
        "index": index,
    });
    json_to_py(py, &value)
}

/// Evaluates a twist-word literal on the standard genus-g surface.
#[pyfunction]
fn evaluate_word<'py>(py: Python<'py>, genus: usize, expr: &str) -> PyResult<Bound<'py, PyAny>> {
    let word = dsl::parse_word(expr).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let surface = SurfaceModel::standard(genus);
    let m = mcg_evaluate(&surface, &word).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let rows: Vec<Vec<i64>> = (0..m.mat.rows()).map(|i| m.mat.row(i).iter().map(|&x| x as i64).collect()).collect();
    let value = serde_json::json!({
        "matrix": rows,
        "character": match m.character { Character::Symplectic => "symplectic", Character::AntiSymplectic => "anti-symplectic" },
        "identity": m.mat.is_identity(),
        "length": word.len(),
    });
    json_to_py(py, &value)
}

/// Hash of the shipped fixture tables.
#[pyfunction]
fn fixture_hash() -> String {
    geography::report::fixture_hash()
}

#[pymodule]
fn geo4py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(convert, m)?)?;
    m.add_function(wrap_pyfunction!(plan, m)?)?;
    m.add_function(wrap_pyfunction!(validate_recipe, m)?)?;
    m.add_function(wrap_pyfunction!(scan, m)?)?;
    m.add_function(wrap_pyfunction!(snf, m)?)?;
    m.add_function(wrap_pyfunction!(group_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_word, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_hash, m)?)?;
    Ok(())
}
