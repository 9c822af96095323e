//! Python bindings for the wedge-aut calculator.
//!
//! Exposes the main types and operations in-process: abelian-group
//! arithmetic, basic-commutator enumeration, sphere homotopy-group orders,
//! and the full wedge computation (as a JSON report string or just the
//! total). Build with `cargo build --release -p wedge-aut-py` and import
//! the resulting shared library as `wedge_aut_py`.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use wedge_aut::engine::EngineOptions;
use wedge_aut::{cli, GroupTable};

/// A finitely generated abelian group in invariant-factor form.
///
/// Construct from the canonical string grammar: "0", "Z", "Z^r", "Z/n",
/// joined by "+", e.g. "Z + Z/12".
#[pyclass(name = "AbelianGroup", skip_from_py_object)]
#[derive(Clone)]
struct PyAbelianGroup {
    inner: wedge_aut::AbelianGroup,
}

#[pymethods]
impl PyAbelianGroup {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let inner = wedge_aut::AbelianGroup::parse(text)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyAbelianGroup { inner })
    }

    /// Hom(self, other).
    fn hom(&self, other: &PyAbelianGroup) -> PyAbelianGroup {
        PyAbelianGroup {
            inner: self.inner.hom(&other.inner),
        }
    }

    /// Ext(self, other).
    fn ext(&self, other: &PyAbelianGroup) -> PyAbelianGroup {
        PyAbelianGroup {
            inner: self.inner.ext(&other.inner),
        }
    }

    /// Order as a string: a decimal integer or "infinite".
    fn order(&self) -> String {
        self.inner.order().to_string()
    }

    fn rank(&self) -> u32 {
        self.inner.rank()
    }

    fn invariant_factors(&self) -> Vec<BigUint> {
        self.inner.invariant_factors().to_vec()
    }

    fn is_trivial(&self) -> bool {
        self.inner.is_trivial()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("AbelianGroup({:?})", self.inner.to_string())
    }

    fn __eq__(&self, other: &PyAbelianGroup) -> bool {
        self.inner == other.inner
    }
}

fn load_table(table_path: Option<&str>) -> PyResult<GroupTable> {
    match table_path {
        None => Ok(GroupTable::bundled()),
        Some(path) => {
            let (table, _warnings) = GroupTable::load_path(std::path::Path::new(path))
                .map_err(|e| PyValueError::new_err(e.to_string()))?;
            Ok(table)
        }
    }
}

fn run_engine(
    expr: &str,
    table_path: Option<&str>,
    assume_reducible: bool,
    max_weight: Option<u32>,
    explain: bool,
) -> PyResult<wedge_aut::FactorReport> {
    let wedge = cli::parse_wedge(expr).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let table = load_table(table_path)?;
    let opts = EngineOptions {
        assume_reducible,
        max_weight,
        include_trivial: explain,
    };
    wedge_aut::aut_order_with(&wedge, &table, &opts)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Full factor report for a wedge expression, as the same JSON document the
/// CLI emits with --json.
#[pyfunction]
#[pyo3(signature = (expr, table_path=None, assume_reducible=false, max_weight=None, explain=false))]
fn compute_json(
    expr: &str,
    table_path: Option<&str>,
    assume_reducible: bool,
    max_weight: Option<u32>,
    explain: bool,
) -> PyResult<String> {
    let report = run_engine(expr, table_path, assume_reducible, max_weight, explain)?;
    Ok(cli::render_json(&report))
}

/// Just the total order of Aut for a wedge expression: a decimal integer,
/// "infinite", or "unknown".
#[pyfunction]
#[pyo3(signature = (expr, table_path=None, assume_reducible=false))]
fn total_order(
    expr: &str,
    table_path: Option<&str>,
    assume_reducible: bool,
) -> PyResult<String> {
    let report = run_engine(expr, table_path, assume_reducible, None, false)?;
    Ok(report.total.to_string())
}

/// The basic commutators on k generators up to the given weight, rendered
/// as nested brackets in the canonical order.
#[pyfunction]
fn basic_commutators(k: usize, max_weight: u32) -> PyResult<Vec<String>> {
    if k < 1 || max_weight < 1 {
        return Err(PyValueError::new_err("need k >= 1 and max_weight >= 1"));
    }
    Ok(wedge_aut::basic_commutators(k, max_weight)
        .iter()
        .map(|c| c.to_string())
        .collect())
}

/// The Witt number: how many basic commutators of exact weight w exist on
/// k generators.
#[pyfunction]
fn witt_count(k: usize, w: u32) -> PyResult<BigUint> {
    if k < 1 || w < 1 {
        return Err(PyValueError::new_err("need k >= 1 and w >= 1"));
    }
    Ok(wedge_aut::count_by_weight(k, w))
}

/// Order of pi_a(S^b) under the bundled table: a decimal integer,
/// "infinite", or "unknown".
#[pyfunction]
#[pyo3(signature = (a, b, table_path=None))]
fn sphere_pi_order(a: u32, b: u32, table_path: Option<&str>) -> PyResult<String> {
    if a < 1 || b < 1 {
        return Err(PyValueError::new_err("sphere dimensions start at 1"));
    }
    let table = load_table(table_path)?;
    Ok(wedge_aut::sphere_pi_order(a, b, &table).0.to_string())
}

/// |Aut(Z/q)| = phi(q).
#[pyfunction]
fn aut_cyclic_order(q: u64) -> PyResult<BigUint> {
    if q < 2 {
        return Err(PyValueError::new_err("need q >= 2"));
    }
    match wedge_aut::aut_cyclic_order(q) {
        wedge_aut::ExtOrder::Finite(n) => Ok(n),
        _ => unreachable!("cyclic automorphism groups are finite"),
    }
}

/// Validate a wedge expression and return its canonical summand renderings.
#[pyfunction]
fn parse_wedge(expr: &str) -> PyResult<Vec<String>> {
    let wedge = cli::parse_wedge(expr).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(wedge.summands().iter().map(|s| s.to_string()).collect())
}

#[pymodule]
fn wedge_aut_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyAbelianGroup>()?;
    m.add_function(wrap_pyfunction!(compute_json, m)?)?;
    m.add_function(wrap_pyfunction!(total_order, m)?)?;
    m.add_function(wrap_pyfunction!(basic_commutators, m)?)?;
    m.add_function(wrap_pyfunction!(witt_count, m)?)?;
    m.add_function(wrap_pyfunction!(sphere_pi_order, m)?)?;
    m.add_function(wrap_pyfunction!(aut_cyclic_order, m)?)?;
    m.add_function(wrap_pyfunction!(parse_wedge, m)?)?;
    Ok(())
}
