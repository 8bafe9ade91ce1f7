use std::cmp::Ordering;

use ::ifv_topsis as core;
use core::io::{parse_problem_json, write_problem_json};
use core::measures::{d_euclid, d_hamming};
use core::{datasets, harness, DecisionProblem, Method, MetricSpec, OrderSpec};
use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An intuitionistic fuzzy value ⟨μ, ν⟩.
#[pyclass(name = "Ifv", module = "ifv_topsis", frozen, eq, from_py_object)]
#[derive(Clone, Copy, PartialEq)]
struct PyIfv(core::Ifv);

#[pymethods]
impl PyIfv {
    #[new]
    fn new(mu: f64, nu: f64) -> PyResult<Self> {
        core::Ifv::new(mu, nu).map(PyIfv).map_err(err)
    }

    #[getter]
    fn mu(&self) -> f64 {
        self.0.mu()
    }

    #[getter]
    fn nu(&self) -> f64 {
        self.0.nu()
    }

    #[getter]
    fn pi(&self) -> f64 {
        self.0.pi()
    }

    fn score(&self) -> f64 {
        self.0.score()
    }

    fn accuracy(&self) -> f64 {
        self.0.accuracy()
    }

    fn l_value(&self) -> f64 {
        self.0.l_value()
    }

    fn complement(&self) -> Self {
        PyIfv(self.0.complement())
    }

    fn meet(&self, other: &Self) -> Self {
        PyIfv(self.0.meet(&other.0))
    }

    fn join(&self, other: &Self) -> Self {
        PyIfv(self.0.join(&other.0))
    }

    /// `α ⊕ β`
    fn __add__(&self, other: &Self) -> Self {
        PyIfv(self.0.sum(&other.0))
    }

    /// `α ⊗ β`
    fn __mul__(&self, other: &Self) -> Self {
        PyIfv(self.0.product(&other.0))
    }

    fn scale(&self, lam: f64) -> PyResult<Self> {
        self.0.scale(lam).map(PyIfv).map_err(err)
    }

    fn power(&self, lam: f64) -> PyResult<Self> {
        self.0.power(lam).map(PyIfv).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Ifv({}, {})", self.0.mu(), self.0.nu())
    }
}

fn order_spec(order: &str, gamma1: Option<f64>, gamma2: Option<f64>) -> PyResult<OrderSpec> {
    match order {
        "xy" => Ok(OrderSpec::Xy),
        "zx" => Ok(OrderSpec::Zx),
        "partial" => Ok(OrderSpec::Partial),
        "kk" | "agg" => match (gamma1, gamma2) {
            (Some(g1), Some(g2)) => OrderSpec::k_gamma(g1, g2).map_err(err),
            _ => Err(PyValueError::new_err("order 'kk' needs gamma1 and gamma2")),
        },
        other => Err(PyValueError::new_err(format!("unknown order {other:?}"))),
    }
}

fn metric_spec(order: &str, lam: f64, gamma1: Option<f64>, gamma2: Option<f64>) -> PyResult<MetricSpec> {
    MetricSpec::for_order(&order_spec(order, gamma1, gamma2)?, lam).map_err(err)
}

/// -1, 0 or 1; `None` when the values are incomparable.
#[pyfunction]
#[pyo3(signature = (a, b, order = "xy", gamma1 = None, gamma2 = None))]
fn compare(a: &PyIfv, b: &PyIfv, order: &str, gamma1: Option<f64>, gamma2: Option<f64>) -> PyResult<Option<i8>> {
    Ok(order_spec(order, gamma1, gamma2)?.compare(&a.0, &b.0).map(|o| match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }))
}

#[pyfunction]
#[pyo3(signature = (a, b, order = "xy", lam = 100.0, gamma1 = None, gamma2 = None))]
fn distance(a: &PyIfv, b: &PyIfv, order: &str, lam: f64, gamma1: Option<f64>, gamma2: Option<f64>) -> PyResult<f64> {
    Ok(metric_spec(order, lam, gamma1, gamma2)?.distance(&a.0, &b.0))
}

fn unwrap_all(xs: Vec<PyIfv>) -> Vec<core::Ifv> {
    xs.into_iter().map(|x| x.0).collect()
}

#[pyfunction]
fn hamming(a: Vec<PyIfv>, b: Vec<PyIfv>) -> PyResult<f64> {
    d_hamming(&unwrap_all(a), &unwrap_all(b)).map_err(err)
}

#[pyfunction]
fn euclid(a: Vec<PyIfv>, b: Vec<PyIfv>) -> PyResult<f64> {
    d_euclid(&unwrap_all(a), &unwrap_all(b)).map_err(err)
}

/// A decision problem: alternatives × attributes matrix of IFVs plus weights.
#[pyclass(name = "Problem", module = "ifv_topsis", frozen)]
struct PyProblem(DecisionProblem);

#[pymethods]
impl PyProblem {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        parse_problem_json(text)
            .map(PyProblem)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// One of the bundled problems, e.g. `"supplier_selection"`.
    #[staticmethod]
    fn dataset(name: &str) -> PyResult<Self> {
        datasets::by_name(name)
            .map(PyProblem)
            .ok_or_else(|| PyKeyError::new_err(name.to_string()))
    }

    fn to_json(&self) -> String {
        write_problem_json(&self.0)
    }

    #[getter]
    fn alternatives(&self) -> Vec<String> {
        self.0.alternatives().to_vec()
    }

    #[getter]
    fn attributes(&self) -> Vec<String> {
        self.0.attributes().iter().map(|a| a.name.clone()).collect()
    }

    #[getter]
    fn matrix(&self) -> Vec<Vec<PyIfv>> {
        self.0
            .matrix()
            .iter()
            .map(|r| r.iter().copied().map(PyIfv).collect())
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "Problem({} alternatives, {} attributes)",
            self.0.n_alternatives(),
            self.0.n_attributes()
        )
    }
}

fn ranking<'py>(py: Python<'py>, problem: &DecisionProblem, method: Method) -> PyResult<Bound<'py, PyDict>> {
    let r = method.run(problem).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("ranking", r.preference_string(problem.alternatives()))?;
    out.set_item("closeness", r.closeness)?;
    out.set_item("order", r.order)?;
    Ok(out)
}

/// `{"closeness": [...], "order": [...], "ranking": "A2 ≻ ..."}`
#[pyfunction]
fn topsis_li<'py>(py: Python<'py>, problem: &PyProblem) -> PyResult<Bound<'py, PyDict>> {
    ranking(py, &problem.0, Method::Li)
}

#[pyfunction]
fn topsis_chen<'py>(py: Python<'py>, problem: &PyProblem) -> PyResult<Bound<'py, PyDict>> {
    ranking(py, &problem.0, Method::Chen)
}

#[pyfunction]
#[pyo3(signature = (problem, order = "xy", lam = 100.0, gamma1 = None, gamma2 = None))]
fn topsis_proposed<'py>(
    py: Python<'py>,
    problem: &PyProblem,
    order: &str,
    lam: f64,
    gamma1: Option<f64>,
    gamma2: Option<f64>,
) -> PyResult<Bound<'py, PyDict>> {
    let metric = metric_spec(order, lam, gamma1, gamma2)?;
    ranking(py, &problem.0, Method::Proposed(metric))
}

#[pyfunction]
fn check_ids() -> Vec<&'static str> {
    harness::check_ids()
}

/// `(passed, report_text)` for one registered check.
#[pyfunction]
fn run_check(id: &str) -> PyResult<(bool, String)> {
    let r = harness::run_check(id).map_err(|e| PyKeyError::new_err(e.to_string()))?;
    Ok((r.passed(), r.to_text()))
}

#[pymodule]
#[pyo3(name = "ifv_topsis")]
fn ifv_topsis_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIfv>()?;
    m.add_class::<PyProblem>()?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    m.add_function(wrap_pyfunction!(distance, m)?)?;
    m.add_function(wrap_pyfunction!(hamming, m)?)?;
    m.add_function(wrap_pyfunction!(euclid, m)?)?;
    m.add_function(wrap_pyfunction!(topsis_li, m)?)?;
    m.add_function(wrap_pyfunction!(topsis_chen, m)?)?;
    m.add_function(wrap_pyfunction!(topsis_proposed, m)?)?;
    m.add_function(wrap_pyfunction!(check_ids, m)?)?;
    m.add_function(wrap_pyfunction!(run_check, m)?)?;
    Ok(())
}
