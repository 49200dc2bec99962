//! Python bindings for `boole_core`.
//!
//! Rational arguments accept a `Rational`, an `int`, a `"p/q"` string, or
//! anything with integer `numerator` / `denominator` attributes (such as
//! `fractions.Fraction`).

use boole_core as core;
use num_bigint::BigInt;
use pyo3::exceptions::{PyTypeError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyString;

pyo3::create_exception!(boole, SingularMatrixError, PyValueError);

fn to_py_err(err: core::Error) -> PyErr {
    match err {
        core::Error::ZeroDenominator => PyZeroDivisionError::new_err(err.to_string()),
        core::Error::Singular => SingularMatrixError::new_err(err.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// Exact rational number in lowest terms.
#[pyclass(
    name = "Rational",
    module = "boole",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyRational {
    inner: core::Rational,
}

impl From<core::Rational> for PyRational {
    fn from(inner: core::Rational) -> Self {
        Self { inner }
    }
}

fn extract_rational(obj: &Bound<'_, PyAny>) -> PyResult<core::Rational> {
    if let Ok(r) = obj.cast::<PyRational>() {
        return Ok(r.get().inner.clone());
    }
    if let Ok(s) = obj.cast::<PyString>() {
        return s.to_str()?.parse().map_err(to_py_err);
    }
    if let Ok(i) = obj.extract::<BigInt>() {
        return Ok(core::Rational::from_integer(i));
    }
    if let (Ok(num), Ok(den)) = (obj.getattr("numerator"), obj.getattr("denominator")) {
        let num: BigInt = num.extract()?;
        let den: BigInt = den.extract()?;
        return core::Rational::new(num, den).map_err(to_py_err);
    }
    Err(PyTypeError::new_err(format!(
        "cannot convert {} to Rational",
        obj.get_type().name()?
    )))
}

fn extract_rationals(items: Vec<Bound<'_, PyAny>>) -> PyResult<Vec<core::Rational>> {
    items.iter().map(extract_rational).collect()
}

fn wrap_all(xs: Vec<core::Rational>) -> Vec<PyRational> {
    xs.into_iter().map(PyRational::from).collect()
}

fn extract_matrix(rows: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<core::ExactMatrix> {
    let rows = rows
        .into_iter()
        .map(extract_rationals)
        .collect::<PyResult<Vec<_>>>()?;
    core::ExactMatrix::from_rows(rows).map_err(to_py_err)
}

#[pymethods]
impl PyRational {
    #[new]
    #[pyo3(signature = (value, denominator=None))]
    fn new(value: &Bound<'_, PyAny>, denominator: Option<BigInt>) -> PyResult<Self> {
        let base = extract_rational(value)?;
        let inner = match denominator {
            None => base,
            Some(den) => base
                .checked_div(&core::Rational::from_integer(den))
                .map_err(to_py_err)?,
        };
        Ok(Self { inner })
    }

    #[getter]
    fn numerator(&self) -> BigInt {
        self.inner.numerator().clone()
    }

    #[getter]
    fn denominator(&self) -> BigInt {
        self.inner.denominator().clone()
    }

    /// Canonical `p/q` text, with `/1` kept for integers.
    fn fraction_string(&self) -> String {
        self.inner.to_fraction_string()
    }

    fn is_integer(&self) -> bool {
        self.inner.is_integer()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Rational('{}')", self.inner.to_fraction_string())
    }

    fn __neg__(&self) -> Self {
        (-&self.inner).into()
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok((&self.inner + extract_rational(other)?).into())
    }

    fn __radd__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok((extract_rational(other)? + &self.inner).into())
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok((&self.inner - extract_rational(other)?).into())
    }

    fn __rsub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok((extract_rational(other)? - &self.inner).into())
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok((&self.inner * extract_rational(other)?).into())
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok((extract_rational(other)? * &self.inner).into())
    }

    fn __truediv__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.inner
            .checked_div(&extract_rational(other)?)
            .map(Into::into)
            .map_err(to_py_err)
    }

    fn __rtruediv__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        extract_rational(other)?
            .checked_div(&self.inner)
            .map(Into::into)
            .map_err(to_py_err)
    }

    fn __pow__(&self, exponent: usize, _modulo: Option<usize>) -> Self {
        self.inner.pow(exponent).into()
    }
}

/// One compared pair from a verification sweep.
#[pyclass(
    name = "CaseResult",
    module = "boole",
    frozen,
    get_all,
    skip_from_py_object
)]
#[derive(Clone)]
pub struct PyCaseResult {
    n: usize,
    m: usize,
    check: &'static str,
    a: PyRational,
    b: PyRational,
    lhs: PyRational,
    rhs: PyRational,
    passed: bool,
}

#[pymethods]
impl PyCaseResult {
    fn __repr__(&self) -> String {
        format!(
            "CaseResult(check={}, n={}, m={}, lhs={}, rhs={}, passed={})",
            self.check,
            self.n,
            self.m,
            self.lhs.inner,
            self.rhs.inner,
            if self.passed { "True" } else { "False" }
        )
    }
}

#[pyclass(name = "VerificationReport", module = "boole", frozen)]
pub struct PyVerificationReport {
    inner: core::VerificationReport,
}

#[pymethods]
impl PyVerificationReport {
    #[getter]
    fn total(&self) -> usize {
        self.inner.total
    }

    #[getter]
    fn failures(&self) -> usize {
        self.inner.failures
    }

    #[getter]
    fn passed(&self) -> bool {
        self.inner.passed()
    }

    #[getter]
    fn notes(&self) -> Vec<String> {
        self.inner.notes.clone()
    }

    /// Number of results of one check kind, e.g. `"theorem"`.
    fn count(&self, check: &str) -> usize {
        self.inner
            .results
            .iter()
            .filter(|r| r.check.as_str() == check)
            .count()
    }

    fn cases(&self) -> Vec<PyCaseResult> {
        self.inner
            .results
            .iter()
            .map(|r| PyCaseResult {
                n: r.case.n,
                m: r.case.m,
                check: r.check.as_str(),
                a: r.case.a.clone().into(),
                b: r.case.b.clone().into(),
                lhs: r.lhs.clone().into(),
                rhs: r.rhs.clone().into(),
                passed: r.pass,
            })
            .collect()
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __len__(&self) -> usize {
        self.inner.total
    }

    fn __repr__(&self) -> String {
        format!(
            "VerificationReport(total={}, failures={})",
            self.inner.total, self.inner.failures
        )
    }
}

impl From<core::VerificationReport> for PyVerificationReport {
    fn from(inner: core::VerificationReport) -> Self {
        Self { inner }
    }
}

#[pyfunction]
fn factorial(n: usize) -> BigInt {
    core::factorial(n)
}

#[pyfunction]
fn binomial(n: usize, k: usize) -> BigInt {
    core::binomial(n, k)
}

#[pyfunction]
fn superfactorial(n: usize) -> BigInt {
    core::superfactorial(n)
}

#[pyfunction]
fn boole_sum(n: usize, m: usize) -> BigInt {
    core::boole_sum(n, m)
}

#[pyfunction]
fn stirling2(m: usize, n: usize) -> BigInt {
    core::stirling2(m, n)
}

#[pyfunction]
fn forward_difference_at_zero(m: usize, n: usize) -> BigInt {
    core::forward_difference_at_zero(m, n)
}

#[pyfunction]
fn closed_form_solution(n: usize) -> Vec<BigInt> {
    core::closed_form_solution(n)
}

#[pyfunction]
fn generalized_sum(
    a: &Bound<'_, PyAny>,
    b: &Bound<'_, PyAny>,
    n: usize,
    m: usize,
) -> PyResult<PyRational> {
    Ok(core::generalized_sum(&extract_rational(a)?, &extract_rational(b)?, n, m).into())
}

#[pyfunction]
fn expected_value(
    a: &Bound<'_, PyAny>,
    b: &Bound<'_, PyAny>,
    n: usize,
    m: usize,
) -> PyResult<PyRational> {
    core::expected_value(&extract_rational(a)?, &extract_rational(b)?, n, m)
        .map(Into::into)
        .map_err(to_py_err)
}

/// Returns `(matrix, rhs)` for the Vandermonde system on nodes `a + j b`.
#[pyfunction]
fn build_system(
    a: &Bound<'_, PyAny>,
    b: &Bound<'_, PyAny>,
    n: usize,
) -> PyResult<(Vec<Vec<PyRational>>, Vec<PyRational>)> {
    let nodes = core::ArithmeticNodes::new(extract_rational(a)?, extract_rational(b)?, n);
    let system = core::build_system(&nodes);
    let matrix = system
        .matrix()
        .row_vecs()
        .into_iter()
        .map(wrap_all)
        .collect();
    Ok((matrix, wrap_all(system.rhs().to_vec())))
}

/// Solves a square system exactly. Raises `SingularMatrixError` when the
/// matrix is singular.
#[pyfunction]
fn solve_exact(
    matrix: Vec<Vec<Bound<'_, PyAny>>>,
    rhs: Vec<Bound<'_, PyAny>>,
) -> PyResult<Vec<PyRational>> {
    let system = core::LinearSystem::new(extract_matrix(matrix)?, extract_rationals(rhs)?)
        .map_err(to_py_err)?;
    core::solve_exact(&system).map(wrap_all).map_err(to_py_err)
}

/// Solves the Vandermonde system on nodes `a + j b` with the generic solver.
#[pyfunction]
fn solve_system(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, n: usize) -> PyResult<Vec<PyRational>> {
    let nodes = core::ArithmeticNodes::new(extract_rational(a)?, extract_rational(b)?, n);
    core::solve_exact(&core::build_system(&nodes))
        .map(wrap_all)
        .map_err(to_py_err)
}

#[pyfunction]
fn det_bareiss(matrix: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<PyRational> {
    core::det_bareiss(&extract_matrix(matrix)?)
        .map(Into::into)
        .map_err(to_py_err)
}

#[pyfunction]
fn det_vandermonde_general(nodes: Vec<Bound<'_, PyAny>>) -> PyResult<PyRational> {
    Ok(core::det_vandermonde_general(&extract_rationals(nodes)?).into())
}

#[pyfunction]
fn det_vandermonde_closed(n: usize, b: &Bound<'_, PyAny>) -> PyResult<PyRational> {
    Ok(core::det_vandermonde_closed(n, &extract_rational(b)?).into())
}

#[pyfunction]
fn det_vk_closed(n: usize, k: usize, b: &Bound<'_, PyAny>) -> PyResult<PyRational> {
    core::det_vk_closed(n, k, &extract_rational(b)?)
        .map(Into::into)
        .map_err(to_py_err)
}

#[pyfunction]
fn verify_theorem(
    py: Python<'_>,
    a: &Bound<'_, PyAny>,
    b: &Bound<'_, PyAny>,
    n_max: usize,
) -> PyResult<PyVerificationReport> {
    let (a, b) = (extract_rational(a)?, extract_rational(b)?);
    Ok(py.detach(|| core::verify_theorem(&a, &b, n_max)).into())
}

#[pyfunction]
fn verify_stirling(py: Python<'_>, m_max: usize, n_max: usize) -> PyVerificationReport {
    py.detach(|| core::verify_stirling(m_max, n_max)).into()
}

#[pyfunction]
fn verify_cramer(
    py: Python<'_>,
    a: &Bound<'_, PyAny>,
    b: &Bound<'_, PyAny>,
    n: usize,
) -> PyResult<PyVerificationReport> {
    let (a, b) = (extract_rational(a)?, extract_rational(b)?);
    py.detach(|| core::verify_cramer(&a, &b, n))
        .map(Into::into)
        .map_err(to_py_err)
}

#[pymodule]
pub fn boole(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRational>()?;
    m.add_class::<PyCaseResult>()?;
    m.add_class::<PyVerificationReport>()?;
    m.add(
        "SingularMatrixError",
        m.py().get_type::<SingularMatrixError>(),
    )?;
    m.add_function(wrap_pyfunction!(factorial, m)?)?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(superfactorial, m)?)?;
    m.add_function(wrap_pyfunction!(boole_sum, m)?)?;
    m.add_function(wrap_pyfunction!(stirling2, m)?)?;
    m.add_function(wrap_pyfunction!(forward_difference_at_zero, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_solution, m)?)?;
    m.add_function(wrap_pyfunction!(generalized_sum, m)?)?;
    m.add_function(wrap_pyfunction!(expected_value, m)?)?;
    m.add_function(wrap_pyfunction!(build_system, m)?)?;
    m.add_function(wrap_pyfunction!(solve_exact, m)?)?;
    m.add_function(wrap_pyfunction!(solve_system, m)?)?;
    m.add_function(wrap_pyfunction!(det_bareiss, m)?)?;
    m.add_function(wrap_pyfunction!(det_vandermonde_general, m)?)?;
    m.add_function(wrap_pyfunction!(det_vandermonde_closed, m)?)?;
    m.add_function(wrap_pyfunction!(det_vk_closed, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(verify_stirling, m)?)?;
    m.add_function(wrap_pyfunction!(verify_cramer, m)?)?;
    Ok(())
}
