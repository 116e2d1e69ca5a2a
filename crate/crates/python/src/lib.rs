//! Python bindings. Rationals cross the boundary as `fractions.Fraction`;
//! inputs may be `Fraction`, `int` or a `"p/q"` string.

use holanom::anomaly::{self, AnomalyReport};
use holanom::charclasses::{self, Atom, FieldContent, GaugeRep, Geom, Parity};
use holanom::cli::{self, ReportDocument, ReportValue};
use holanom::duality::SqcdSpec;
use holanom::exactring::{format_rational, parse_rational, GeneratorSet, GradedPoly, Rational};
use holanom::Error;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

create_exception!(holanom, HolanomError, PyException, "Any error raised by the library.");
create_exception!(holanom, ParseError, HolanomError, "A malformed theory file or rational.");

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Parse { .. } => ParseError::new_err(e.to_string()),
        _ => HolanomError::new_err(e.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((format_rational(q),))
}

fn optional_fraction<'py>(py: Python<'py>, q: &Option<Rational>) -> PyResult<Option<Bound<'py, PyAny>>> {
    q.as_ref().map(|q| fraction(py, q)).transpose()
}

/// Accepts anything whose `str()` is an exact rational.
fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let text = obj.str()?;
    parse_rational(text.to_str()?).map_err(to_py_err)
}

fn value<'py>(py: Python<'py>, v: &ReportValue) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        ReportValue::Rational(q) => fraction(py, q)?,
        ReportValue::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        ReportValue::Int(i) => i.into_pyobject(py)?.into_any(),
        ReportValue::Text(s) => s.into_pyobject(py)?.into_any(),
    })
}

fn document<'py>(py: Python<'py>, doc: &ReportDocument) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    for (k, v) in doc.records() {
        dict.set_item(k, value(py, v)?)?;
    }
    Ok(dict)
}

/// An exact graded polynomial in characteristic classes.
#[pyclass(name = "Poly", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyPoly(GradedPoly);

#[pymethods]
impl PyPoly {
    /// Coefficient of a monomial such as `"g1*g2"` or `"g1^3"`.
    fn coefficient<'py>(&self, py: Python<'py>, monomial: &str) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.coefficient_of(monomial).map_err(to_py_err)?)
    }

    fn component(&self, degree: u32) -> Self {
        PyPoly(self.0.component(degree))
    }

    /// `{monomial: Fraction}` for every non-zero term.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let dict = PyDict::new(py);
        let ctx = self.0.context();
        for (m, c) in self.0.terms() {
            dict.set_item(ctx.format_monomial(m), fraction(py, c)?)?;
        }
        Ok(dict)
    }

    fn generators(&self) -> Vec<String> {
        self.0.context().generators().iter().map(|g| g.name.clone()).collect()
    }

    #[getter]
    fn degree(&self) -> Option<u32> {
        self.0.degree()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_add(&other.0).map(PyPoly).map_err(to_py_err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_sub(&other.0).map(PyPoly).map_err(to_py_err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_mul(&other.0).map(PyPoly).map_err(to_py_err)
    }

    fn __neg__(&self) -> Self {
        PyPoly(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly({})", self.0)
    }
}

/// A theory parsed from the line-oriented theory-file format.
#[pyclass(name = "Theory", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyTheory(holanom::theory::Theory);

#[pymethods]
impl PyTheory {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        cli::parse_theory_file(text).map(PyTheory).map_err(to_py_err)
    }

    #[staticmethod]
    fn from_file(path: std::path::PathBuf) -> PyResult<Self> {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| HolanomError::new_err(format!("cannot read {}: {e}", path.display())))?;
        Self::new(&text)
    }

    #[getter]
    fn dimension(&self) -> u32 {
        self.0.n
    }

    #[getter]
    fn multiplet_count(&self) -> usize {
        self.0.multiplets.len()
    }

    /// Canonical theory-file text.
    fn render(&self) -> PyResult<String> {
        cli::render_theory_file(&self.0).map_err(to_py_err)
    }

    fn anomaly(&self) -> PyResult<PyAnomalyReport> {
        anomaly::theory_report(&self.0).map(PyAnomalyReport).map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!("Theory(dimension={}, multiplets={})", self.0.n, self.0.multiplets.len())
    }
}

/// The classified anomaly of a theory or of bare field content.
#[pyclass(name = "AnomalyReport", frozen)]
pub struct PyAnomalyReport(AnomalyReport);

#[pymethods]
impl PyAnomalyReport {
    #[getter]
    fn dimension(&self) -> u32 {
        self.0.n
    }

    #[getter]
    fn a_hol<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        optional_fraction(py, &self.0.a_hol)
    }

    #[getter]
    fn c_hol<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        optional_fraction(py, &self.0.c_hol)
    }

    #[getter]
    fn a<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        optional_fraction(py, &self.0.physical_ac().map(|(a, _)| a))
    }

    #[getter]
    fn c<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        optional_fraction(py, &self.0.physical_ac().map(|(_, c)| c))
    }

    #[getter]
    fn virasoro_c<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        optional_fraction(py, &self.0.virasoro_c)
    }

    #[getter]
    fn polynomial(&self) -> PyPoly {
        PyPoly(self.0.full.clone())
    }

    #[getter]
    fn pure_gauge(&self) -> PyPoly {
        PyPoly(self.0.pure_gauge.clone())
    }

    #[getter]
    fn mixed(&self) -> PyPoly {
        PyPoly(self.0.mixed.clone())
    }

    #[getter]
    fn gravitational(&self) -> PyPoly {
        PyPoly(self.0.gravitational.clone())
    }

    #[getter]
    fn gauge_free(&self) -> bool {
        anomaly::gauge_obstruction(&self.0).is_free
    }

    #[getter]
    fn t_free(&self) -> bool {
        anomaly::t_background_obstruction(&self.0).obstruction.is_free
    }

    /// The records printed by `holanom compute`, in order.
    fn records<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        document(py, &cli::report_document(&self.0).map_err(to_py_err)?)
    }

    fn __repr__(&self) -> String {
        format!("AnomalyReport(dimension={}, anomaly={})", self.0.n, self.0.full)
    }
}

/// Todd class of a rank-`n` tangent bundle up to degree `2n + 2`.
#[pyfunction]
fn todd(n: u32) -> PyResult<PyPoly> {
    let ctx = GeneratorSet::gravitational(n);
    charclasses::todd(n, &ctx).map(PyPoly).map_err(to_py_err)
}

/// Anomaly of a single line bundle `K^k` on a complex `n`-fold.
#[pyfunction]
#[pyo3(signature = (n, k, odd = false))]
fn line_anomaly(n: u32, k: &Bound<'_, PyAny>, odd: bool) -> PyResult<PyAnomalyReport> {
    let parity = if odd { Parity::Odd } else { Parity::Even };
    let content = FieldContent::single(n, 1, Atom::new(Geom::kpow(rational(k)?), GaugeRep::trivial(1), parity));
    anomaly::content_report(&content).map(PyAnomalyReport).map_err(to_py_err)
}

#[pyfunction]
fn table<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
    let rows = anomaly::table_rows().map_err(to_py_err)?;
    let list = PyList::empty(py);
    for row in rows {
        let d = PyDict::new(py);
        d.set_item("key", row.key)?;
        d.set_item("label", row.label)?;
        d.set_item("a", fraction(py, &row.a)?)?;
        d.set_item("c", fraction(py, &row.c)?)?;
        d.set_item("a_hol", fraction(py, &row.a_hol)?)?;
        d.set_item("c_hol", fraction(py, &row.c_hol)?)?;
        list.append(d)?;
    }
    Ok(list)
}

#[pyfunction]
fn qcd<'py>(py: Python<'py>, colors: u32, flavors: u32) -> PyResult<Bound<'py, PyDict>> {
    let spec = SqcdSpec::new(colors, flavors).map_err(to_py_err)?;
    document(py, &cli::qcd(&spec).map_err(to_py_err)?)
}

#[pyfunction]
fn seiberg<'py>(py: Python<'py>, colors: u32, flavors: u32) -> PyResult<Bound<'py, PyDict>> {
    let spec = SqcdSpec::new(colors, flavors).map_err(to_py_err)?;
    document(py, &cli::seiberg(&spec).map_err(to_py_err)?)
}

#[pyfunction]
#[pyo3(signature = (theory, target = "all-mixed"))]
fn solve_r<'py>(py: Python<'py>, theory: &PyTheory, target: &str) -> PyResult<Bound<'py, PyDict>> {
    let target = target.parse().map_err(to_py_err)?;
    document(py, &cli::solve(&theory.0, &target).map_err(to_py_err)?)
}

#[pyfunction]
fn compactify<'py>(py: Python<'py>, theory: &PyTheory, fiber_chi: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyDict>> {
    let chi = rational(fiber_chi)?;
    document(py, &cli::compactify(&theory.0, &chi).map_err(to_py_err)?)
}

/// `(a_hol, c_hol)` from the physical `(a, c)`.
#[pyfunction]
fn holomorphic_ac<'py>(py: Python<'py>, a: &Bound<'py, PyAny>, c: &Bound<'py, PyAny>) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>)> {
    let (x, y) = anomaly::holomorphic_ac(&rational(a)?, &rational(c)?);
    Ok((fraction(py, &x)?, fraction(py, &y)?))
}

/// `(a, c)` from the holomorphic `(a_hol, c_hol)`.
#[pyfunction]
fn physical_ac<'py>(py: Python<'py>, a_hol: &Bound<'py, PyAny>, c_hol: &Bound<'py, PyAny>) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>)> {
    let (x, y) = anomaly::physical_ac(&rational(a_hol)?, &rational(c_hol)?);
    Ok((fraction(py, &x)?, fraction(py, &y)?))
}

#[pyfunction]
fn render_local_cocycle(a_hol: &Bound<'_, PyAny>, c_hol: &Bound<'_, PyAny>) -> PyResult<String> {
    Ok(anomaly::render_local_cocycle(&rational(a_hol)?, &rational(c_hol)?))
}

/// Runs the command line with `args` (without the program name) and
/// returns `(stdout, stderr, exit_code)`.
#[pyfunction]
fn run(args: Vec<String>) -> (String, String, i32) {
    let out = cli::run(std::iter::once("holanom".to_string()).chain(args));
    (out.stdout, out.stderr, out.code)
}

#[pymodule]
#[pyo3(name = "holanom")]
fn holanom_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("HolanomError", py.get_type::<HolanomError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add_class::<PyPoly>()?;
    m.add_class::<PyTheory>()?;
    m.add_class::<PyAnomalyReport>()?;
    m.add_function(wrap_pyfunction!(todd, m)?)?;
    m.add_function(wrap_pyfunction!(line_anomaly, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(qcd, m)?)?;
    m.add_function(wrap_pyfunction!(seiberg, m)?)?;
    m.add_function(wrap_pyfunction!(solve_r, m)?)?;
    m.add_function(wrap_pyfunction!(compactify, m)?)?;
    m.add_function(wrap_pyfunction!(holomorphic_ac, m)?)?;
    m.add_function(wrap_pyfunction!(physical_ac, m)?)?;
    m.add_function(wrap_pyfunction!(render_local_cocycle, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    Ok(())
}
