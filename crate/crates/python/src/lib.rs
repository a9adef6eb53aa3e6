//! Python bindings. Polynomials cross the boundary as `[(exponent, coefficient)]`
//! lists, reports as plain dicts.

use knotforge::annulus::{self, AnnulusFile, AnnulusPresentation};
use knotforge::diagram::PlanarDiagram;
use knotforge::invariants;
use knotforge::laurent::{self, LaurentPoly};
use knotforge::obstruction::{self, DichotomyOptions, Distinctness, FiberedSource, KnotCertificate};
use knotforge::openbook::{self, SurgeryDescription};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn terms(p: &LaurentPoly) -> Vec<(i64, BigInt)> {
    p.terms().map(|(e, c)| (e, c.clone())).collect()
}

fn poly(terms: Vec<(i64, i64)>) -> LaurentPoly {
    LaurentPoly::from_terms(terms)
}

/// serde value -> Python object through the json module.
fn to_py<'py, T: Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let s = serde_json::to_string(v).map_err(err)?;
    py.import("json")?.call_method1("loads", (s,))
}

#[pyclass(name = "Diagram", module = "knotforge_py", frozen)]
struct PyDiagram {
    inner: PlanarDiagram,
}

#[pymethods]
impl PyDiagram {
    /// Parses `X(a,b,c,d) ...` or `PD[X[...], ...]`.
    #[new]
    fn new(pd: &str) -> PyResult<Self> {
        Ok(Self { inner: PlanarDiagram::parse(pd).map_err(err)? })
    }

    #[staticmethod]
    fn from_tuples(tuples: Vec<[u32; 4]>) -> PyResult<Self> {
        Ok(Self { inner: PlanarDiagram::from_tuples(&tuples).map_err(err)? })
    }

    #[staticmethod]
    fn unknot() -> Self {
        Self { inner: PlanarDiagram::unknot() }
    }

    fn tuples(&self) -> Vec<[u32; 4]> {
        self.inner.to_tuples()
    }

    #[getter]
    fn crossing_count(&self) -> usize {
        self.inner.crossing_count()
    }

    #[getter]
    fn writhe(&self) -> i64 {
        self.inner.writhe()
    }

    fn mirror(&self) -> Self {
        Self { inner: self.inner.mirror() }
    }

    fn simplify(&self) -> Self {
        Self { inner: self.inner.simplify() }
    }

    /// Jones polynomial in `t`.
    fn jones(&self) -> Vec<(i64, BigInt)> {
        let j = invariants::jones(&self.inner);
        terms(&j.in_t().expect("knot Jones polynomial is integral in t"))
    }

    /// Alexander polynomial in unit normal form.
    fn alexander(&self) -> Vec<(i64, BigInt)> {
        terms(invariants::alexander(&self.inner).poly())
    }

    fn determinant(&self) -> BigInt {
        invariants::determinant(&self.inner)
    }

    fn jones_str(&self) -> String {
        invariants::jones(&self.inner).to_string()
    }

    fn alexander_str(&self) -> String {
        invariants::alexander(&self.inner).to_string()
    }

    fn __len__(&self) -> usize {
        self.inner.crossing_count()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        let body: Vec<String> = self.inner.to_tuples().iter().map(|t| format!("X({},{},{},{})", t[0], t[1], t[2], t[3])).collect();
        format!("Diagram('{}')", body.join(" "))
    }
}

#[pyclass(name = "Certificate", module = "knotforge_py", frozen)]
struct PyCertificate {
    inner: KnotCertificate,
}

fn fibered_source(s: &str) -> PyResult<FiberedSource> {
    match s {
        "asserted" => Ok(FiberedSource::Asserted),
        "inherited-via-0-surgery" => Ok(FiberedSource::InheritedVia0Surgery),
        _ => Err(PyValueError::new_err(format!("unknown fibered source '{s}'"))),
    }
}

#[pymethods]
impl PyCertificate {
    /// `distinct`: "jones-mismatch", or `(n, m)` for a d3 mismatch of the
    /// family open books.
    #[new]
    #[pyo3(signature = (name, diagram, fibered=None, jones=true, distinct=None))]
    fn new(
        name: &str,
        diagram: &PyDiagram,
        fibered: Option<&str>,
        jones: bool,
        distinct: Option<&Bound<'_, PyAny>>,
    ) -> PyResult<Self> {
        let mut c = KnotCertificate::from_diagram(name, &diagram.inner, jones);
        if let Some(f) = fibered {
            c = c.with_fibered(fibered_source(f)?);
        }
        if let Some(d) = distinct {
            let e = if let Ok((n, m)) = d.extract::<(i64, i64)>() {
                Distinctness::D3Mismatch { n, m }
            } else if d.extract::<String>().is_ok_and(|s| s == "jones-mismatch") {
                Distinctness::JonesMismatch
            } else {
                return Err(PyValueError::new_err("distinct must be 'jones-mismatch' or (n, m)"));
            };
            c = c.with_distinctness(e);
        }
        Ok(Self { inner: c })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn alexander_irreducible(&self) -> bool {
        self.inner.alexander_irreducible
    }

    fn digest(&self) -> String {
        self.inner.digest()
    }

    fn composite(&self, other: &Self) -> Self {
        Self { inner: KnotCertificate::composite(&self.inner, &other.inner) }
    }

    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Certificate({:?}, sha256:{})", self.inner.name, &self.inner.digest()[..16])
    }
}

#[pyfunction]
fn family_63(n: i64) -> PyResult<PyDiagram> {
    Ok(PyDiagram { inner: annulus::family_63(n).map_err(err)? })
}

/// Twists an annulus presentation given as the JSON of an annulus file.
#[pyfunction]
fn annulus_twist(annulus_json: &str, n: i64) -> PyResult<PyDiagram> {
    let f: AnnulusFile = serde_json::from_str(annulus_json).map_err(err)?;
    let ap = AnnulusPresentation::from_file(&f).map_err(err)?;
    Ok(PyDiagram { inner: annulus::annulus_twist(&ap, n).map_err(err)? })
}

#[pyfunction]
fn is_irreducible(terms: Vec<(i64, i64)>) -> PyResult<bool> {
    laurent::is_irreducible(&poly(terms)).map_err(err)
}

/// A Fox-Milnor witness `f` with `f(t)f(t^-1)` associate to the input.
#[pyfunction]
fn fox_milnor(terms_in: Vec<(i64, i64)>) -> Option<Vec<(i64, BigInt)>> {
    laurent::fox_milnor(&poly(terms_in)).map(|f| terms(f.poly()))
}

/// d3 of the family open book `f_n` as `"p/q"`.
#[pyfunction]
fn d3_family(n: i64) -> PyResult<String> {
    let desc = openbook::family_surgery_description(n).map_err(err)?;
    Ok(openbook::d3(&desc).map_err(err)?.to_string())
}

/// d3 of a surgery file's JSON.
#[pyfunction]
fn d3(surgery_json: &str) -> PyResult<String> {
    let desc: SurgeryDescription = serde_json::from_str(surgery_json).map_err(err)?;
    Ok(openbook::d3(&desc).map_err(err)?.to_string())
}

#[pyfunction]
fn same_fibered_knot(n: i64, m: i64) -> bool {
    openbook::same_fibered_knot(n, m)
}

#[pyfunction]
fn monodromy_alexander(n: i64) -> PyResult<Vec<(i64, BigInt)>> {
    let book = openbook::family_open_book(&openbook::word_for_an(n));
    Ok(terms(book.alexander().map_err(err)?.poly()))
}

#[pyfunction]
fn fox_milnor_verdict<'py>(py: Python<'py>, c: &PyCertificate) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &obstruction::fox_milnor_verdict(&c.inner))
}

#[pyfunction]
fn miyazaki_verdict<'py>(py: Python<'py>, c0: &PyCertificate, c1: &PyCertificate) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &obstruction::miyazaki_verdict(&c0.inner, &c1.inner))
}

#[pyfunction]
#[pyo3(signature = (n, m, jones_crossing_limit=None))]
fn dichotomy<'py>(py: Python<'py>, n: i64, m: i64, jones_crossing_limit: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let mut opts = DichotomyOptions::default();
    if let Some(l) = jones_crossing_limit {
        opts.jones_crossing_limit = l;
    }
    let r = py.detach(|| obstruction::dichotomy_report_with(n, m, opts)).map_err(err)?;
    to_py(py, &r)
}

#[pymodule]
fn knotforge_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", knotforge::VERSION)?;
    m.add("PD_63", annulus::PD_63)?;
    m.add_class::<PyDiagram>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(family_63, m)?)?;
    m.add_function(wrap_pyfunction!(annulus_twist, m)?)?;
    m.add_function(wrap_pyfunction!(is_irreducible, m)?)?;
    m.add_function(wrap_pyfunction!(fox_milnor, m)?)?;
    m.add_function(wrap_pyfunction!(d3_family, m)?)?;
    m.add_function(wrap_pyfunction!(d3, m)?)?;
    m.add_function(wrap_pyfunction!(same_fibered_knot, m)?)?;
    m.add_function(wrap_pyfunction!(monodromy_alexander, m)?)?;
    m.add_function(wrap_pyfunction!(fox_milnor_verdict, m)?)?;
    m.add_function(wrap_pyfunction!(miyazaki_verdict, m)?)?;
    m.add_function(wrap_pyfunction!(dichotomy, m)?)?;
    Ok(())
}
