//! Python bindings for the deformed Hermite families.
//!
//! Exposes the polynomial tower as a `Poly` class (plain-text repr, LaTeX,
//! exact JSON) plus the family constructors, pairing integrals, moment
//! decompositions, and the grid verifier. All scalars cross the boundary
//! as `fractions.Fraction`, never floats, so Python sees the same exact
//! arithmetic the core computes with.

// the #[pymethods]/#[pyfunction] expansions trip this lint on pyo3 0.22
#![allow(clippy::useless_conversion)]

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::sync::GILOnceCell;
use pyo3::types::{PyDict, PyList};

use deformed_hermite::algebra::{rat_int, Alpha, Rational, SPoly};
use deformed_hermite::deform::{self, DeformParams};
use deformed_hermite::family;
use deformed_hermite::measure;
use deformed_hermite::render::zpoly_latex;
use deformed_hermite::serialize::{PolyJson, SquareJson};
use deformed_hermite::verify::{run_verification as core_verify, VerifyOptions};
use deformed_hermite::ZPoly;

static FRACTION_CLS: GILOnceCell<Py<PyAny>> = GILOnceCell::new();

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    let cls = FRACTION_CLS.get_or_try_init(py, || -> PyResult<Py<PyAny>> {
        Ok(py.import_bound("fractions")?.getattr("Fraction")?.unbind())
    })?;
    cls.bind(py).call1((r.numer().clone(), r.denom().clone()))
}

fn parse_alpha(alpha: i64) -> PyResult<Alpha> {
    Alpha::from_sign(alpha).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn core_err(e: deformed_hermite::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Polynomial in z with exact coefficients in Q[s].
#[pyclass(name = "Poly")]
#[derive(Clone)]
struct Poly {
    inner: ZPoly,
}

#[pymethods]
impl Poly {
    /// Degree in z; -1 for the zero polynomial.
    #[getter]
    fn degree(&self) -> isize {
        self.inner.degree()
    }

    /// True when no coefficient involves the level symbol.
    #[getter]
    fn is_numeric(&self) -> bool {
        self.inner.is_numeric()
    }

    /// Coefficients as a list (ascending z-power) of lists (ascending
    /// s-power) of Fractions.
    fn coeffs<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let outer = PyList::empty_bound(py);
        for c in self.inner.coeffs() {
            let inner = PyList::empty_bound(py);
            for v in c.coeffs() {
                inner.append(fraction(py, v)?)?;
            }
            outer.append(inner)?;
        }
        Ok(outer)
    }

    /// Substitute a numeric level for the symbol s.
    fn eval_s(&self, s: i64) -> Poly {
        Poly {
            inner: self.inner.eval_s(&rat_int(s)),
        }
    }

    /// LaTeX rendering, descending powers.
    fn latex(&self) -> String {
        zpoly_latex(&self.inner)
    }

    /// Exact JSON wire form.
    fn to_json(&self) -> String {
        serde_json::to_string(&PolyJson::from_zpoly(&self.inner)).expect("serializable")
    }

    /// Parse the exact JSON wire form.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Poly> {
        let doc: PolyJson =
            serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(Poly {
            inner: doc.to_zpoly().map_err(core_err)?,
        })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.inner)
    }

    fn __eq__(&self, other: &Poly) -> bool {
        self.inner == other.inner
    }

    fn __add__(&self, other: &Poly) -> Poly {
        Poly {
            inner: &self.inner + &other.inner,
        }
    }

    fn __sub__(&self, other: &Poly) -> Poly {
        Poly {
            inner: &self.inner - &other.inner,
        }
    }

    fn __mul__(&self, other: &Poly) -> Poly {
        Poly {
            inner: &self.inner * &other.inner,
        }
    }

    fn __neg__(&self) -> Poly {
        Poly {
            inner: -&self.inner,
        }
    }
}

/// Physicists' Hermite polynomial H_n.
#[pyfunction]
fn hermite(n: usize) -> Poly {
    Poly {
        inner: deform::hermite(n),
    }
}

/// Deformed polynomial M_n; s=None keeps the level symbolic.
#[pyfunction]
#[pyo3(signature = (n, alpha = 1, s = None))]
fn m_poly(n: usize, alpha: i64, s: Option<u32>) -> PyResult<Poly> {
    let alpha = parse_alpha(alpha)?;
    let params = match s {
        None => DeformParams::symbolic(n, alpha),
        Some(v) => DeformParams::numeric(n, alpha, v),
    };
    Ok(Poly {
        inner: deform::m_poly(&params),
    })
}

/// Apply the exponential deformation map at a numeric level; negative
/// levels invert the map.
#[pyfunction]
#[pyo3(signature = (p, s, alpha = 1))]
fn exp_deform(p: &Poly, s: i64, alpha: i64) -> PyResult<Poly> {
    let alpha = parse_alpha(alpha)?;
    Ok(Poly {
        inner: deform::exp_deform(&p.inner, &SPoly::constant(rat_int(s)), alpha),
    })
}

/// Orthogonal polynomial C_n at numeric level s.
#[pyfunction]
#[pyo3(signature = (n, s, alpha = 1))]
fn c_poly(n: usize, s: u32, alpha: i64) -> PyResult<Poly> {
    Ok(Poly {
        inner: family::c_poly(n, s, parse_alpha(alpha)?).map_err(core_err)?,
    })
}

/// Pre-image polynomial W_n: the C-coefficients applied to Hermite
/// polynomials.
#[pyfunction]
#[pyo3(signature = (n, s, alpha = 1))]
fn w_poly(n: usize, s: u32, alpha: i64) -> PyResult<Poly> {
    Ok(Poly {
        inner: family::w_poly(n, s, parse_alpha(alpha)?).map_err(core_err)?,
    })
}

/// Polynomial part of the signed weight at level s.
#[pyfunction]
#[pyo3(signature = (s, alpha = 1))]
fn measure_poly(s: u32, alpha: i64) -> PyResult<Poly> {
    Ok(Poly {
        inner: measure::measure_poly(s, parse_alpha(alpha)?).poly,
    })
}

/// Total charge of the weight; always Fraction(1).
#[pyfunction]
#[pyo3(signature = (s, alpha = 1))]
fn total_charge<'py>(py: Python<'py>, s: u32, alpha: i64) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &measure::total_charge(s, parse_alpha(alpha)?))
}

/// Pairing integral of M_n and M_m against the weight, by direct
/// Gaussian integration.
#[pyfunction]
#[pyo3(signature = (n, m, s, alpha = 1))]
fn inner_direct<'py>(
    py: Python<'py>,
    n: usize,
    m: usize,
    s: u32,
    alpha: i64,
) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &measure::inner_direct(n, m, s, parse_alpha(alpha)?))
}

/// The same pairing via the level-raising recursion.
#[pyfunction]
#[pyo3(signature = (n, m, s, alpha = 1))]
fn inner_recursive<'py>(
    py: Python<'py>,
    n: usize,
    m: usize,
    s: u32,
    alpha: i64,
) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &measure::inner_recursive(n, m, s, parse_alpha(alpha)?))
}

/// Full pairing table as a list of lists of Fractions.
#[pyfunction]
#[pyo3(signature = (n_max, s, alpha = 1))]
fn inner_table<'py>(
    py: Python<'py>,
    n_max: usize,
    s: u32,
    alpha: i64,
) -> PyResult<Bound<'py, PyList>> {
    let table = measure::inner_table(n_max, s, parse_alpha(alpha)?);
    let rows = PyList::empty_bound(py);
    for row in &table.entries {
        let cells = PyList::empty_bound(py);
        for v in row {
            cells.append(fraction(py, v)?)?;
        }
        rows.append(cells)?;
    }
    Ok(rows)
}

/// Integral of a single M_n against the weight: 1 at n = 0, else 0.
#[pyfunction]
#[pyo3(signature = (n, s, alpha = 1))]
fn partial_orthogonality<'py>(
    py: Python<'py>,
    n: usize,
    s: u32,
    alpha: i64,
) -> PyResult<Bound<'py, PyAny>> {
    fraction(
        py,
        &measure::partial_orthogonality(n, s, parse_alpha(alpha)?),
    )
}

/// Coefficients of z^n D_s = sum_p d_p D_p as {level: Fraction}.
#[pyfunction]
#[pyo3(signature = (n, s, alpha = 1))]
fn moment_decompose<'py>(
    py: Python<'py>,
    n: usize,
    s: u32,
    alpha: i64,
) -> PyResult<Bound<'py, PyDict>> {
    let d = measure::moment_decompose(n, s, parse_alpha(alpha)?);
    let dict = PyDict::new_bound(py);
    for (&p, c) in &d.coeffs {
        dict.set_item(p, fraction(py, c)?)?;
    }
    Ok(dict)
}

/// Leading principal Gram determinants [1, det_1, ..., det_n_max].
#[pyfunction]
#[pyo3(signature = (n_max, s, alpha = 1))]
fn gram_dets<'py>(
    py: Python<'py>,
    n_max: usize,
    s: u32,
    alpha: i64,
) -> PyResult<Bound<'py, PyList>> {
    let data = family::gram_matrix(n_max, s, parse_alpha(alpha)?);
    let out = PyList::empty_bound(py);
    for d in &data.dets {
        out.append(fraction(py, d)?)?;
    }
    Ok(out)
}

/// Check all edges of the commuting square at one point; returns the
/// report as a dict.
#[pyfunction]
#[pyo3(signature = (n, s, alpha = 1))]
fn verify_square<'py>(
    py: Python<'py>,
    n: usize,
    s: u32,
    alpha: i64,
) -> PyResult<Bound<'py, PyDict>> {
    let report = family::verify_square(n, s, parse_alpha(alpha)?).map_err(core_err)?;
    let doc = SquareJson::from_report(&report);
    let dict = PyDict::new_bound(py);
    dict.set_item("n", doc.n)?;
    dict.set_item("s", doc.s)?;
    dict.set_item("alpha", doc.alpha)?;
    dict.set_item("pass", doc.pass)?;
    let edges = PyList::empty_bound(py);
    for e in &doc.edges {
        let edge = PyDict::new_bound(py);
        edge.set_item("edge", &e.edge)?;
        edge.set_item("pass", e.pass)?;
        match &e.first_mismatch {
            None => edge.set_item("first_mismatch", py.None())?,
            Some(m) => {
                let mm = PyDict::new_bound(py);
                mm.set_item("z_power", m.z_power)?;
                mm.set_item("expected", &m.expected)?;
                mm.set_item("got", &m.got)?;
                edge.set_item("first_mismatch", mm)?;
            }
        }
        edges.append(edge)?;
    }
    dict.set_item("edges", edges)?;
    Ok(dict)
}

/// Run the verification grid over both signs; returns a summary dict
/// with per-check (suite, name, pass, points) tuples.
#[pyfunction]
#[pyo3(signature = (n_max = 8, s_max = 4, reference_tables = false))]
fn run_verification<'py>(
    py: Python<'py>,
    n_max: usize,
    s_max: u32,
    reference_tables: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let report = core_verify(&VerifyOptions {
        n_max,
        s_max,
        alphas: Alpha::BOTH.to_vec(),
        reference_tables,
    });
    let dict = PyDict::new_bound(py);
    dict.set_item("pass", report.all_pass())?;
    dict.set_item("points_total", report.points_total)?;
    dict.set_item("points_failed", report.points_failed)?;
    let checks = PyList::empty_bound(py);
    for c in &report.checks {
        checks.append((&c.suite, &c.name, c.pass, c.points))?;
    }
    dict.set_item("checks", checks)?;
    let singular = PyList::empty_bound(py);
    for p in &report.singular_points {
        singular.append((p.n, p.s, p.alpha))?;
    }
    dict.set_item("singular_points", singular)?;
    Ok(dict)
}

#[pymodule]
fn dhermite(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Poly>()?;
    m.add_function(wrap_pyfunction!(hermite, m)?)?;
    m.add_function(wrap_pyfunction!(m_poly, m)?)?;
    m.add_function(wrap_pyfunction!(exp_deform, m)?)?;
    m.add_function(wrap_pyfunction!(c_poly, m)?)?;
    m.add_function(wrap_pyfunction!(w_poly, m)?)?;
    m.add_function(wrap_pyfunction!(measure_poly, m)?)?;
    m.add_function(wrap_pyfunction!(total_charge, m)?)?;
    m.add_function(wrap_pyfunction!(inner_direct, m)?)?;
    m.add_function(wrap_pyfunction!(inner_recursive, m)?)?;
    m.add_function(wrap_pyfunction!(inner_table, m)?)?;
    m.add_function(wrap_pyfunction!(partial_orthogonality, m)?)?;
    m.add_function(wrap_pyfunction!(moment_decompose, m)?)?;
    m.add_function(wrap_pyfunction!(gram_dets, m)?)?;
    m.add_function(wrap_pyfunction!(verify_square, m)?)?;
    m.add_function(wrap_pyfunction!(run_verification, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
