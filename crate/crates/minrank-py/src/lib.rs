//! Python bindings for the minrank library.
//!
//! Exposes root-datum level helpers as module functions and the symmetric
//! spaces as a `Space` class that caches its Weyl group tables.  Weights are
//! plain lists of integers in simple-root coordinates; words are 1-based
//! lists of simple indices, matching the CLI and the JSON schemas.

use std::ffi::CString;
use std::sync::OnceLock;

use num::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use minrank::folding::build_space;
use minrank::orbits::{enumerate_orbits_with, generic_position_schubert, OrbitRecord};
use minrank::rootdata::{build_datum, RootDatum, Weight};
use minrank::weyl::{enumerate, WeylElement, WeylGroup, DEFAULT_MAX_GROUP};
use minrank::Report;

fn err(e: minrank::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Arbitrary-precision values come back as genuine Python ints.
fn biguint_to_py(py: Python<'_>, v: &BigUint) -> PyResult<Py<PyAny>> {
    if let Ok(small) = u128::try_from(v) {
        return Ok(small.into_pyobject(py)?.into_any().unbind());
    }
    let literal = CString::new(v.to_string()).expect("decimal digits");
    Ok(py.eval(&literal, None, None)?.unbind())
}

fn parse_weight(datum: &RootDatum, coords: Vec<i64>, what: &str) -> PyResult<Weight> {
    if coords.len() != datum.rank() {
        return Err(PyValueError::new_err(format!(
            "{what} has {} coordinates but the rank is {}",
            coords.len(),
            datum.rank()
        )));
    }
    Ok(Weight::new(coords))
}

fn parse_word(datum: &RootDatum, word: Vec<usize>, what: &str) -> PyResult<Vec<usize>> {
    for &i in &word {
        if i == 0 || i > datum.rank() {
            return Err(PyValueError::new_err(format!(
                "{what}: index {i} out of range 1..={}",
                datum.rank()
            )));
        }
    }
    Ok(word.into_iter().map(|i| i - 1).collect())
}

fn polynomial_terms(p: &minrank::WeightPolynomial) -> Vec<(Vec<i64>, i64)> {
    p.terms().map(|(w, c)| (w.coords.clone(), c)).collect()
}

fn report_to_py<'py>(py: Python<'py>, report: &Report) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    out.set_item("pass", report.all_pass())?;
    let claims = PyList::empty(py);
    for c in &report.claims {
        let d = PyDict::new(py);
        d.set_item("id", &c.id)?;
        d.set_item("pass", c.pass)?;
        d.set_item("detail", &c.detail)?;
        claims.append(d)?;
    }
    out.set_item("claims", claims)?;
    Ok(out)
}

/// The supported symmetric space specs.
#[pyfunction]
fn catalog() -> Vec<&'static str> {
    minrank::catalog()
}

/// Cartan data of a named finite type: rank, Cartan matrix and positive
/// roots in simple-root coordinates.
#[pyfunction]
fn datum_info<'py>(py: Python<'py>, type_label: &str) -> PyResult<Bound<'py, PyDict>> {
    let d = build_datum(type_label).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("type", d.type_label())?;
    out.set_item("rank", d.rank())?;
    out.set_item("cartan", d.cartan().row_vecs())?;
    out.set_item(
        "positive_roots",
        d.positive_roots()
            .iter()
            .map(|r| r.coords.clone())
            .collect::<Vec<_>>(),
    )?;
    Ok(out)
}

/// Dimension of the irreducible with the given dominant highest weight.
#[pyfunction]
fn weyl_dim(py: Python<'_>, type_label: &str, lambda: Vec<i64>) -> PyResult<Py<PyAny>> {
    let d = build_datum(type_label).map_err(err)?;
    let lam = parse_weight(&d, lambda, "lambda")?;
    biguint_to_py(py, &minrank::rootdata::weyl_dim(&d, &lam).map_err(err)?)
}

/// Weyl character as a list of (weight, coefficient) pairs in a fixed
/// deterministic order.
#[pyfunction]
fn weyl_character(type_label: &str, lambda: Vec<i64>) -> PyResult<Vec<(Vec<i64>, i64)>> {
    let d = build_datum(type_label).map_err(err)?;
    let lam = parse_weight(&d, lambda, "lambda")?;
    Ok(polynomial_terms(
        &minrank::weyl_character(&d, &lam).map_err(err)?,
    ))
}

/// Demazure operator of a word (1-based indices) applied to a monomial.
#[pyfunction]
fn demazure(
    type_label: &str,
    word: Vec<usize>,
    lambda: Vec<i64>,
) -> PyResult<Vec<(Vec<i64>, i64)>> {
    let d = build_datum(type_label).map_err(err)?;
    let word = parse_word(&d, word, "word")?;
    let lam = parse_weight(&d, lambda, "lambda")?;
    let f = minrank::WeightPolynomial::monomial(lam, 1);
    Ok(polynomial_terms(&minrank::demazure_word(&d, &f, &word)))
}

/// Brute-force generic position of the Schubert varieties of two words.
#[pyfunction]
fn generic_position<'py>(
    py: Python<'py>,
    type_label: &str,
    y_word: Vec<usize>,
    z_word: Vec<usize>,
) -> PyResult<Bound<'py, PyDict>> {
    let d = build_datum(type_label).map_err(err)?;
    let y = WeylElement::from_word(&d, &parse_word(&d, y_word, "y_word")?);
    let z = WeylElement::from_word(&d, &parse_word(&d, z_word, "z_word")?);
    let gp = generic_position_schubert(&d, &y, &z, minrank::orbits::DEFAULT_MAX_BRUTE_FORCE)
        .map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("w_max", gp.w_max.word_1based())?;
    out.set_item("is_lower_interval", gp.is_lower_interval)?;
    out.set_item("meet_set_size", gp.meet_set_size)?;
    Ok(out)
}

/// A symmetric space of minimal rank, with cached Weyl group tables.
#[pyclass]
struct Space {
    inner: minrank::Space,
    max_group: usize,
    tables: OnceLock<(WeylGroup, Vec<OrbitRecord>)>,
}

impl Space {
    fn tables(&self) -> PyResult<&(WeylGroup, Vec<OrbitRecord>)> {
        if self.tables.get().is_none() {
            let group = enumerate(self.inner.datum(), self.max_group).map_err(err)?;
            let orbits = enumerate_orbits_with(self.inner.datum(), &group, self.inner.theta())
                .map_err(err)?;
            let _ = self.tables.set((group, orbits));
        }
        Ok(self.tables.get().expect("just initialised"))
    }
}

#[pymethods]
impl Space {
    #[new]
    #[pyo3(signature = (spec, max_group=None))]
    fn new(spec: &str, max_group: Option<usize>) -> PyResult<Self> {
        let inner = build_space(spec).map_err(err)?;
        Ok(Space {
            inner,
            max_group: max_group.unwrap_or(DEFAULT_MAX_GROUP),
            tables: OnceLock::new(),
        })
    }

    fn spec(&self) -> &str {
        self.inner.spec()
    }

    fn type_g(&self) -> &str {
        self.inner.datum().type_label()
    }

    fn type_k(&self) -> &str {
        self.inner.folded().datum_k().type_label()
    }

    fn rank_g(&self) -> usize {
        self.inner.datum().rank()
    }

    fn rank_k(&self) -> usize {
        self.inner.folded().rank_k()
    }

    /// (r, s): boundary divisor count and the rank of the fixed subgroup.
    fn rank_split(&self) -> (usize, usize) {
        let rk = minrank::folding::rank_bookkeeping(self.inner.datum(), self.inner.theta());
        (rk.r, rk.s)
    }

    fn weyl_order(&self) -> PyResult<usize> {
        Ok(self.tables()?.0.len())
    }

    fn orbit_count(&self) -> PyResult<usize> {
        Ok(self.tables()?.1.len())
    }

    /// Grothendieck-group indices: orbit_count, k_dim, free_rank, r, s,
    /// proper.
    fn indices<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let (group, _) = self.tables()?;
        let r =
            minrank::indices_with(self.inner.datum(), group, self.inner.theta()).map_err(err)?;
        let out = PyDict::new(py);
        out.set_item("orbit_count", r.orbit_count)?;
        out.set_item("k_dim", r.k_dim)?;
        out.set_item("free_rank", r.free_rank)?;
        out.set_item("r", r.r)?;
        out.set_item("s", r.s)?;
        out.set_item("proper", r.proper)?;
        Ok(out)
    }

    /// The B-orbits: coset_id, h, canonical_word, x_word (1-based) and size.
    fn orbits<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let (_, orbits) = self.tables()?;
        let out = PyList::empty(py);
        for rec in orbits {
            let d = PyDict::new(py);
            d.set_item("coset_id", rec.coset_id)?;
            d.set_item("h", rec.h)?;
            d.set_item("canonical_word", rec.canonical_word_1based())?;
            d.set_item("x_word", rec.x.word_1based())?;
            d.set_item("size", rec.size())?;
            out.append(d)?;
        }
        Ok(out)
    }

    /// Branch the irreducible of G with the given highest weight over K.
    fn branch<'py>(&self, py: Python<'py>, lambda: Vec<i64>) -> PyResult<Bound<'py, PyDict>> {
        let lam = parse_weight(self.inner.datum(), lambda, "lambda")?;
        let b = minrank::branch(self.inner.datum(), &lam, self.inner.folded()).map_err(err)?;
        let out = PyDict::new(py);
        out.set_item("lambda", b.lambda.coords.clone())?;
        out.set_item("head", b.head.coords.clone())?;
        out.set_item("rank", biguint_to_py(py, &b.rank)?)?;
        let parts = PyList::empty(py);
        for c in &b.constituents {
            let d = PyDict::new(py);
            d.set_item("mu", c.mu.coords.clone())?;
            d.set_item("mult", c.mult)?;
            d.set_item("dim", biguint_to_py(py, &c.dim)?)?;
            parts.append(d)?;
        }
        out.set_item("constituents", parts)?;
        Ok(out)
    }

    /// Extend a dominant weight of K to a dominant weight of G.
    fn extend(&self, mu: Vec<i64>) -> PyResult<Vec<i64>> {
        let mu = parse_weight(self.inner.folded().datum_k(), mu, "mu")?;
        let lam =
            minrank::extend_weight(&mu, self.inner.folded(), self.inner.datum()).map_err(err)?;
        Ok(lam.coords)
    }

    /// Restrict a weight of G to the folded lattice of K.
    fn restrict(&self, lambda: Vec<i64>) -> PyResult<Vec<i64>> {
        let lam = parse_weight(self.inner.datum(), lambda, "lambda")?;
        Ok(self.inner.folded().res(&lam).coords)
    }

    /// Rank of the extended equivariant bundle at a dominant weight of G.
    fn bundle_rank(&self, py: Python<'_>, lambda: Vec<i64>) -> PyResult<Py<PyAny>> {
        let lam = parse_weight(self.inner.datum(), lambda, "lambda")?;
        let rank =
            minrank::bundle_rank(self.inner.datum(), &lam, self.inner.folded()).map_err(err)?;
        biguint_to_py(py, &rank)
    }

    /// Run the invariant suite; returns {"pass": bool, "claims": [...]}.
    #[pyo3(signature = (deep=false))]
    fn verify<'py>(&self, py: Python<'py>, deep: bool) -> PyResult<Bound<'py, PyDict>> {
        let (group, orbits) = self.tables()?;
        let report =
            minrank::space_report(&self.inner, group, orbits, self.max_group, deep).map_err(err)?;
        report_to_py(py, &report)
    }

    fn __repr__(&self) -> String {
        format!(
            "Space('{}', G={}, K={})",
            self.inner.spec(),
            self.type_g(),
            self.type_k()
        )
    }
}

#[pymodule]
fn minrank_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Space>()?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(datum_info, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_dim, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_character, m)?)?;
    m.add_function(wrap_pyfunction!(demazure, m)?)?;
    m.add_function(wrap_pyfunction!(generic_position, m)?)?;
    Ok(())
}
