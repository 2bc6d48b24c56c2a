//! Python bindings: blades, multivectors, symbol tables, both codecs, the
//! worked-example check and the kernel benchmark.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use ga_bsc::bench::{self, BenchConfig};
use ga_bsc::cartan;
use ga_bsc::codec::{self, EncodedRecord};
use ga_bsc::{format, verify, BladeIndex, Multivector, SignedBlade, SymbolTable};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(
    gabsc,
    GaBscError,
    PyValueError,
    "Raised for invalid algebra or codec input."
);

fn err(e: ga_bsc::Error) -> PyErr {
    GaBscError::new_err(e.to_string())
}

trait OrRaise<T> {
    fn or_raise(self) -> PyResult<T>;
}

impl<T> OrRaise<T> for ga_bsc::Result<T> {
    fn or_raise(self) -> PyResult<T> {
        self.map_err(err)
    }
}

/// A basis blade `e_A`, given by its bit string.
#[pyclass(name = "Blade", module = "gabsc", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyBlade(BladeIndex);

#[pymethods]
impl PyBlade {
    /// `Blade("1100")`, or `Blade("c", n=4)` for hex.
    #[new]
    #[pyo3(signature = (literal, n=None))]
    fn new(literal: &str, n: Option<usize>) -> PyResult<Self> {
        match n {
            Some(n) => BladeIndex::from_literal(literal, n),
            None => BladeIndex::from_bit_string(literal),
        }
        .map(Self)
        .or_raise()
    }

    #[staticmethod]
    fn zero(n: usize) -> PyResult<Self> {
        BladeIndex::zero(n).map(Self).or_raise()
    }

    #[staticmethod]
    fn generator(n: usize, position: usize) -> PyResult<Self> {
        BladeIndex::generator(n, position).map(Self).or_raise()
    }

    #[staticmethod]
    #[pyo3(signature = (n, seed, bits=None))]
    fn random(n: usize, seed: u64, bits: Option<usize>) -> PyResult<Self> {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        BladeIndex::random_prefix(n, bits.unwrap_or(n), &mut rng)
            .map(Self)
            .or_raise()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn grade(&self) -> usize {
        self.0.grade()
    }

    fn positions(&self) -> Vec<usize> {
        self.0.ones().collect()
    }

    fn to_literal(&self) -> String {
        self.0.to_literal()
    }

    fn to_bit_string(&self) -> String {
        self.0.to_bit_string()
    }

    fn to_hex(&self) -> String {
        self.0.to_hex()
    }

    /// Geometric product as `(sign, blade)`.
    fn __mul__(&self, other: &Self) -> PyResult<(i8, Self)> {
        geometric_product(self, other)
    }

    fn __str__(&self) -> String {
        self.0.to_literal()
    }

    fn __repr__(&self) -> String {
        format!("Blade('{}')", self.0.to_literal())
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }
}

#[pyfunction]
fn product_sign(a: &PyBlade, b: &PyBlade) -> PyResult<i8> {
    ga_bsc::product_sign(&a.0, &b.0).or_raise()
}

#[pyfunction]
fn product_sign_reference(a: &PyBlade, b: &PyBlade) -> PyResult<i8> {
    ga_bsc::product_sign_reference(&a.0, &b.0).or_raise()
}

fn signed_parts(s: SignedBlade) -> (i8, PyBlade) {
    let (sign, index) = s.into_parts();
    (sign, PyBlade(index))
}

/// `e_a e_b` as `(sign, blade)`.
#[pyfunction]
fn geometric_product(a: &PyBlade, b: &PyBlade) -> PyResult<(i8, PyBlade)> {
    ga_bsc::geometric_product(&a.0.clone().into(), &b.0.clone().into())
        .map(signed_parts)
        .or_raise()
}

/// Inverse of `e_a` as `(sign, blade)`; the blade is `a` itself.
#[pyfunction]
fn blade_inverse(a: &PyBlade) -> (i8, PyBlade) {
    signed_parts(ga_bsc::blade_inverse(&a.0))
}

#[pyfunction]
fn hamming(a: &PyBlade, b: &PyBlade) -> PyResult<usize> {
    ga_bsc::hamming(&a.0, &b.0).or_raise()
}

#[pyfunction]
fn classic_bind(a: &PyBlade, b: &PyBlade) -> PyResult<PyBlade> {
    ga_bsc::classic_bind(&a.0, &b.0).map(PyBlade).or_raise()
}

#[pyfunction]
#[pyo3(signature = (items, seed=0))]
fn majority_chunk(items: Vec<PyBlade>, seed: u64) -> PyResult<PyBlade> {
    let items: Vec<BladeIndex> = items.into_iter().map(|b| b.0).collect();
    ga_bsc::majority_chunk(&items, seed).map(PyBlade).or_raise()
}

/// Sparse real combination of blades.
#[pyclass(
    name = "Multivector",
    module = "gabsc",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyMultivector(Multivector);

#[pymethods]
impl PyMultivector {
    /// `Multivector(4, [(2.0, "0110"), (-1.0, "1111")])`.
    #[new]
    #[pyo3(signature = (n, terms=Vec::new()))]
    fn new(n: usize, terms: Vec<(f64, String)>) -> PyResult<Self> {
        let parsed = terms
            .iter()
            .map(|(c, lit)| Ok((*c, BladeIndex::from_literal(lit, n)?)))
            .collect::<ga_bsc::Result<Vec<_>>>()
            .or_raise()?;
        Multivector::from_terms(n, parsed).map(Self).or_raise()
    }

    #[staticmethod]
    #[pyo3(signature = (blade, coeff=1.0))]
    fn from_blade(blade: &PyBlade, coeff: f64) -> Self {
        Self(Multivector::from_blade(&blade.0.clone().into(), coeff))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    /// `(coefficient, literal)` pairs in lexicographic blade order.
    fn terms(&self) -> Vec<(f64, String)> {
        self.0.terms().map(|(b, c)| (c, b.to_literal())).collect()
    }

    fn coeff(&self, blade: &PyBlade) -> f64 {
        self.0.coeff(&blade.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.add(&other.0).map(Self).or_raise()
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.sub(&other.0).map(Self).or_raise()
    }

    fn __neg__(&self) -> Self {
        Self(self.0.scale(-1.0))
    }

    /// Geometric product.
    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.gp(&other.0).map(Self).or_raise()
    }

    fn scale(&self, factor: f64) -> Self {
        Self(self.0.scale(factor))
    }

    fn reversion(&self) -> Self {
        Self(self.0.reversion())
    }

    fn scalar_part(&self) -> f64 {
        self.0.scalar_part()
    }

    fn similarity(&self, other: &Self) -> PyResult<f64> {
        self.0.similarity(&other.0).or_raise()
    }

    /// Trace of the product of the Pauli-matrix images on `m` factors.
    fn trace_product(&self, other: &Self, m: usize) -> PyResult<f64> {
        self.0.trace_product(&other.0, m).or_raise()
    }

    fn project_to_support(&self, k: usize) -> PyResult<Self> {
        self.0.project_to_support(k).map(Self).or_raise()
    }

    #[pyo3(signature = (other, tol=ga_bsc::multivector::DEFAULT_TOLERANCE))]
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.0.approx_eq(&other.0, tol)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Multivector({}, {:?})", self.0.dim(), self.terms())
    }
}

/// Pauli-matrix image of a multivector as nested lists of complex numbers.
#[pyfunction]
#[pyo3(signature = (x, m=None))]
fn rep(x: &PyMultivector, m: Option<usize>) -> PyResult<Vec<Vec<num_complex::Complex64>>> {
    let m = m.unwrap_or_else(|| cartan::default_factor_count(x.0.dim()));
    let mat = cartan::rep(&x.0, m).or_raise()?;
    Ok(mat
        .entries()
        .chunks(mat.order())
        .map(<[_]>::to_vec)
        .collect())
}

#[pyclass(name = "SymbolTable", module = "gabsc", skip_from_py_object)]
#[derive(Clone)]
struct PySymbolTable(SymbolTable);

#[pymethods]
impl PySymbolTable {
    #[new]
    fn new(n: usize, k: usize) -> PyResult<Self> {
        SymbolTable::new(n, k).map(Self).or_raise()
    }

    #[staticmethod]
    fn generate(
        seed: u64,
        n: usize,
        k: usize,
        roles: Vec<String>,
        fillers: Vec<String>,
    ) -> PyResult<Self> {
        SymbolTable::generate(seed, n, k, &roles, &fillers)
            .map(Self)
            .or_raise()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        format::table_from_json(text).map(Self).or_raise()
    }

    fn to_json(&self) -> String {
        format::table_to_json(&self.0)
    }

    fn add_role(&mut self, name: &str, blade: &PyBlade) -> PyResult<()> {
        self.0.add_role(name, blade.0.clone()).or_raise()
    }

    fn add_filler(&mut self, name: &str, blade: &PyBlade) -> PyResult<()> {
        self.0.add_filler(name, blade.0.clone()).or_raise()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    fn roles(&self) -> BTreeMap<String, PyBlade> {
        self.0
            .roles()
            .iter()
            .map(|(k, v)| (k.clone(), PyBlade(v.clone())))
            .collect()
    }

    fn fillers(&self) -> BTreeMap<String, PyBlade> {
        self.0
            .fillers()
            .iter()
            .map(|(k, v)| (k.clone(), PyBlade(v.clone())))
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "SymbolTable(n={}, k={}, roles={}, fillers={})",
            self.0.n(),
            self.0.k(),
            self.0.roles().len(),
            self.0.fillers().len()
        )
    }
}

/// An encoded record from either codec.
#[pyclass(name = "Record", module = "gabsc", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyRecord(EncodedRecord);

#[pymethods]
impl PyRecord {
    #[getter]
    fn codec(&self) -> &'static str {
        self.0.codec()
    }

    /// The multivector of a GA record.
    fn multivector(&self) -> PyResult<PyMultivector> {
        self.0.as_ga().cloned().map(PyMultivector).or_raise()
    }

    /// The bit string of a classic record.
    fn bits(&self) -> PyResult<PyBlade> {
        self.0.as_classic().cloned().map(PyBlade).or_raise()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        format::record_from_json(text).map(Self).or_raise()
    }

    fn to_json(&self) -> String {
        format::record_to_json(&self.0)
    }

    fn __repr__(&self) -> String {
        match &self.0 {
            EncodedRecord::Ga(mv) => format!("Record(ga, {mv})"),
            EncodedRecord::Classic(bits) => format!("Record(classic, {})", bits.to_literal()),
        }
    }
}

#[pyfunction]
#[pyo3(signature = (table, pairs, weights=None))]
fn ga_encode(
    table: &PySymbolTable,
    pairs: Vec<(String, String)>,
    weights: Option<Vec<f64>>,
) -> PyResult<PyRecord> {
    codec::ga_encode(&table.0, &pairs, weights.as_deref())
        .map(PyRecord)
        .or_raise()
}

/// Unbinds `role`; returns a dict with filler, score, ambiguous, raw and
/// projected.
#[pyfunction]
fn ga_decode<'py>(
    py: Python<'py>,
    record: &PyRecord,
    table: &PySymbolTable,
    role: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let d = codec::ga_decode(&record.0, &table.0, role).or_raise()?;
    let out = PyDict::new(py);
    out.set_item("filler", d.filler)?;
    out.set_item("score", d.score)?;
    out.set_item("ambiguous", d.ambiguous)?;
    out.set_item("raw", PyMultivector(d.raw))?;
    out.set_item("projected", PyMultivector(d.projected))?;
    Ok(out)
}

#[pyfunction]
#[pyo3(signature = (table, pairs, seed=0))]
fn classic_encode(
    table: &PySymbolTable,
    pairs: Vec<(String, String)>,
    seed: u64,
) -> PyResult<PyRecord> {
    codec::classic_encode(&table.0, &pairs, seed)
        .map(PyRecord)
        .or_raise()
}

/// Nearest filler to `record XOR role`; a dict with filler, distance and
/// ambiguous.
#[pyfunction]
fn classic_decode<'py>(
    py: Python<'py>,
    record: &PyRecord,
    table: &PySymbolTable,
    role: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let d = codec::classic_decode_role(&record.0, &table.0, role).or_raise()?;
    let out = PyDict::new(py);
    out.set_item("filler", d.filler)?;
    out.set_item("distance", d.distance)?;
    out.set_item("ambiguous", d.ambiguous)?;
    Ok(out)
}

/// Runs the Pat Smith checks; `table` replaces the built-in fixture.
#[pyfunction(name = "verify")]
#[pyo3(signature = (m=verify::FIXTURE_FACTORS, table=None))]
fn run_verify<'py>(
    py: Python<'py>,
    m: usize,
    table: Option<&PySymbolTable>,
) -> PyResult<Bound<'py, PyDict>> {
    let report = match table {
        Some(t) => verify::verify_table(&t.0, m),
        None => verify::verify(m),
    }
    .or_raise()?;
    let out = PyDict::new(py);
    out.set_item("passed", report.passed())?;
    out.set_item("trace_value", report.trace_value)?;
    let checks: Vec<(&str, bool, String)> = report
        .checks
        .iter()
        .map(|c| (c.name, c.passed, c.detail.clone()))
        .collect();
    out.set_item("checks", checks)?;
    Ok(out)
}

/// Times the sign kernel at dimension `n`.
#[pyfunction(name = "bench")]
#[pyo3(signature = (n, seed=0))]
fn run_bench<'py>(py: Python<'py>, n: usize, seed: u64) -> PyResult<Bound<'py, PyDict>> {
    let r = py
        .detach(|| bench::run(&BenchConfig::for_dimension(n, seed)))
        .or_raise()?;
    let out = PyDict::new(py);
    out.set_item("n", r.n)?;
    out.set_item("products_per_sec", r.products_per_sec)?;
    out.set_item("kernel_ns_per_sign", r.kernel_ns_per_sign)?;
    out.set_item("reference_ns_per_sign", r.reference_ns_per_sign)?;
    out.set_item("speedup", r.speedup)?;
    out.set_item("sign_checksum", r.sign_checksum)?;
    out.set_item("meets_targets", r.meets_targets())?;
    Ok(out)
}

#[pymodule]
fn gabsc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("GaBscError", m.py().get_type::<GaBscError>())?;
    m.add_class::<PyBlade>()?;
    m.add_class::<PyMultivector>()?;
    m.add_class::<PySymbolTable>()?;
    m.add_class::<PyRecord>()?;
    m.add_function(wrap_pyfunction!(product_sign, m)?)?;
    m.add_function(wrap_pyfunction!(product_sign_reference, m)?)?;
    m.add_function(wrap_pyfunction!(geometric_product, m)?)?;
    m.add_function(wrap_pyfunction!(blade_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(hamming, m)?)?;
    m.add_function(wrap_pyfunction!(classic_bind, m)?)?;
    m.add_function(wrap_pyfunction!(majority_chunk, m)?)?;
    m.add_function(wrap_pyfunction!(rep, m)?)?;
    m.add_function(wrap_pyfunction!(ga_encode, m)?)?;
    m.add_function(wrap_pyfunction!(ga_decode, m)?)?;
    m.add_function(wrap_pyfunction!(classic_encode, m)?)?;
    m.add_function(wrap_pyfunction!(classic_decode, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    m.add_function(wrap_pyfunction!(run_bench, m)?)?;
    Ok(())
}
