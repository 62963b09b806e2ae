//! Python bindings for `posetkit`.
//!
//!     import posetkit
//!     b2 = posetkit.Poset([("x", "y"), ("x", "z")])
//!     parts, (analyzed, found) = posetkit.monotone_partitions(b2)
//!     lattice = posetkit.PartitionLattice.monotone(parts)
//!     lattice.moebius()   # [1, -1, -1, 0, 1, 0, 0]

use std::sync::Arc;

use num_bigint::BigUint;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use posetkit::casestudy;
use posetkit::{Category, EnumerationReport, Error};

fn to_py_err(err: Error) -> PyErr {
    match err {
        Error::GuardExceeded { .. } => PyRuntimeError::new_err(err.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn report_tuple(r: EnumerationReport) -> (u64, u64) {
    (r.analyzed, r.found)
}

/// A finite partially ordered set.
#[pyclass(name = "Poset", module = "posetkit", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPoset {
    inner: Arc<posetkit::Poset>,
}

impl PyPoset {
    fn wrap(p: posetkit::Poset) -> Self {
        PyPoset { inner: Arc::new(p) }
    }
}

fn unwrap_all(ps: &[PyRef<'_, PyPoset>]) -> Vec<posetkit::Poset> {
    ps.iter().map(|p| (*p.inner).clone()).collect()
}

#[pymethods]
impl PyPoset {
    /// Order generated by `pairs`, with optional extra vertices.
    #[new]
    #[pyo3(signature = (pairs=Vec::new(), vertices=Vec::new()))]
    fn new(pairs: Vec<(String, String)>, vertices: Vec<String>) -> PyResult<Self> {
        posetkit::Poset::from_pairs_with_vertices(pairs, vertices)
            .map(Self::wrap)
            .map_err(to_py_err)
    }

    #[staticmethod]
    fn chain(n: usize) -> Self {
        Self::wrap(posetkit::Poset::chain(n))
    }

    #[staticmethod]
    fn antichain(n: usize) -> Self {
        Self::wrap(posetkit::Poset::antichain(n))
    }

    #[staticmethod]
    fn boolean_algebra(n: usize) -> PyResult<Self> {
        if n > 20 {
            return Err(PyValueError::new_err(
                "boolean_algebra is limited to n <= 20",
            ));
        }
        Ok(Self::wrap(posetkit::Poset::boolean_algebra(n)))
    }

    /// Parses the `v LABEL` / `r A B` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        posetkit::Poset::parse(text)
            .map(Self::wrap)
            .map_err(to_py_err)
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn elements(&self) -> Vec<String> {
        self.inner
            .labels()
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    fn relation(&self) -> Vec<(String, String)> {
        self.inner
            .relation()
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    fn covering(&self) -> Vec<(String, String)> {
        self.inner
            .covering()
            .into_iter()
            .map(|c| (c.lower.to_string(), c.upper.to_string()))
            .collect()
    }

    fn leq(&self, a: &str, b: &str) -> PyResult<bool> {
        let find = |l: &str| {
            self.inner
                .index_of(l)
                .ok_or_else(|| PyValueError::new_err(format!("unknown label {l:?}")))
        };
        Ok(self.inner.leq(find(a)?, find(b)?))
    }

    fn is_forest(&self) -> bool {
        self.inner.is_forest()
    }

    fn is_chain(&self) -> bool {
        self.inner.is_chain()
    }

    fn height(&self) -> usize {
        self.inner.height()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __eq__(&self, other: PyRef<'_, PyPoset>) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "Poset(elements={}, covers={})",
            self.inner.len(),
            self.inner.covering().len()
        )
    }
}

/// A preorder extending the order of its base poset.
#[pyclass(name = "MonotonePartition", module = "posetkit", frozen)]
struct PyMonotonePartition {
    inner: posetkit::MonotonePartition,
}

#[pymethods]
impl PyMonotonePartition {
    /// Pairs of the preorder that are not in the base order.
    fn added_pairs(&self) -> Vec<(String, String)> {
        self.inner
            .added_pairs_labeled()
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    fn blocks(&self) -> Vec<Vec<String>> {
        labeled_blocks(&self.inner.blocks(), self.inner.base())
    }

    /// Quotient poset with concatenated block labels.
    fn to_poset(&self) -> PyPoset {
        PyPoset::wrap(self.inner.to_poset().into_poset())
    }

    fn describe(&self) -> String {
        self.inner.to_poset().describe()
    }

    fn __repr__(&self) -> String {
        format!("MonotonePartition({})", self.describe())
    }
}

/// A regular partition of a poset.
#[pyclass(name = "RegularPartition", module = "posetkit", frozen)]
struct PyRegularPartition {
    inner: posetkit::SetPartition,
    base: Arc<posetkit::Poset>,
}

fn labeled_blocks(sp: &posetkit::SetPartition, p: &posetkit::Poset) -> Vec<Vec<String>> {
    sp.labeled_blocks(p)
        .into_iter()
        .map(|b| b.into_iter().map(|l| l.to_string()).collect())
        .collect()
}

#[pymethods]
impl PyRegularPartition {
    fn blocks(&self) -> Vec<Vec<String>> {
        labeled_blocks(&self.inner, &self.base)
    }

    fn to_poset(&self) -> PyResult<PyPoset> {
        posetkit::regular_to_poset(&self.inner, &self.base)
            .map(|q| PyPoset::wrap(q.into_poset()))
            .map_err(to_py_err)
    }

    /// The same partition as a monotone partition (preorder).
    fn as_preorder(&self) -> PyResult<PyMonotonePartition> {
        posetkit::as_preorder(&self.inner, &self.base)
            .map(|inner| PyMonotonePartition { inner })
            .map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!("RegularPartition({})", self.inner.describe(&self.base))
    }
}

/// Lattice of monotone or regular partitions.
#[pyclass(name = "PartitionLattice", module = "posetkit", frozen)]
struct PyPartitionLattice {
    inner: posetkit::PartitionLattice,
}

#[pymethods]
impl PyPartitionLattice {
    #[staticmethod]
    fn monotone(parts: Vec<PyRef<'_, PyMonotonePartition>>) -> PyResult<Self> {
        let items: Vec<_> = parts.iter().map(|p| p.inner.clone()).collect();
        posetkit::PartitionLattice::monotone(&items)
            .map(|inner| PyPartitionLattice { inner })
            .map_err(to_py_err)
    }

    #[staticmethod]
    fn regular(
        parts: Vec<PyRef<'_, PyRegularPartition>>,
        poset: PyRef<'_, PyPoset>,
    ) -> PyResult<Self> {
        let items: Vec<_> = parts.iter().map(|p| p.inner.clone()).collect();
        posetkit::PartitionLattice::regular(&items, &poset.inner)
            .map(|inner| PyPartitionLattice { inner })
            .map_err(to_py_err)
    }

    fn kind(&self) -> String {
        self.inner.kind().to_string()
    }

    /// Order over positions `1..n`.
    fn order(&self) -> PyPoset {
        PyPoset::wrap(self.inner.order().clone())
    }

    fn moebius(&self) -> Vec<i64> {
        self.inner.moebius()
    }

    fn whitney_numbers(&self) -> Vec<usize> {
        self.inner.whitney_numbers()
    }

    fn whitney_levels(&self) -> Vec<usize> {
        self.inner.whitney_levels()
    }

    fn atoms_positions(&self) -> Vec<usize> {
        self.inner.atoms_positions()
    }

    fn coatoms_positions(&self) -> Vec<usize> {
        self.inner.coatoms_positions()
    }

    fn is_ranked(&self) -> bool {
        self.inner.is_ranked()
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }
}

/// Returns `(partitions, (analyzed, found))`.
#[pyfunction]
fn monotone_partitions(p: PyRef<'_, PyPoset>) -> PyResult<(Vec<PyMonotonePartition>, (u64, u64))> {
    let (parts, report) =
        posetkit::partition::monotone_partitions_within(&p.inner, &posetkit::Limits::unlimited())
            .map_err(to_py_err)?;
    let parts = parts
        .into_iter()
        .map(|inner| PyMonotonePartition { inner })
        .collect();
    Ok((parts, report_tuple(report)))
}

/// Returns `(partitions, (analyzed, found))`.
#[pyfunction]
fn regular_partitions(p: PyRef<'_, PyPoset>) -> PyResult<(Vec<PyRegularPartition>, (u64, u64))> {
    let limits = posetkit::Limits {
        max_regular_elements: posetkit::partition::MAX_REGULAR_ELEMENTS,
        ..posetkit::Limits::unlimited()
    };
    let (parts, report) =
        posetkit::partition::regular_partitions_within(&p.inner, &limits).map_err(to_py_err)?;
    let parts = parts
        .into_iter()
        .map(|inner| PyRegularPartition {
            inner,
            base: Arc::clone(&p.inner),
        })
        .collect();
    Ok((parts, report_tuple(report)))
}

#[pyfunction]
fn linear_extensions(p: PyRef<'_, PyPoset>) -> Vec<PyPoset> {
    posetkit::linear_extensions(&p.inner)
        .into_iter()
        .map(|q| PyPoset::wrap(q.into_poset()))
        .collect()
}

#[pyfunction]
fn are_isomorphic(p: PyRef<'_, PyPoset>, q: PyRef<'_, PyPoset>) -> bool {
    posetkit::are_isomorphic(&p.inner, &q.inner)
}

#[pyfunction]
#[pyo3(signature = (posets, columns=1))]
fn hasse_dot(posets: Vec<PyRef<'_, PyPoset>>, columns: usize) -> String {
    posetkit::hasse_dot(&unwrap_all(&posets), columns)
}

#[pyfunction]
fn poset_sum(posets: Vec<PyRef<'_, PyPoset>>) -> PyPoset {
    PyPoset::wrap(posetkit::poset_sum(&unwrap_all(&posets)))
}

#[pyfunction]
fn forest_sum(posets: Vec<PyRef<'_, PyPoset>>) -> PyResult<PyPoset> {
    posetkit::forest_sum(&unwrap_all(&posets))
        .map(PyPoset::wrap)
        .map_err(to_py_err)
}

#[pyfunction]
fn poset_product(posets: Vec<PyRef<'_, PyPoset>>) -> PyPoset {
    PyPoset::wrap(posetkit::poset_product(&unwrap_all(&posets)))
}

#[pyfunction]
fn forest_product(posets: Vec<PyRef<'_, PyPoset>>) -> PyResult<PyPoset> {
    posetkit::forest_product_all(&unwrap_all(&posets))
        .map(PyPoset::wrap)
        .map_err(to_py_err)
}

/// `category` is `"poset"` or `"forest"`.
#[pyfunction]
fn check_product_universal(
    category: &str,
    p: PyRef<'_, PyPoset>,
    q: PyRef<'_, PyPoset>,
    witnesses: Vec<PyRef<'_, PyPoset>>,
) -> PyResult<bool> {
    let category = match category {
        "poset" => Category::Poset,
        "forest" => Category::Forest,
        other => return Err(PyValueError::new_err(format!("unknown category {other:?}"))),
    };
    posetkit::check_product_universal(category, &p.inner, &q.inner, &unwrap_all(&witnesses))
        .map_err(to_py_err)
}

#[pyfunction]
fn bell(n: usize) -> BigUint {
    casestudy::bell(n)
}

#[pyfunction]
fn m_family_formula_table(max_i: usize) -> Vec<BigUint> {
    casestudy::m_family_formula_table(max_i)
}

#[pyfunction]
fn m_poset(i: usize) -> PyPoset {
    PyPoset::wrap(casestudy::m_poset(i))
}

#[pymodule]
#[pyo3(name = "posetkit")]
fn posetkit_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoset>()?;
    m.add_class::<PyMonotonePartition>()?;
    m.add_class::<PyRegularPartition>()?;
    m.add_class::<PyPartitionLattice>()?;
    m.add_function(wrap_pyfunction!(monotone_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(regular_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(linear_extensions, m)?)?;
    m.add_function(wrap_pyfunction!(are_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(hasse_dot, m)?)?;
    m.add_function(wrap_pyfunction!(poset_sum, m)?)?;
    m.add_function(wrap_pyfunction!(forest_sum, m)?)?;
    m.add_function(wrap_pyfunction!(poset_product, m)?)?;
    m.add_function(wrap_pyfunction!(forest_product, m)?)?;
    m.add_function(wrap_pyfunction!(check_product_universal, m)?)?;
    m.add_function(wrap_pyfunction!(bell, m)?)?;
    m.add_function(wrap_pyfunction!(m_family_formula_table, m)?)?;
    m.add_function(wrap_pyfunction!(m_poset, m)?)?;
    Ok(())
}
