//! Python bindings. Graphs cross the boundary as `Graph` objects; recipes
//! as their one-line text form.

use std::collections::BTreeMap;
use std::path::PathBuf;

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use cages::bounds::{moore_bound, sauer_bound};
use cages::constructions::{self as cons, CirculantSpec, GdgpSpec};
use cages::graph::{self, canonical_certificate, decode_graph6, encode_graph6, Edge};
use cages::spectrum::{check_kg_graph, load_seeds, read_citations, Construction};
use cages::{Built, EnumSpec, Recipe, SearchConfig, SpectrumConfig};

create_exception!(cages_py, CagesError, PyException);

fn err(e: cages::Error) -> PyErr {
    let name = format!("{e:?}");
    let name = name.split(['(', ' ', '{']).next().unwrap_or("Error");
    CagesError::new_err(format!("{name}: {e}"))
}

fn config(budget: Option<u64>, rng_seed: Option<u64>) -> SearchConfig {
    let mut cfg = SearchConfig::default();
    if let Some(b) = budget {
        cfg.budget = b;
    }
    cfg.rng_seed = rng_seed;
    cfg
}

#[pyclass(name = "Graph", module = "cages_py", frozen)]
pub struct PyGraph {
    inner: graph::Graph,
}

impl PyGraph {
    fn wrap(g: graph::Graph) -> PyGraph {
        PyGraph { inner: g }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<PyGraph> {
        graph::Graph::from_edges(n, edges)
            .map(PyGraph::wrap)
            .map_err(err)
    }

    #[staticmethod]
    fn from_graph6(line: &str) -> PyResult<PyGraph> {
        decode_graph6(line).map(PyGraph::wrap).map_err(err)
    }

    fn to_graph6(&self) -> PyResult<String> {
        encode_graph6(&self.inner).map_err(err)
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn size(&self) -> usize {
        self.inner.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().iter().map(Edge::endpoints).collect()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degree_sequence()
    }

    /// Length of a shortest cycle, or None for a forest.
    fn girth(&self) -> Option<usize> {
        graph::girth(&self.inner).cycle_len()
    }

    fn is_bipartite(&self) -> bool {
        self.inner.is_bipartite()
    }

    /// graph6 of the canonical form.
    fn certificate(&self) -> String {
        canonical_certificate(&self.inner).as_str().to_string()
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        graph::is_isomorphic(&self.inner, &other.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(order={}, size={})",
            self.inner.order(),
            self.inner.size()
        )
    }
}

fn built_pairs(v: Vec<Built>) -> Vec<(PyGraph, String)> {
    v.into_iter()
        .map(|b| (PyGraph::wrap(b.graph), b.recipe.to_string()))
        .collect()
}

fn built_pair(b: Built) -> (PyGraph, String) {
    (PyGraph::wrap(b.graph), b.recipe.to_string())
}

#[pyfunction(name = "moore_bound")]
fn py_moore_bound(k: u64, g: u64) -> PyResult<u64> {
    moore_bound(k, g).map_err(err)
}

#[pyfunction(name = "sauer_bound")]
fn py_sauer_bound(k: u64, g: u64) -> PyResult<u64> {
    sauer_bound(k, g).map_err(err)
}

/// None when `graph` is a connected k-regular graph of girth exactly g,
/// otherwise the reason it is not.
#[pyfunction]
fn verify(graph: &PyGraph, k: usize, g: usize) -> Option<String> {
    check_kg_graph(&graph.inner, k, g)
        .err()
        .map(|r| r.to_string())
}

#[pyfunction]
#[pyo3(signature = (graph, target, budget=None, rng_seed=None))]
fn subdivide_two(
    graph: &PyGraph,
    target: usize,
    budget: Option<u64>,
    rng_seed: Option<u64>,
) -> PyResult<Vec<(PyGraph, String)>> {
    cons::subdivide_two(&graph.inner, target, &config(budget, rng_seed))
        .map(built_pairs)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (graph, target, budget=None, rng_seed=None))]
fn subdivide_three(
    graph: &PyGraph,
    target: usize,
    budget: Option<u64>,
    rng_seed: Option<u64>,
) -> PyResult<Vec<(PyGraph, String)>> {
    cons::subdivide_three(&graph.inner, target, &config(budget, rng_seed))
        .map(built_pairs)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (graph, target, budget=None, rng_seed=None))]
fn subdivide_merge(
    graph: &PyGraph,
    target: usize,
    budget: Option<u64>,
    rng_seed: Option<u64>,
) -> PyResult<Vec<(PyGraph, String)>> {
    cons::subdivide_merge(&graph.inner, target, &config(budget, rng_seed))
        .map(built_pairs)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (graph, edges, vertices, target, budget=None, rng_seed=None))]
fn delete_edges_add_vertices(
    graph: &PyGraph,
    edges: usize,
    vertices: usize,
    target: usize,
    budget: Option<u64>,
    rng_seed: Option<u64>,
) -> PyResult<Vec<(PyGraph, String)>> {
    cons::delete_edges_add_vertices(
        &graph.inner,
        edges,
        vertices,
        target,
        &config(budget, rng_seed),
    )
    .map(built_pairs)
    .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (graph, vertices, target, budget=None, rng_seed=None))]
fn delete_vertices(
    graph: &PyGraph,
    vertices: usize,
    target: usize,
    budget: Option<u64>,
    rng_seed: Option<u64>,
) -> PyResult<Vec<(PyGraph, String)>> {
    cons::delete_vertices(&graph.inner, vertices, target, &config(budget, rng_seed))
        .map(built_pairs)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (graph, budget=None, rng_seed=None))]
fn remove_biggs_tree(
    graph: &PyGraph,
    budget: Option<u64>,
    rng_seed: Option<u64>,
) -> PyResult<(PyGraph, String)> {
    cons::remove_biggs_tree(&graph.inner, &config(budget, rng_seed))
        .map(built_pair)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (graph, radius, root=0))]
fn moore_tree_double(graph: &PyGraph, radius: usize, root: usize) -> PyResult<(PyGraph, String)> {
    cons::moore_tree_double(&graph.inner, radius, root)
        .map(built_pair)
        .map_err(err)
}

#[pyfunction]
fn canonical_double_cover(graph: &PyGraph) -> (PyGraph, String) {
    built_pair(cons::canonical_double_cover(&graph.inner))
}

#[pyfunction]
fn circulant(n: usize, jumps: Vec<usize>) -> PyResult<(PyGraph, String)> {
    let spec = CirculantSpec::new(n, jumps).map_err(err)?;
    Ok(built_pair(cons::circulant(&spec)))
}

#[pyfunction]
fn gdgp(m: usize, n: usize, ks: Vec<usize>) -> PyResult<(PyGraph, String)> {
    let spec = GdgpSpec::new(m, n, ks).map_err(err)?;
    cons::gdgp(&spec).map(built_pair).map_err(err)
}

#[pyfunction]
fn quartic_parity_graph(n: usize) -> PyResult<(PyGraph, String)> {
    cons::quartic_parity_graph(n).map(built_pair).map_err(err)
}

/// Rebuilds the graph a recipe line describes and checks its certificate.
#[pyfunction]
fn replay(recipe: &str) -> PyResult<PyGraph> {
    let r: Recipe = recipe.parse().map_err(err)?;
    r.replay().map(PyGraph::wrap).map_err(err)
}

/// Connected k-regular graphs on n vertices with girth at least
/// `min_girth`, one per isomorphism class, sorted by certificate.
#[pyfunction]
#[pyo3(signature = (k, n, min_girth=3, cap=None))]
fn enumerate_regular(
    k: usize,
    n: usize,
    min_girth: usize,
    cap: Option<u64>,
) -> PyResult<Vec<PyGraph>> {
    let mut spec = EnumSpec::new(k, n, min_girth);
    if let Some(c) = cap {
        spec = spec.with_cap(c);
    }
    cages::enumerate_regular(&spec)
        .map(|v| v.into_iter().map(PyGraph::wrap).collect())
        .map_err(err)
}

/// Runs the order-spectrum search and returns a dict with the per-order
/// states, `n_kg`, `n_candidate`, `run_found`, the full `report` text and
/// the `summary` table.
#[pyfunction]
#[pyo3(signature = (k, g, horizon, seeds, constructions="all", citations=None, pool_width=None, budget=None))]
#[allow(clippy::too_many_arguments)]
fn spectrum(
    py: Python<'_>,
    k: usize,
    g: usize,
    horizon: usize,
    seeds: PathBuf,
    constructions: &str,
    citations: Option<PathBuf>,
    pool_width: Option<usize>,
    budget: Option<u64>,
) -> PyResult<Py<PyAny>> {
    let mut cfg =
        SpectrumConfig::with_constructions(&Construction::parse_list(constructions).map_err(err)?);
    cfg.search = config(budget, None);
    if let Some(w) = pool_width {
        cfg.pool_width = w;
    }
    if let Some(path) = citations {
        cfg.citations = read_citations(&path).map_err(err)?;
    }
    let seeds = load_seeds(&seeds, k, g).map_err(err)?;
    let report = py
        .detach(|| cages::spectrum_search(k, g, &seeds, horizon, &cfg))
        .map_err(err)?;
    let states: BTreeMap<usize, &str> = report
        .statuses
        .iter()
        .map(|s| (s.n, s.state.name()))
        .collect();
    let out = pyo3::types::PyDict::new(py);
    out.set_item("states", states)?;
    out.set_item("n_kg", report.n_kg)?;
    out.set_item("n_candidate", report.n_candidate)?;
    out.set_item("run_found", report.run_found)?;
    out.set_item("report", report.to_string())?;
    out.set_item("summary", report.summary())?;
    Ok(out.into_any().unbind())
}

#[pymodule]
fn cages_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("CagesError", m.py().get_type::<CagesError>())?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(py_moore_bound, m)?)?;
    m.add_function(wrap_pyfunction!(py_sauer_bound, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(subdivide_two, m)?)?;
    m.add_function(wrap_pyfunction!(subdivide_three, m)?)?;
    m.add_function(wrap_pyfunction!(subdivide_merge, m)?)?;
    m.add_function(wrap_pyfunction!(delete_edges_add_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(delete_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(remove_biggs_tree, m)?)?;
    m.add_function(wrap_pyfunction!(moore_tree_double, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_double_cover, m)?)?;
    m.add_function(wrap_pyfunction!(circulant, m)?)?;
    m.add_function(wrap_pyfunction!(gdgp, m)?)?;
    m.add_function(wrap_pyfunction!(quartic_parity_graph, m)?)?;
    m.add_function(wrap_pyfunction!(replay, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_regular, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    Ok(())
}
