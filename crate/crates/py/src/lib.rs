//! Python bindings for `degpart-core`.
//!
//! Demands are passed as two integer lists `a` and `b`. Structured results
//! (solver outcomes, hypothesis reports, campaign reports) come back as plain
//! dicts with the same layout as the CLI's JSON output.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use degpart_core::feasibility::{self, Threshold};
use degpart_core::io::{self, Format, PlantSpec, PlantVariant, Weaken};
use degpart_core::patterns::{self, B3Variant, PatternKind};
use degpart_core::solver;
use degpart_core::{DemandPair, Partition, SolveConfig, VertexSet};

fn err(e: degpart_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn demands(a: Vec<u64>, b: Vec<u64>) -> PyResult<DemandPair> {
    DemandPair::new(a, b).map_err(err)
}

fn kind(name: &str) -> PyResult<PatternKind> {
    PatternKind::parse(name).ok_or_else(|| PyValueError::new_err(format!("unknown pattern '{name}'")))
}

fn b3_variant(name: &str) -> PyResult<B3Variant> {
    B3Variant::parse(name).ok_or_else(|| PyValueError::new_err(format!("unknown b3 variant '{name}'")))
}

fn set(n: usize, ids: Vec<usize>) -> PyResult<VertexSet> {
    VertexSet::from_ids(n, ids).map_err(err)
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

/// An immutable simple graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "degpart_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyGraph {
    inner: degpart_core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: degpart_core::Graph::new(n, &edges).map_err(err)?,
        })
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        PyGraph {
            inner: degpart_core::Graph::complete(n),
        }
    }

    #[staticmethod]
    fn cycle(n: usize) -> Self {
        PyGraph {
            inner: degpart_core::Graph::cycle(n),
        }
    }

    #[staticmethod]
    fn random(n: usize, p: f64, seed: u64) -> PyResult<Self> {
        Ok(PyGraph {
            inner: io::generate_graph(n, p, seed).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn degree(&self, u: usize) -> PyResult<usize> {
        self.inner.check_vertex(u).map_err(err)?;
        Ok(self.inner.degree(u))
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        Ok(self.inner.edge_indicator(u, v).map_err(err)? == 1)
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// `T1` of the book or `K_{2,3}` classification, or `S1` for `"s1"`.
#[pyfunction]
#[pyo3(signature = (graph, pattern, b3_variant = "loose"))]
fn classify(graph: &PyGraph, pattern: &str, b3_variant: &str) -> PyResult<Vec<usize>> {
    let g = &graph.inner;
    Ok(match kind(pattern)? {
        PatternKind::CyclePairS1 => patterns::s1_vertices(g).to_vec(),
        k => patterns::classify_with(g, k, self::b3_variant(b3_variant)?)
            .map_err(err)?
            .t1
            .to_vec(),
    })
}

#[pyfunction]
#[pyo3(signature = (graph, a, b, b3_variant = "loose"))]
fn hypothesis_report<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    a: Vec<u64>,
    b: Vec<u64>,
    b3_variant: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let r =
        patterns::hypothesis_report_with(&graph.inner, &demands(a, b)?, self::b3_variant(b3_variant)?).map_err(err)?;
    json_to_py(py, &io::serialize_report(&r, Format::Json))
}

#[pyfunction]
fn is_feasible_partition(graph: &PyGraph, a: Vec<u64>, b: Vec<u64>, x1: Vec<usize>) -> PyResult<bool> {
    let p = Partition::from_ids(graph.inner.n(), &x1).map_err(err)?;
    feasibility::is_feasible_partition(&graph.inner, &p, &demands(a, b)?).map_err(err)
}

/// Largest subset of `x` in which every vertex `u` has at least `f[u]`
/// neighbours.
#[pyfunction]
fn f_core(graph: &PyGraph, x: Vec<usize>, f: Vec<u64>) -> PyResult<Vec<usize>> {
    let n = graph.inner.n();
    if f.len() != n {
        return Err(PyValueError::new_err(format!(
            "threshold has length {}, expected {n}",
            f.len()
        )));
    }
    Ok(feasibility::f_core(&graph.inner, &set(n, x)?, &Threshold(f)).to_vec())
}

#[pyfunction]
fn weight(graph: &PyGraph, a: Vec<u64>, b: Vec<u64>, x1: Vec<usize>) -> PyResult<i64> {
    let p = Partition::from_ids(graph.inner.n(), &x1).map_err(err)?;
    solver::weight(&graph.inner, &demands(a, b)?, &p).map_err(err)
}

/// `(x1, x2)` of the first feasible partition in enumeration order, or
/// `None`.
#[pyfunction]
#[pyo3(signature = (graph, a, b, limit = solver::DEFAULT_ORACLE_LIMIT))]
fn oracle(graph: &PyGraph, a: Vec<u64>, b: Vec<u64>, limit: usize) -> PyResult<Option<(Vec<usize>, Vec<usize>)>> {
    let found = solver::exhaustive_oracle(&graph.inner, &demands(a, b)?, limit).map_err(err)?;
    Ok(found.map(|p| (p.x1().to_vec(), p.x2().to_vec())))
}

#[pyfunction]
#[pyo3(signature = (
    graph, a, b, pattern = "b3", seed = 0, budget = None, restarts = 8,
    oracle_limit = solver::DEFAULT_ORACLE_LIMIT, use_oracle = true, neutral_swaps = 0, b3_variant = "loose",
))]
#[allow(clippy::too_many_arguments)]
fn solve<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    a: Vec<u64>,
    b: Vec<u64>,
    pattern: &str,
    seed: u64,
    budget: Option<usize>,
    restarts: usize,
    oracle_limit: usize,
    use_oracle: bool,
    neutral_swaps: usize,
    b3_variant: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let cfg = SolveConfig {
        seed,
        budget,
        restarts,
        oracle_limit,
        use_oracle,
        neutral_swaps,
        b3_variant: self::b3_variant(b3_variant)?,
    };
    let d = demands(a, b)?;
    let k = kind(pattern)?;
    let g = &graph.inner;
    let outcome = py.detach(|| degpart_core::solve(g, &d, k, &cfg)).map_err(err)?;
    json_to_py(py, &io::serialize_outcome(&outcome, Format::Json))
}

type ParsedInstance = (PyGraph, Vec<u64>, Vec<u64>, Vec<String>);

/// Parses instance text; returns `(graph, a, b, labels)`.
#[pyfunction]
#[pyo3(signature = (text, default_demands = None))]
fn parse_instance(text: &str, default_demands: Option<(u64, u64)>) -> PyResult<ParsedInstance> {
    let inst = io::parse_instance(text, default_demands).map_err(err)?;
    Ok((
        PyGraph { inner: inst.graph },
        inst.demands.a_values().to_vec(),
        inst.demands.b_values().to_vec(),
        inst.labels,
    ))
}

#[pyfunction]
fn serialize_instance(graph: &PyGraph, a: Vec<u64>, b: Vec<u64>) -> PyResult<String> {
    let inst = io::Instance::new(graph.inner.clone(), demands(a, b)?).map_err(err)?;
    Ok(io::serialize_instance(&inst))
}

/// Demands satisfying `variant` (`"main_i"`, `"main_ii"`, `"thm_a"`);
/// returns `(a, b)`.
#[pyfunction]
#[pyo3(signature = (graph, variant, seed, tight = true, b3_variant = "loose"))]
fn plant_demands(
    graph: &PyGraph,
    variant: &str,
    seed: u64,
    tight: bool,
    b3_variant: &str,
) -> PyResult<(Vec<u64>, Vec<u64>)> {
    let variant =
        PlantVariant::parse(variant).ok_or_else(|| PyValueError::new_err(format!("unknown variant '{variant}'")))?;
    let spec = PlantSpec {
        variant,
        tight,
        weaken: None,
        b3_variant: self::b3_variant(b3_variant)?,
    };
    let d = io::plant_demands(&graph.inner, variant.natural_kind(), spec, seed).map_err(err)?;
    Ok((d.a_values().to_vec(), d.b_values().to_vec()))
}

/// Runs a verification campaign; keyword arguments mirror the CLI's
/// `verify`/`mine` flags.
#[pyfunction]
#[pyo3(signature = (
    n_min = 5, n_max = 10, p = 0.5, count = 200, variant = "main_i", seed = 0, tight = true,
    weaken = None, b3_variant = "loose",
))]
#[allow(clippy::too_many_arguments)]
fn run_campaign<'py>(
    py: Python<'py>,
    n_min: usize,
    n_max: usize,
    p: f64,
    count: usize,
    variant: &str,
    seed: u64,
    tight: bool,
    weaken: Option<&str>,
    b3_variant: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let variant =
        PlantVariant::parse(variant).ok_or_else(|| PyValueError::new_err(format!("unknown variant '{variant}'")))?;
    let weaken = match weaken {
        Some(w) => Some(Weaken::parse(w).ok_or_else(|| PyValueError::new_err(format!("unknown weakening '{w}'")))?),
        None => None,
    };
    let cfg = io::CampaignConfig {
        n_min,
        n_max,
        p,
        count,
        variant,
        seed,
        tight,
        weaken,
        b3_variant: self::b3_variant(b3_variant)?,
        ..io::CampaignConfig::default()
    };
    let report = py.detach(|| io::run_campaign(&cfg)).map_err(err)?;
    json_to_py(py, &report.to_json())
}

#[pymodule]
fn degpart_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(hypothesis_report, m)?)?;
    m.add_function(wrap_pyfunction!(is_feasible_partition, m)?)?;
    m.add_function(wrap_pyfunction!(f_core, m)?)?;
    m.add_function(wrap_pyfunction!(weight, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(parse_instance, m)?)?;
    m.add_function(wrap_pyfunction!(serialize_instance, m)?)?;
    m.add_function(wrap_pyfunction!(plant_demands, m)?)?;
    m.add_function(wrap_pyfunction!(run_campaign, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
