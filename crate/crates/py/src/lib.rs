//! Python bindings: graphs, canonical keys, enumeration, filters, the
//! diameter-3 test, recipe verification and the order-n classification.

use std::path::PathBuf;

use engine::constructions::{parse_recipes, shipped_recipes, Recipe};
use engine::diameter3::{diameter3_test, Diameter3Mode, Diameter3Verdict};
use engine::graph::Diameter;
use engine::kb::{kb_seed_builtin, shipped_external, Kb};
use engine::pipeline::{classify_order, explain, render_csv, render_summary, ClassificationReport, PipelineConfig, PipelineError, Stage};
use engine::{canonical_key as key_of, conditions, decode_graph6, encode_graph6};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

pyo3::create_exception!(chardeg, SoundnessAlarm, PyRuntimeError);

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Graph", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGraph(engine::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<PyGraph> {
        engine::Graph::from_edges(n, &edges).map(PyGraph).map_err(value_err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<PyGraph> {
        decode_graph6(text).map(PyGraph).map_err(value_err)
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<PyGraph> {
        PyGraph::checked(n).map(|_| PyGraph(engine::Graph::complete(n)))
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<PyGraph> {
        PyGraph::checked(n).map(|_| PyGraph(engine::Graph::cycle(n)))
    }

    fn graph6(&self) -> String {
        encode_graph6(&self.0)
    }

    fn order(&self) -> usize {
        self.0.order()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().collect()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.0.order() {
            return Err(value_err(format!("vertex {v} out of range")));
        }
        Ok(self.0.degree(v))
    }

    fn complement(&self) -> PyGraph {
        PyGraph(self.0.complement())
    }

    fn join(&self, other: &PyGraph) -> PyResult<PyGraph> {
        engine::Graph::join(&self.0, &other.0).map(PyGraph).map_err(value_err)
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    /// None when disconnected.
    fn diameter(&self) -> Option<usize> {
        match self.0.diameter() {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }

    fn clique_number(&self) -> usize {
        self.0.clique_number()
    }

    fn canonical_key(&self) -> String {
        key_of(&self.0).to_string()
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        key_of(&self.0) == key_of(&other.0)
    }

    fn palfy_condition(&self) -> bool {
        conditions::palfy_condition(&self.0)
    }

    fn odd_cycle_free_complement(&self) -> bool {
        conditions::odd_cycle_free_complement(&self.0)
    }

    /// `(a, b)` or None when the complement has an odd cycle.
    fn signature(&self) -> Option<(usize, usize)> {
        conditions::signature(&self.0).map(|s| (s.a, s.b))
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", encode_graph6(&self.0))
    }
}

impl PyGraph {
    fn checked(n: usize) -> PyResult<()> {
        if n > engine::graph::MAX_VERTICES {
            return Err(value_err(format!("order {n} exceeds {}", engine::graph::MAX_VERTICES)));
        }
        Ok(())
    }
}

#[pyfunction]
fn canonical_key(g: &PyGraph) -> String {
    g.canonical_key()
}

/// One representative per isomorphism class, in generation order.
#[pyfunction]
#[pyo3(signature = (n, connected_only = false))]
fn enumerate(n: usize, connected_only: bool) -> PyResult<Vec<PyGraph>> {
    let stream = engine::enumeration::enumerate(n).map_err(value_err)?;
    Ok(stream.filter(|g| !connected_only || g.is_connected()).map(PyGraph).collect())
}

#[pyfunction]
fn c(n: usize) -> PyResult<usize> {
    conditions::c(n).map_err(value_err)
}

/// `"PASS"` or the reason code of the elimination.
#[pyfunction(name = "diameter3_test")]
#[pyo3(signature = (g, strict = false))]
fn py_diameter3_test(g: &PyGraph, strict: bool) -> PyResult<String> {
    let mode = if strict { Diameter3Mode::Strict } else { Diameter3Mode::AnyLabeling };
    match diameter3_test(&g.0, mode).map_err(value_err)? {
        Diameter3Verdict::Pass => Ok("PASS".into()),
        Diameter3Verdict::Eliminated(r) => Ok(r.code().into()),
    }
}

fn load_recipes(path: Option<PathBuf>) -> PyResult<Vec<Recipe>> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(&p).map_err(value_err)?;
            parse_recipes(&text).map_err(value_err)
        }
        None => Ok(shipped_recipes()),
    }
}

/// `(name, ok, graph6 or error message)` per recipe.
#[pyfunction]
#[pyo3(signature = (path = None, check_primality = true))]
fn verify_recipes(path: Option<PathBuf>, check_primality: bool) -> PyResult<Vec<(String, bool, String)>> {
    Ok(load_recipes(path)?
        .iter()
        .map(|r| match r.render(check_primality) {
            Ok(x) => (r.name.clone(), true, encode_graph6(&x.graph)),
            Err(e) => (r.name.clone(), false, e.to_string()),
        })
        .collect())
}

#[pyclass(name = "Report", frozen)]
struct PyReport(ClassificationReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn order(&self) -> usize {
        self.0.order
    }

    /// Headline counts as a dict.
    fn tallies<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let t = &self.0.tallies;
        let d = PyDict::new(py);
        d.set_item("total", t.total)?;
        d.set_item("connected", t.connected)?;
        d.set_item("disconnected", t.disconnected)?;
        d.set_item("connected_survivors", t.connected_survivors)?;
        d.set_item("disconnected_survivors", t.disconnected_survivors)?;
        let s = t.connected_status;
        d.set_item("connected_status", (s.occurs, s.not_occurs, s.unknown))?;
        let sigs = PyDict::new(py);
        for (sig, x) in &t.by_signature {
            sigs.set_item((sig.a, sig.b), (x.all.total(), x.diameter3.total()))?;
        }
        d.set_item("by_signature", sigs)?;
        let reasons = PyDict::new(py);
        for (r, n) in &t.reasons {
            reasons.set_item(r, n)?;
        }
        d.set_item("reasons", reasons)?;
        Ok(d)
    }

    /// `(graph6, status, reason)` of a graph given in any labeling.
    fn status(&self, g: &PyGraph) -> Option<(String, String, String)> {
        self.0.lookup(&g.0).map(|r| (r.graph6.clone(), r.status.to_string(), r.reason.clone()))
    }

    /// Connected filter survivors as `(graph6, signature, status, reason)`.
    fn survivors(&self) -> Vec<(String, Option<(usize, usize)>, String, String)> {
        self.0
            .survivors()
            .map(|r| (r.graph6.clone(), r.signature.map(|s| (s.a, s.b)), r.status.to_string(), r.reason.clone()))
            .collect()
    }

    fn summary(&self) -> String {
        render_summary(&self.0)
    }

    fn csv(&self) -> String {
        render_csv(&self.0)
    }

    fn explain(&self, graph6: &str) -> Option<String> {
        explain(&self.0, graph6)
    }
}

/// Runs the pipeline. `kb` paths are merged over the builtin seed; without them
/// the bundled seeds are used.
#[pyfunction]
#[pyo3(signature = (order = 8, kb = Vec::new(), recipes = None, strict = false, admissibility = true, filter_only = false))]
fn classify(
    py: Python<'_>,
    order: usize,
    kb: Vec<PathBuf>,
    recipes: Option<PathBuf>,
    strict: bool,
    admissibility: bool,
    filter_only: bool,
) -> PyResult<PyReport> {
    let mut seeds = kb_seed_builtin();
    if kb.is_empty() {
        seeds.merge(&shipped_external()).map_err(value_err)?;
    }
    for p in &kb {
        seeds.merge(&Kb::load_path(p).map_err(value_err)?).map_err(value_err)?;
    }
    let recipes = load_recipes(recipes)?;
    let config = PipelineConfig {
        stage: if filter_only { Stage::Filter } else { Stage::Full },
        diameter3_mode: if strict { Diameter3Mode::Strict } else { Diameter3Mode::AnyLabeling },
        admissibility,
        ..PipelineConfig::default()
    };
    let result = py.detach(|| classify_order(order, &seeds, &recipes, config));
    match result {
        Ok(report) => Ok(PyReport(report)),
        Err(e @ PipelineError::SoundnessAlarm { .. }) => Err(SoundnessAlarm::new_err(e.to_string())),
        Err(e) => Err(value_err(e)),
    }
}

#[pymodule]
fn chardeg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyReport>()?;
    m.add("SoundnessAlarm", m.py().get_type::<SoundnessAlarm>())?;
    m.add_function(wrap_pyfunction!(canonical_key, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(c, m)?)?;
    m.add_function(wrap_pyfunction!(py_diameter3_test, m)?)?;
    m.add_function(wrap_pyfunction!(verify_recipes, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    Ok(())
}
