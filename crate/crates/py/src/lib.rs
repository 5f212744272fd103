//! Python bindings: `import chordflip`.

use std::collections::BTreeMap;

use chordflip_core as core;
use chordflip_core::render::{render_svg as render, RenderOptions};
use pyo3::create_exception;
use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

create_exception!(chordflip, NotBipartiteError, PyValueError);
create_exception!(chordflip, TransversalViolationError, PyValueError);

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn label_err(e: core::DiagramError) -> PyErr {
    match e {
        core::DiagramError::UnknownLabel(l) => PyKeyError::new_err(l),
        other => value_err(other),
    }
}

fn parse_colors(s: &str) -> PyResult<core::ColorSequence> {
    s.parse().map_err(value_err)
}

fn coloring_to_map(c: &core::ChordColoring) -> BTreeMap<String, String> {
    c.0.iter().map(|(l, col)| (l.clone(), col.to_string())).collect()
}

fn coloring_from_map(m: BTreeMap<String, String>) -> PyResult<core::ChordColoring> {
    m.into_iter()
        .map(|(l, c)| {
            let color = match c.as_str() {
                "R" | "red" => core::Color::Red,
                "B" | "blue" => core::Color::Blue,
                other => return Err(PyValueError::new_err(format!("bad color `{other}` for `{l}`"))),
            };
            Ok((l, color))
        })
        .collect()
}

/// A chord diagram given by a double occurrence word.
#[pyclass(name = "ChordDiagram", module = "chordflip", frozen, eq)]
#[derive(PartialEq)]
struct PyChordDiagram(core::ChordDiagram);

#[pymethods]
impl PyChordDiagram {
    #[new]
    fn new(word: &str) -> PyResult<Self> {
        core::parse_dow(word).map(Self).map_err(value_err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let j: core::DiagramJson = serde_json::from_str(text).map_err(value_err)?;
        core::ChordDiagram::try_from(j).map(Self).map_err(value_err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&core::DiagramJson::from(&self.0)).expect("diagram serializes")
    }

    #[getter]
    fn num_chords(&self) -> usize {
        self.0.num_chords()
    }

    #[getter]
    fn word(&self) -> Vec<String> {
        self.0.word().into_iter().map(String::from).collect()
    }

    #[getter]
    fn pairing(&self) -> Vec<usize> {
        self.0.pairing().to_vec()
    }

    /// `{label: (first, second)}` endpoint positions.
    fn chords(&self) -> BTreeMap<String, (usize, usize)> {
        self.0.chords().iter().map(|c| (c.label.clone(), c.endpoints)).collect()
    }

    fn chords_cross(&self, u: &str, v: &str) -> PyResult<bool> {
        self.0.chords_cross(u, v).map_err(label_err)
    }

    /// "inside", "outside" or "crossing".
    fn boundary_status(&self, start: usize, length: usize, label: &str) -> PyResult<&'static str> {
        let status = self.0.boundary_status(&core::Window::new(start, length), label).map_err(label_err)?;
        Ok(match status {
            core::BoundaryStatus::Inside => "inside",
            core::BoundaryStatus::Outside => "outside",
            core::BoundaryStatus::Crossing => "crossing",
        })
    }

    fn reverse_arc(&self, start: usize, length: usize) -> PyResult<Self> {
        let w = core::Window::new(start, length);
        if !w.is_valid_for(self.0.circumference()) {
            return Err(PyValueError::new_err(format!("window {w} is invalid for this diagram")));
        }
        Ok(Self(self.0.reverse_arc(&w)))
    }

    fn is_transversal(&self, start: usize, length: usize) -> bool {
        core::is_transversal(&self.0, &core::Window::new(start, length))
    }

    /// Sorted `(u, v)` label pairs of crossing chords.
    fn interlacement_edges(&self) -> Vec<(String, String)> {
        core::interlacement_graph(&self.0)
            .edges()
            .into_iter()
            .map(|(u, v)| (u.to_string(), v.to_string()))
            .collect()
    }

    fn __str__(&self) -> String {
        core::emit_dow(&self.0)
    }

    fn __repr__(&self) -> String {
        format!("ChordDiagram({:?})", core::emit_dow(&self.0))
    }

    fn __len__(&self) -> usize {
        self.0.num_chords()
    }
}

/// Record of one flip: colouring, window, balance profile and both graphs.
#[pyclass(name = "FlipCertificate", module = "chordflip", frozen)]
struct PyFlipCertificate(core::FlipCertificate);

#[pymethods]
impl PyFlipCertificate {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text).map(Self).map_err(value_err)
    }

    fn to_json(&self) -> String {
        self.0.to_json_pretty()
    }

    #[getter]
    fn coloring(&self) -> BTreeMap<String, String> {
        coloring_to_map(&self.0.coloring)
    }

    /// `(start, length)`.
    #[getter]
    fn window(&self) -> (usize, usize) {
        (self.0.window.start, self.0.window.length)
    }

    #[getter]
    fn profile(&self) -> Vec<i64> {
        self.0.profile.0.clone()
    }

    #[getter]
    fn transversal_ok(&self) -> bool {
        self.0.transversal_ok
    }

    fn __repr__(&self) -> String {
        format!("FlipCertificate(window={})", self.0.window)
    }
}

/// Returns `(output_diagram, certificate)`; raises `NotBipartiteError` when
/// the complement of the interlacement graph is not bipartite.
#[pyfunction]
fn complement_representation(d: &PyChordDiagram) -> PyResult<(PyChordDiagram, PyFlipCertificate)> {
    match core::complement_representation(&d.0) {
        Ok((out, cert)) => Ok((PyChordDiagram(out), PyFlipCertificate(cert))),
        Err(core::PipelineError::NotBipartite(e)) => Err(NotBipartiteError::new_err(e.to_string())),
        Err(e @ core::PipelineError::TransversalViolation { .. }) => {
            Err(TransversalViolationError::new_err(e.to_string()))
        }
        Err(e) => Err(value_err(e)),
    }
}

/// `(True, None)` when the certificate checks out, otherwise `(False, clause)`
/// with the clause letter `a`..`e` that failed first.
#[pyfunction]
fn verify_certificate(
    d: &PyChordDiagram,
    out: &PyChordDiagram,
    cert: &PyFlipCertificate,
) -> (bool, Option<String>) {
    match core::verify_certificate(&d.0, &out.0, &cert.0) {
        Ok(()) => (true, None),
        Err(clause) => (false, Some(clause.code().to_string())),
    }
}

#[pyfunction]
fn balance_profile(colors: &str) -> PyResult<Vec<i64>> {
    core::balance_profile(&parse_colors(colors)?).map(|p| p.0).map_err(value_err)
}

#[pyfunction]
fn find_bisecting_window(colors: &str) -> PyResult<(usize, usize)> {
    let w = core::find_bisecting_window(&parse_colors(colors)?).map_err(value_err)?;
    Ok((w.start, w.length))
}

#[pyfunction]
fn brute_force_bisecting_windows(colors: &str) -> PyResult<Vec<usize>> {
    core::brute_force_bisecting_windows(&parse_colors(colors)?).map_err(value_err)
}

/// Colours chords so that each class is pairwise crossing.
#[pyfunction]
fn two_color(d: &PyChordDiagram) -> PyResult<BTreeMap<String, String>> {
    core::two_color_complement(&core::interlacement_graph(&d.0))
        .map(|c| coloring_to_map(&c))
        .map_err(|e| NotBipartiteError::new_err(e.to_string()))
}

#[pyfunction]
fn enumerate_matchings(n: usize) -> Vec<PyChordDiagram> {
    core::oracle::enumerate_matchings(n).map(PyChordDiagram).collect()
}

#[pyfunction]
fn gen_bicrossing_diagram(n: usize, red: Vec<usize>) -> PyResult<(PyChordDiagram, BTreeMap<String, String>)> {
    let cd = core::oracle::gen_bicrossing_diagram(n, &red).map_err(value_err)?;
    Ok((PyChordDiagram(cd.diagram), coloring_to_map(&cd.coloring)))
}

#[pyfunction]
fn random_color_sequence(length: usize, seed: u64) -> PyResult<String> {
    core::oracle::random_color_sequence(length, seed).map(|s| s.to_string()).map_err(value_err)
}

#[pyfunction]
#[pyo3(signature = (d, coloring=None, window_start=None))]
fn render_svg(
    d: &PyChordDiagram,
    coloring: Option<BTreeMap<String, String>>,
    window_start: Option<usize>,
) -> PyResult<String> {
    let coloring = coloring.map(coloring_from_map).transpose()?;
    let window = window_start.map(|s| core::Window::new(s, d.0.num_chords()));
    if let Some(w) = window.filter(|w| !w.is_valid_for(d.0.circumference())) {
        return Err(PyValueError::new_err(format!("window {w} is invalid for this diagram")));
    }
    Ok(render(&d.0, &RenderOptions { coloring: coloring.as_ref(), window }))
}

#[pymodule]
fn chordflip(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyChordDiagram>()?;
    m.add_class::<PyFlipCertificate>()?;
    m.add("NotBipartiteError", m.py().get_type::<NotBipartiteError>())?;
    m.add("TransversalViolationError", m.py().get_type::<TransversalViolationError>())?;
    m.add_function(wrap_pyfunction!(complement_representation, m)?)?;
    m.add_function(wrap_pyfunction!(verify_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(balance_profile, m)?)?;
    m.add_function(wrap_pyfunction!(find_bisecting_window, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_bisecting_windows, m)?)?;
    m.add_function(wrap_pyfunction!(two_color, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_matchings, m)?)?;
    m.add_function(wrap_pyfunction!(gen_bicrossing_diagram, m)?)?;
    m.add_function(wrap_pyfunction!(random_color_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(render_svg, m)?)?;
    Ok(())
}
