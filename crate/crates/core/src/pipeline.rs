//! From a chord representation of a graph whose complement is bipartite to a
//! chord representation of that complement.
//!
//! The chords are 2-coloured so that each colour class is pairwise crossing,
//! a window of half the circle is chosen that holds half of each class's
//! endpoints, and the positions inside the window are reversed. Every chord
//! straddles such a window, and reversing it toggles crossing exactly for
//! pairs of straddling chords, so the crossing relation is complemented.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bisector::{self, BalanceProfile, BisectorError, ColorSequence};
use crate::diagram::{BoundaryStatus, ChordDiagram, Window};
use crate::graph::{self, ChordColoring, Color, GraphError, InterlacementGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("G is not bipartite: {0}")]
    NotBipartite(GraphError),
    #[error("window {window} is not transversal: chord `{label}` does not straddle it")]
    TransversalViolation { window: Window, label: String },
    #[error("internal bisection failure: {0}")]
    Bisector(#[from] BisectorError),
}

/// Everything needed to re-check one run of [`complement_representation`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipCertificate {
    pub coloring: ChordColoring,
    pub window: Window,
    pub profile: BalanceProfile,
    pub transversal_ok: bool,
    #[serde(rename = "input_graph")]
    pub input_interlacement: InterlacementGraph,
    #[serde(rename = "output_graph")]
    pub output_interlacement: InterlacementGraph,
}

impl FlipCertificate {
    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

pub fn complement_representation(
    d: &ChordDiagram,
) -> Result<(ChordDiagram, FlipCertificate), PipelineError> {
    let input = InterlacementGraph::of_diagram(d);
    let coloring = graph::two_color_complement(&input).map_err(PipelineError::NotBipartite)?;
    let colors = ColorSequence::from_coloring(d, &coloring)?;
    let profile = bisector::balance_profile(&colors)?;
    let window = bisector::bisecting_window_from_profile(&profile);

    if !bisector::is_transversal(d, &window) {
        let label = d
            .chords()
            .iter()
            .find(|ch| d.boundary_status(&window, &ch.label) != Ok(BoundaryStatus::Crossing))
            .map(|ch| ch.label.clone())
            .unwrap_or_default();
        return Err(PipelineError::TransversalViolation { window, label });
    }

    let out = d.reverse_arc(&window);
    let output = InterlacementGraph::of_diagram(&out);
    let cert = FlipCertificate {
        coloring,
        window,
        profile,
        transversal_ok: true,
        input_interlacement: input,
        output_interlacement: output,
    };
    Ok((out, cert))
}

/// The first certificate clause that failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailedClause {
    /// (a) the colouring is not total, or a colour class is not pairwise crossing.
    ColoringNotCliques,
    /// (b) the window is malformed or does not hold half of each class.
    WindowNotBisecting,
    /// (c) some chord does not straddle the window.
    NotTransversal,
    /// (d) reversing the window does not reproduce the output diagram.
    ReversalMismatch,
    /// (e) the output's interlacement is not the complement of the input's.
    GraphMismatch,
}

impl FailedClause {
    pub fn code(self) -> char {
        match self {
            FailedClause::ColoringNotCliques => 'a',
            FailedClause::WindowNotBisecting => 'b',
            FailedClause::NotTransversal => 'c',
            FailedClause::ReversalMismatch => 'd',
            FailedClause::GraphMismatch => 'e',
        }
    }
}

impl fmt::Display for FailedClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self {
            FailedClause::ColoringNotCliques => "coloring classes are not pairwise-crossing cliques",
            FailedClause::WindowNotBisecting => "window does not bisect both color classes",
            FailedClause::NotTransversal => "window is not transversal to every chord",
            FailedClause::ReversalMismatch => "reversing the window does not yield the output diagram",
            FailedClause::GraphMismatch => "output interlacement is not the complement of the input interlacement",
        };
        write!(f, "({}) {}", self.code(), what)
    }
}

/// Re-checks a certificate from scratch against the input and output diagrams.
/// Only the input diagram, output diagram, coloring and window are trusted
/// inputs; the graphs and profile stored in the certificate are not consulted.
pub fn verify_certificate(
    d: &ChordDiagram,
    out: &ChordDiagram,
    cert: &FlipCertificate,
) -> Result<(), FailedClause> {
    let input = InterlacementGraph::of_diagram(d);
    if !cert.coloring.classes_are_cliques(&input) {
        return Err(FailedClause::ColoringNotCliques);
    }

    let w = &cert.window;
    let m = d.circumference();
    if !w.is_valid_for(m) || w.length != d.num_chords() {
        return Err(FailedClause::WindowNotBisecting);
    }
    for color in [Color::Red, Color::Blue] {
        let class: Vec<usize> = (0..m).filter(|&p| cert.coloring.get(d.label_at(p)) == Some(color)).collect();
        let inside = class.iter().filter(|&&p| w.contains(p, m)).count();
        if 2 * inside != class.len() {
            return Err(FailedClause::WindowNotBisecting);
        }
    }

    if !bisector::is_transversal(d, w) {
        return Err(FailedClause::NotTransversal);
    }
    if d.reverse_arc(w) != *out {
        return Err(FailedClause::ReversalMismatch);
    }
    let output = InterlacementGraph::of_diagram(out);
    if !graph::graphs_equal(&output, &graph::complement(&input)) {
        return Err(FailedClause::GraphMismatch);
    }
    Ok(())
}
