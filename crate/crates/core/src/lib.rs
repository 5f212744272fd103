//! Chord diagrams and the arc-reversal construction that turns a chord
//! representation of a graph with bipartite complement into a chord
//! representation of the complement.
//!
//! ```
//! use chordflip_core::{complement_representation, emit_dow, parse_dow};
//!
//! let d = parse_dow("a b a c b d c d").unwrap();
//! let (out, cert) = complement_representation(&d).unwrap();
//! assert_eq!(emit_dow(&out), "a b d b c a c d");
//! assert_eq!(cert.window.start, 2);
//! ```

pub mod bisector;
pub mod diagram;
pub mod graph;
pub mod oracle;
pub mod pipeline;
pub mod render;

pub use bisector::{
    balance_profile, brute_force_bisecting_windows, find_bisecting_window, is_transversal, BalanceProfile,
    BisectorError, ColorSequence,
};
pub use diagram::{
    emit_dow, parse_dow, BoundaryStatus, Chord, ChordDiagram, DiagramError, DiagramJson, Window,
};
pub use graph::{
    complement, graphs_equal, two_color_complement, ChordColoring, Color, GraphError, InterlacementGraph,
};
pub use pipeline::{complement_representation, verify_certificate, FailedClause, FlipCertificate, PipelineError};

/// The interlacement (crossing) graph of a diagram's chords.
pub fn interlacement_graph(d: &ChordDiagram) -> InterlacementGraph {
    InterlacementGraph::of_diagram(d)
}
