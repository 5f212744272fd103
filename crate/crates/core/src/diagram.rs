//! Chord diagrams on `2n` cyclically ordered positions.
//!
//! A diagram is stored both as a fixed-point-free involution on positions
//! (`pairing`) and as a list of labelled chords. Positions are plain indices,
//! so two chords can never share an endpoint.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("word has an odd number of tokens ({0})")]
    OddLength(usize),
    #[error("label `{label}` occurs {count} times, expected exactly 2")]
    BadMultiplicity { label: String, count: usize },
    #[error("unknown chord label `{0}`")]
    UnknownLabel(String),
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
    #[error("JSON diagram: {0}")]
    Json(String),
}

/// A chord with its two endpoints, stored with `endpoints.0 < endpoints.1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chord {
    pub label: String,
    pub endpoints: (usize, usize),
}

impl Chord {
    pub fn contains(&self, pos: usize) -> bool {
        self.endpoints.0 == pos || self.endpoints.1 == pos
    }
}

/// A run of `length` consecutive positions starting at `start`, taken
/// cyclically modulo the circumference of the diagram it is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub start: usize,
    pub length: usize,
}

impl Window {
    pub fn new(start: usize, length: usize) -> Self {
        Window { start, length }
    }

    /// The window used for the empty diagram.
    pub fn empty() -> Self {
        Window { start: 0, length: 0 }
    }

    /// Checks `0 <= start < circumference` and `1 <= length < circumference`.
    /// The empty window is the only valid window on an empty circle.
    pub fn is_valid_for(&self, circumference: usize) -> bool {
        if circumference == 0 {
            return *self == Window::empty();
        }
        self.start < circumference && self.length >= 1 && self.length < circumference
    }

    /// Offset of `pos` from the window start, walking forward around the circle.
    fn offset(&self, pos: usize, circumference: usize) -> usize {
        (pos + circumference - self.start % circumference) % circumference
    }

    pub fn contains(&self, pos: usize, circumference: usize) -> bool {
        circumference > 0 && self.offset(pos, circumference) < self.length
    }

    /// Positions covered by the window, in traversal order.
    pub fn positions(&self, circumference: usize) -> impl Iterator<Item = usize> + '_ {
        let start = if circumference == 0 { 0 } else { self.start % circumference };
        (0..self.length).map(move |k| (start + k) % circumference)
    }

    /// The reflection of the window onto itself; identity outside it.
    pub fn reflect(&self, pos: usize, circumference: usize) -> usize {
        let off = self.offset(pos, circumference);
        if off < self.length {
            (self.start + (self.length - 1 - off)) % circumference
        } else {
            pos
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start, self.length)
    }
}

impl std::str::FromStr for Window {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once(':')
            .ok_or_else(|| format!("expected `start:length`, got `{s}`"))?;
        let start = a.trim().parse().map_err(|e| format!("window start: {e}"))?;
        let length = b.trim().parse().map_err(|e| format!("window length: {e}"))?;
        Ok(Window { start, length })
    }
}

/// Where a chord sits relative to a window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryStatus {
    Inside,
    Outside,
    Crossing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordDiagram {
    pairing: Vec<usize>,
    owner: Vec<usize>,
    chords: Vec<Chord>,
    index: HashMap<String, usize>,
}

impl ChordDiagram {
    /// Builds a diagram from a double occurrence word.
    pub fn from_word<S: AsRef<str>>(tokens: &[S]) -> Result<Self, DiagramError> {
        // A bad label count is the more specific report, so it wins over parity.
        if let Some(err) = multiplicity_error(tokens) {
            return Err(err);
        }
        if tokens.len() % 2 != 0 {
            return Err(DiagramError::OddLength(tokens.len()));
        }

        let mut first_seen: HashMap<&str, usize> = HashMap::new();
        let mut pairing = vec![usize::MAX; tokens.len()];
        for (pos, tok) in tokens.iter().enumerate() {
            let tok = tok.as_ref();
            if let Some(&other) = first_seen.get(tok) {
                pairing[pos] = other;
                pairing[other] = pos;
            } else {
                first_seen.insert(tok, pos);
            }
        }
        let labels = tokens.iter().map(|t| t.as_ref().to_string());
        Ok(Self::assemble(pairing, labels))
    }

    /// Builds a diagram from an involution, labelling chords canonically by
    /// the rank of their smaller endpoint (`a`, `b`, ...; see [`canonical_label`]).
    pub fn from_pairing(pairing: Vec<usize>) -> Result<Self, DiagramError> {
        let m = pairing.len();
        for (p, &q) in pairing.iter().enumerate() {
            if q >= m {
                return Err(DiagramError::InvalidPairing(format!(
                    "partner {q} of position {p} is out of range"
                )));
            }
            if q == p {
                return Err(DiagramError::InvalidPairing(format!("position {p} is a fixed point")));
            }
            if pairing[q] != p {
                return Err(DiagramError::InvalidPairing(format!(
                    "pairing is not an involution at position {p}"
                )));
            }
        }
        let mut labels = vec![String::new(); m];
        let mut rank = 0;
        for p in 0..m {
            if pairing[p] > p {
                let name = canonical_label(rank);
                labels[pairing[p]] = name.clone();
                labels[p] = name;
                rank += 1;
            }
        }
        Ok(Self::assemble(pairing, labels.into_iter()))
    }

    fn assemble(pairing: Vec<usize>, labels: impl Iterator<Item = String>) -> Self {
        let mut labels = labels;
        let mut owner = vec![usize::MAX; pairing.len()];
        let mut chords = Vec::with_capacity(pairing.len() / 2);
        let mut index = HashMap::with_capacity(pairing.len() / 2);
        for p in 0..pairing.len() {
            let label = labels.next().expect("one label per position");
            let q = pairing[p];
            if q > p {
                owner[p] = chords.len();
                owner[q] = chords.len();
                index.insert(label.clone(), chords.len());
                chords.push(Chord { label, endpoints: (p, q) });
            }
        }
        ChordDiagram { pairing, owner, chords, index }
    }

    pub fn empty() -> Self {
        Self::assemble(Vec::new(), std::iter::empty())
    }

    pub fn num_chords(&self) -> usize {
        self.chords.len()
    }

    /// Number of positions on the circle, `2n`.
    pub fn circumference(&self) -> usize {
        self.pairing.len()
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    pub fn partner(&self, pos: usize) -> usize {
        self.pairing[pos]
    }

    /// Chords in order of their first endpoint.
    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn chord(&self, label: &str) -> Result<&Chord, DiagramError> {
        self.index
            .get(label)
            .map(|&i| &self.chords[i])
            .ok_or_else(|| DiagramError::UnknownLabel(label.to_string()))
    }

    pub fn contains_label(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn label_at(&self, pos: usize) -> &str {
        &self.chords[self.owner[pos]].label
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.chords.iter().map(|c| c.label.as_str())
    }

    /// The double occurrence word, one label per position.
    pub fn word(&self) -> Vec<&str> {
        (0..self.circumference()).map(|p| self.label_at(p)).collect()
    }

    /// Whether chords `u` and `v` interleave around the circle.
    pub fn chords_cross(&self, u: &str, v: &str) -> Result<bool, DiagramError> {
        let cu = self.chord(u)?;
        let cv = self.chord(v)?;
        Ok(endpoints_cross(cu.endpoints, cv.endpoints))
    }

    pub fn boundary_status(&self, w: &Window, label: &str) -> Result<BoundaryStatus, DiagramError> {
        let c = self.chord(label)?;
        Ok(self.chord_status(w, c))
    }

    pub(crate) fn chord_status(&self, w: &Window, c: &Chord) -> BoundaryStatus {
        let m = self.circumference();
        match (w.contains(c.endpoints.0, m), w.contains(c.endpoints.1, m)) {
            (true, true) => BoundaryStatus::Inside,
            (false, false) => BoundaryStatus::Outside,
            _ => BoundaryStatus::Crossing,
        }
    }

    /// Reverses the order of positions inside `w`, carrying every chord
    /// endpoint along. Applying it twice with the same window is the identity.
    pub fn reverse_arc(&self, w: &Window) -> ChordDiagram {
        let m = self.circumference();
        if m == 0 {
            return self.clone();
        }
        let mut pairing = vec![0; m];
        let mut labels = vec![String::new(); m];
        for p in 0..m {
            let np = w.reflect(p, m);
            pairing[np] = w.reflect(self.pairing[p], m);
            labels[np] = self.label_at(p).to_string();
        }
        Self::assemble(pairing, labels.into_iter())
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit_dow(self))
    }
}

fn multiplicity_error<S: AsRef<str>>(tokens: &[S]) -> Option<DiagramError> {
    let mut counts: HashMap<&str, usize> = HashMap::new();
    let mut order = Vec::new();
    for t in tokens {
        let c = counts.entry(t.as_ref()).or_insert(0);
        if *c == 0 {
            order.push(t.as_ref());
        }
        *c += 1;
    }
    order
        .into_iter()
        .find(|l| counts[l] != 2)
        .map(|l| DiagramError::BadMultiplicity { label: l.to_string(), count: counts[l] })
}

/// Chords `(a, b)` and `(c, d)` cross iff exactly one of `c`, `d` lies
/// strictly between `a` and `b`.
pub fn endpoints_cross(u: (usize, usize), v: (usize, usize)) -> bool {
    let (a, b) = if u.0 < u.1 { u } else { (u.1, u.0) };
    let inside = |p: usize| a < p && p < b;
    inside(v.0) != inside(v.1)
}

/// Canonical chord names: `a`..`y`, then `za`..`zy`, `zza`, ... so that
/// lexicographic order of names agrees with rank.
pub fn canonical_label(rank: usize) -> String {
    let mut s = String::new();
    let mut r = rank;
    while r >= 25 {
        s.push('z');
        r -= 25;
    }
    s.push((b'a' + r as u8) as char);
    s
}

pub fn parse_dow(text: &str) -> Result<ChordDiagram, DiagramError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    ChordDiagram::from_word(&tokens)
}

pub fn emit_dow(d: &ChordDiagram) -> String {
    d.word().join(" ")
}

/// JSON form of a diagram: `{"n": .., "word": [..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub n: usize,
    pub word: Vec<String>,
}

impl From<&ChordDiagram> for DiagramJson {
    fn from(d: &ChordDiagram) -> Self {
        DiagramJson { n: d.num_chords(), word: d.word().into_iter().map(String::from).collect() }
    }
}

impl TryFrom<DiagramJson> for ChordDiagram {
    type Error = DiagramError;

    fn try_from(j: DiagramJson) -> Result<Self, Self::Error> {
        if j.word.len() != 2 * j.n {
            return Err(DiagramError::Json(format!(
                "\"n\" is {} but \"word\" has {} entries",
                j.n,
                j.word.len()
            )));
        }
        ChordDiagram::from_word(&j.word)
    }
}
