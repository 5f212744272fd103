//! Labelled simple graphs over chord labels, complementation, and the
//! 2-colouring of a complement.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{endpoints_cross, ChordDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("adjacency of `{0}` and `{1}` is not symmetric")]
    Asymmetric(String, String),
    /// `u` and `v` received the same colour but are not adjacent, so the
    /// complement contains an odd cycle through them.
    #[error("complement is not bipartite: `{0}` and `{1}` are forced into the same class without crossing")]
    NotBipartite(String, String),
}

/// An undirected simple graph whose vertices are chord labels, kept in
/// sorted label order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "AdjacencyLists", try_from = "AdjacencyLists")]
pub struct InterlacementGraph {
    vertices: Vec<String>,
    // sorted neighbour indices
    adj: Vec<Vec<usize>>,
    #[serde(skip)]
    index: HashMap<String, usize>,
}

/// Sorted adjacency lists keyed by label; the serialized form of a graph.
pub type AdjacencyLists = BTreeMap<String, Vec<String>>;

impl InterlacementGraph {
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String)>,
    {
        let mut vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        vertices.sort();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0].clone()));
        }
        let index: HashMap<String, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        let mut adj = vec![Vec::new(); vertices.len()];
        for (u, v) in edges {
            let iu = *index.get(&u).ok_or_else(|| GraphError::UnknownVertex(u.clone()))?;
            let iv = *index.get(&v).ok_or_else(|| GraphError::UnknownVertex(v.clone()))?;
            if iu == iv {
                return Err(GraphError::SelfLoop(u));
            }
            adj[iu].push(iv);
            adj[iv].push(iu);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(InterlacementGraph { vertices, adj, index })
    }

    fn from_parts(vertices: Vec<String>, adj: Vec<Vec<usize>>) -> Self {
        let index = vertices.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        InterlacementGraph { vertices, adj, index }
    }

    /// The intersection graph of the chords of `d`.
    pub fn of_diagram(d: &ChordDiagram) -> Self {
        let mut chords: Vec<_> = d.chords().iter().collect();
        chords.sort_by(|a, b| a.label.cmp(&b.label));
        let mut adj = vec![Vec::new(); chords.len()];
        for i in 0..chords.len() {
            for j in i + 1..chords.len() {
                if endpoints_cross(chords[i].endpoints, chords[j].endpoints) {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        let vertices = chords.into_iter().map(|c| c.label.clone()).collect();
        Self::from_parts(vertices, adj)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn has_edge_idx(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.vertex_index(u), self.vertex_index(v)) {
            (Some(i), Some(j)) => self.has_edge_idx(i, j),
            _ => false,
        }
    }

    /// Edges as label pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(&str, &str)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for (i, list) in self.adj.iter().enumerate() {
            for &j in list.iter().filter(|&&j| j > i) {
                out.push((self.vertices[i].as_str(), self.vertices[j].as_str()));
            }
        }
        out
    }

    pub fn adjacency_lists(&self) -> AdjacencyLists {
        self.vertices
            .iter()
            .zip(&self.adj)
            .map(|(v, list)| (v.clone(), list.iter().map(|&j| self.vertices[j].clone()).collect()))
            .collect()
    }

    /// Undirected DOT with vertices in label order and edges sorted.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in &self.vertices {
            let _ = writeln!(s, "  {};", dot_id(v));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  {} -- {};", dot_id(u), dot_id(v));
        }
        s.push_str("}\n");
        s
    }
}

impl From<InterlacementGraph> for AdjacencyLists {
    fn from(g: InterlacementGraph) -> Self {
        g.adjacency_lists()
    }
}

impl TryFrom<AdjacencyLists> for InterlacementGraph {
    type Error = GraphError;

    fn try_from(lists: AdjacencyLists) -> Result<Self, Self::Error> {
        let g = InterlacementGraph::new(
            lists.keys().cloned(),
            lists.iter().flat_map(|(u, vs)| vs.iter().map(move |v| (u.clone(), v.clone()))),
        )?;
        // every listed edge must be listed from both ends
        for (u, vs) in &lists {
            for v in vs {
                if !lists[v].contains(u) {
                    return Err(GraphError::Asymmetric(u.clone(), v.clone()));
                }
            }
        }
        Ok(g)
    }
}

fn dot_id(label: &str) -> String {
    let plain = !label.is_empty()
        && label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !label.starts_with(|c: char| c.is_ascii_digit());
    if plain {
        label.to_string()
    } else {
        format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

pub fn complement(g: &InterlacementGraph) -> InterlacementGraph {
    let n = g.len();
    let mut adj = vec![Vec::new(); n];
    for (i, list) in adj.iter_mut().enumerate() {
        let mut it = g.adj[i].iter().peekable();
        for j in 0..n {
            if it.peek() == Some(&&j) {
                it.next();
            } else if j != i {
                list.push(j);
            }
        }
    }
    InterlacementGraph::from_parts(g.vertices.clone(), adj)
}

/// Label-preserving equality (not isomorphism).
pub fn graphs_equal(g1: &InterlacementGraph, g2: &InterlacementGraph) -> bool {
    g1.vertices == g2.vertices && g1.adj == g2.adj
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "R")]
    Red,
    #[serde(rename = "B")]
    Blue,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Color> {
        match c {
            'R' | 'r' => Some(Color::Red),
            'B' | 'b' => Some(Color::Blue),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Red/blue assignment to chord labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChordColoring(pub BTreeMap<String, Color>);

impl ChordColoring {
    pub fn get(&self, label: &str) -> Option<Color> {
        self.0.get(label).copied()
    }

    pub fn class(&self, color: Color) -> impl Iterator<Item = &str> {
        self.0.iter().filter(move |(_, &c)| c == color).map(|(l, _)| l.as_str())
    }

    /// True iff every pair of same-coloured vertices is adjacent in `g`
    /// and the colouring covers exactly the vertices of `g`.
    pub fn classes_are_cliques(&self, g: &InterlacementGraph) -> bool {
        if self.0.len() != g.len() || g.vertices().iter().any(|v| !self.0.contains_key(v)) {
            return false;
        }
        let colors: Vec<Color> = g.vertices().iter().map(|v| self.0[v]).collect();
        let red = colors.iter().filter(|&&c| c == Color::Red).count();
        let size = |c: Color| if c == Color::Red { red } else { colors.len() - red };
        (0..g.len()).all(|i| {
            let same = g.neighbors(i).iter().filter(|&&j| colors[j] == colors[i]).count();
            same + 1 == size(colors[i])
        })
    }
}

impl FromIterator<(String, Color)> for ChordColoring {
    fn from_iter<I: IntoIterator<Item = (String, Color)>>(iter: I) -> Self {
        ChordColoring(iter.into_iter().collect())
    }
}

/// Properly 2-colours `complement(g)` without building it.
///
/// Vertices are visited in label order; each component of the complement
/// gets its first vertex coloured red and colours alternate by BFS layer.
/// The traversal keeps a pool of unvisited vertices and, for the vertex being
/// expanded, moves every pooled vertex that is *not* a neighbour in `g` into
/// the next layer. Each pool probe either removes a vertex or is paid for by
/// an edge of `g`, so the whole pass is O(V + E).
pub fn two_color_complement(g: &InterlacementGraph) -> Result<ChordColoring, GraphError> {
    let n = g.len();
    let mut color: Vec<Option<Color>> = vec![None; n];
    // pool of unvisited vertices, kept in label order
    let mut pool: VecDeque<usize> = (0..n).collect();
    let mut mark = vec![usize::MAX; n];
    let mut queue = VecDeque::new();

    while let Some(root) = pool.pop_front() {
        color[root] = Some(Color::Red);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                mark[v] = u;
            }
            let next = color[u].map(Color::flip);
            pool.retain(|&v| {
                if mark[v] == u {
                    true
                } else {
                    color[v] = next;
                    queue.push_back(v);
                    false
                }
            });
        }
    }

    let colors: Vec<Color> = color.into_iter().map(|c| c.expect("every vertex visited")).collect();
    // The BFS colouring is proper on tree edges; any remaining complement edge
    // inside a class closes an odd cycle. A class is clean iff it is a clique in g.
    let red = colors.iter().filter(|&&c| c == Color::Red).count();
    for i in 0..n {
        let size = if colors[i] == Color::Red { red } else { n - red };
        let same = g.neighbors(i).iter().filter(|&&j| colors[j] == colors[i]).count();
        if same + 1 != size {
            let j = (0..n)
                .find(|&j| j != i && colors[j] == colors[i] && !g.has_edge_idx(i, j))
                .expect("a same-coloured non-neighbour exists");
            return Err(GraphError::NotBipartite(g.vertices[i].clone(), g.vertices[j].clone()));
        }
    }
    Ok(g.vertices.iter().cloned().zip(colors).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_dow;

    fn graph(vs: &[&str], es: &[(&str, &str)]) -> InterlacementGraph {
        InterlacementGraph::new(
            vs.iter().copied(),
            es.iter().map(|(a, b)| (a.to_string(), b.to_string())),
        )
        .unwrap()
    }

    fn path4() -> InterlacementGraph {
        graph(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")])
    }

    #[test]
    fn interlacement_of_words() {
        let g = InterlacementGraph::of_diagram(&parse_dow("a b a b").unwrap());
        assert_eq!(g.edges(), vec![("a", "b")]);
        let g = InterlacementGraph::of_diagram(&parse_dow("a a b b").unwrap());
        assert_eq!(g.len(), 2);
        assert_eq!(g.num_edges(), 0);
        let g = InterlacementGraph::of_diagram(&parse_dow("a b a c b d c d").unwrap());
        assert!(graphs_equal(&g, &path4()));
    }

    #[test]
    fn complement_examples() {
        let e = complement(&graph(&["a", "b"], &[("a", "b")]));
        assert_eq!(e.num_edges(), 0);
        let k3 = complement(&graph(&["a", "b", "c"], &[]));
        assert_eq!(k3.edges(), vec![("a", "b"), ("a", "c"), ("b", "c")]);
        let c = complement(&path4());
        assert_eq!(c.edges(), vec![("a", "c"), ("a", "d"), ("b", "d")]);
        assert_eq!(complement(&c), path4());
    }

    #[test]
    fn two_coloring_examples() {
        let col = two_color_complement(&graph(&["a", "b"], &[("a", "b")])).unwrap();
        assert_eq!(col.get("a"), Some(Color::Red));
        assert_eq!(col.get("b"), Some(Color::Red));

        let col = two_color_complement(&path4()).unwrap();
        let got: Vec<char> = ["a", "b", "c", "d"].iter().map(|l| col.get(l).unwrap().as_char()).collect();
        assert_eq!(got, vec!['R', 'R', 'B', 'B']);
        assert!(col.classes_are_cliques(&path4()));

        let err = two_color_complement(&graph(&["a", "b", "c"], &[])).unwrap_err();
        assert!(matches!(err, GraphError::NotBipartite(..)));
    }

    #[test]
    fn empty_graph_colors_trivially() {
        let g = graph(&[], &[]);
        assert!(two_color_complement(&g).unwrap().0.is_empty());
    }

    #[test]
    fn equality_is_label_preserving() {
        let g = path4();
        assert!(graphs_equal(&g, &g));
        assert!(!graphs_equal(&graph(&["a", "b"], &[("a", "b")]), &graph(&["a", "b"], &[])));
        let x = InterlacementGraph::of_diagram(&parse_dow("a b a b").unwrap());
        let y = InterlacementGraph::of_diagram(&parse_dow("b a b a").unwrap());
        assert!(graphs_equal(&x, &y));
        // same shape, different labels
        assert!(!graphs_equal(&g, &graph(&["a", "b", "c", "e"], &[("a", "b"), ("b", "c"), ("c", "e")])));
    }

    #[test]
    fn construction_errors() {
        let e = |a: &str, b: &str| (a.to_string(), b.to_string());
        assert_eq!(
            InterlacementGraph::new(["a", "a"], std::iter::empty()).unwrap_err(),
            GraphError::DuplicateVertex("a".into())
        );
        assert_eq!(InterlacementGraph::new(["a"], [e("a", "a")]).unwrap_err(), GraphError::SelfLoop("a".into()));
        assert_eq!(InterlacementGraph::new(["a"], [e("a", "z")]).unwrap_err(), GraphError::UnknownVertex("z".into()));
    }

    #[test]
    fn dot_and_json() {
        let g = path4();
        assert_eq!(g.to_dot(), "graph G {\n  a;\n  b;\n  c;\n  d;\n  a -- b;\n  b -- c;\n  c -- d;\n}\n");
        let j = serde_json::to_string(&g).unwrap();
        assert_eq!(j, r#"{"a":["b"],"b":["a","c"],"c":["b","d"],"d":["c"]}"#);
        let back: InterlacementGraph = serde_json::from_str(&j).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<InterlacementGraph>(r#"{"a":["b"],"b":[]}"#).is_err());
        assert_eq!(dot_id("1x"), "\"1x\"");
    }
}
