//! Generators and brute-force checks used as ground truth for small inputs.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bisector::ColorSequence;
use crate::diagram::{endpoints_cross, ChordDiagram};
use crate::graph::{ChordColoring, Color, InterlacementGraph};

/// Largest vertex count accepted by [`bipartite_complement_bruteforce`].
pub const BRUTEFORCE_MAX_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("empty point set")]
    EmptyInput,
    #[error("expected an even number of positions, got {0}")]
    BadParity(usize),
    #[error("position {pos} out of range for {circumference} positions")]
    OutOfRange { pos: usize, circumference: usize },
    #[error("position {0} listed twice")]
    DuplicatePosition(usize),
    #[error("graph has {0} vertices; brute force is limited to {BRUTEFORCE_MAX_VERTICES}")]
    TooLarge(usize),
}

/// A diagram together with a colouring in which same-coloured chords cross.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDiagram {
    pub diagram: ChordDiagram,
    pub coloring: ChordColoring,
}

/// Every perfect matching on `2n` positions, each exactly once.
///
/// The smallest unmatched position is paired, in turn, with each remaining
/// unmatched position; the choices form a mixed-radix counter with radices
/// `2n-1, 2n-3, ..., 1`. Labels are canonical (rank of the smaller endpoint).
pub fn enumerate_matchings(n: usize) -> Matchings {
    Matchings { n, choice: vec![0; n], done: false }
}

#[derive(Debug, Clone)]
pub struct Matchings {
    n: usize,
    choice: Vec<usize>,
    done: bool,
}

impl Matchings {
    fn decode(&self) -> Vec<usize> {
        let m = 2 * self.n;
        let mut free: Vec<usize> = (0..m).collect();
        let mut pairing = vec![0; m];
        for &c in &self.choice {
            let a = free.remove(0);
            let b = free.remove(c);
            pairing[a] = b;
            pairing[b] = a;
        }
        pairing
    }

    fn advance(&mut self) {
        for k in (0..self.n).rev() {
            let radix = 2 * (self.n - k) - 1;
            if self.choice[k] + 1 < radix {
                self.choice[k] += 1;
                return;
            }
            self.choice[k] = 0;
        }
        self.done = true;
    }
}

impl Iterator for Matchings {
    type Item = ChordDiagram;

    fn next(&mut self) -> Option<ChordDiagram> {
        if self.done {
            return None;
        }
        let d = ChordDiagram::from_pairing(self.decode()).expect("decoded pairing is an involution");
        self.advance();
        Some(d)
    }
}

/// `(2n-1)!!`, the number of perfect matchings on `2n` points.
pub fn double_factorial_odd(n: usize) -> u64 {
    (1..=n as u64).map(|k| 2 * k - 1).product()
}

fn sorted_distinct(points: &[usize]) -> Result<Vec<usize>, OracleError> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    if let Some(w) = pts.windows(2).find(|w| w[0] == w[1]) {
        return Err(OracleError::DuplicatePosition(w[0]));
    }
    Ok(pts)
}

/// The pairwise-crossing perfect matching on `points`: after sorting, the
/// `j`-th point is paired with the `(j + r)`-th. It is the only one.
pub fn unique_crossing_matching(points: &[usize]) -> Result<Vec<(usize, usize)>, OracleError> {
    if points.is_empty() {
        return Err(OracleError::EmptyInput);
    }
    if points.len() % 2 != 0 {
        return Err(OracleError::BadParity(points.len()));
    }
    let pts = sorted_distinct(points)?;
    let r = pts.len() / 2;
    Ok((0..r).map(|j| (pts[j], pts[j + r])).collect())
}

/// All perfect matchings on `points`, by exhaustive recursion.
pub fn all_matchings(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
    fn go(rest: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(acc.clone());
            return;
        };
        for i in 0..tail.len() {
            let mut remaining = tail.to_vec();
            let partner = remaining.remove(i);
            acc.push((first, partner));
            go(&remaining, acc, out);
            acc.pop();
        }
    }
    let mut pts = points.to_vec();
    pts.sort_unstable();
    let mut out = Vec::new();
    if pts.len() % 2 == 0 {
        go(&pts, &mut Vec::new(), &mut out);
    }
    out
}

pub fn is_pairwise_crossing(chords: &[(usize, usize)]) -> bool {
    chords
        .iter()
        .enumerate()
        .all(|(i, &u)| chords[i + 1..].iter().all(|&v| endpoints_cross(u, v)))
}

/// Brute force: every pairwise-crossing perfect matching on `points`.
pub fn crossing_matchings_bruteforce(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
    all_matchings(points).into_iter().filter(|m| is_pairwise_crossing(m)).collect()
}

/// Builds the unique diagram on `2n` positions whose red chords pairwise cross
/// on `red_set` and whose blue chords pairwise cross on the remaining positions.
pub fn gen_bicrossing_diagram(n: usize, red_set: &[usize]) -> Result<ColoredDiagram, OracleError> {
    let m = 2 * n;
    if let Some(&pos) = red_set.iter().find(|&&p| p >= m) {
        return Err(OracleError::OutOfRange { pos, circumference: m });
    }
    if red_set.len() % 2 != 0 {
        return Err(OracleError::BadParity(red_set.len()));
    }
    let red = sorted_distinct(red_set)?;
    let mut is_red = vec![false; m];
    for &p in &red {
        is_red[p] = true;
    }
    let blue: Vec<usize> = (0..m).filter(|&p| !is_red[p]).collect();

    let mut pairing = vec![0; m];
    for class in [&red, &blue] {
        if class.is_empty() {
            continue;
        }
        for (a, b) in unique_crossing_matching(class)? {
            pairing[a] = b;
            pairing[b] = a;
        }
    }
    let diagram = ChordDiagram::from_pairing(pairing).expect("class matchings form an involution");
    let coloring = diagram
        .chords()
        .iter()
        .map(|c| {
            let color = if is_red[c.endpoints.0] { Color::Red } else { Color::Blue };
            (c.label.clone(), color)
        })
        .collect();
    Ok(ColoredDiagram { diagram, coloring })
}

/// A reproducible colour sequence with an even number of reds.
///
/// The generator is ChaCha8 seeded with `seed_from_u64(seed)`. Position `p`
/// for `p < length - 1` is red iff the `p`-th `next_u32()` output is odd; the
/// last position is red iff that makes the red count even.
pub fn random_color_sequence(length: usize, seed: u64) -> Result<ColorSequence, OracleError> {
    if length % 2 != 0 {
        return Err(OracleError::BadParity(length));
    }
    if length == 0 {
        return Ok(ColorSequence(Vec::new()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut colors: Vec<Color> = (0..length - 1)
        .map(|_| if rng.next_u32() & 1 == 1 { Color::Red } else { Color::Blue })
        .collect();
    let reds = colors.iter().filter(|&&c| c == Color::Red).count();
    colors.push(if reds % 2 == 1 { Color::Red } else { Color::Blue });
    Ok(ColorSequence(colors))
}

/// Exhaustive search over all red/blue assignments for one in which both
/// classes are cliques of `g`.
pub fn bipartite_complement_bruteforce(g: &InterlacementGraph) -> Result<bool, OracleError> {
    let n = g.len();
    if n > BRUTEFORCE_MAX_VERTICES {
        return Err(OracleError::TooLarge(n));
    }
    let found = (0u32..1 << n).any(|mask| {
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let same = (mask >> i & 1) == (mask >> j & 1);
                !same || g.has_edge_idx(i, j)
            })
        })
    });
    Ok(found)
}
