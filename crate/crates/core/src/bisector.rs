//! Simultaneous bisection of two point classes on a circle by a window of
//! half the circle, and the transversality check that goes with it.
//!
//! With `2n` coloured positions, `f(i)` is the number of red positions in the
//! window of length `n` starting at `i`, minus half the red total. Sliding the
//! window one step changes `f` by at most one and `f(i + n) = -f(i)`, so `f`
//! has a zero somewhere in `0..=n`; a zero window holds exactly half of each
//! colour.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{BoundaryStatus, ChordDiagram, Window};
use crate::graph::{ChordColoring, Color};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BisectorError {
    #[error("color class has odd size ({red} red of {len} positions)")]
    OddClass { red: usize, len: usize },
    #[error("color sequence has odd length {0}")]
    OddLength(usize),
    #[error("invalid color character `{0}` (expected R or B)")]
    BadColor(char),
    #[error("chord `{0}` has no color")]
    Uncolored(String),
}

/// The colour of the chord owning each position, in position order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColorSequence(pub Vec<Color>);

impl ColorSequence {
    pub fn from_coloring(d: &ChordDiagram, coloring: &ChordColoring) -> Result<Self, BisectorError> {
        (0..d.circumference())
            .map(|p| {
                let label = d.label_at(p);
                coloring.get(label).ok_or_else(|| BisectorError::Uncolored(label.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(ColorSequence)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn red_count(&self) -> usize {
        self.0.iter().filter(|&&c| c == Color::Red).count()
    }

    fn check(&self) -> Result<usize, BisectorError> {
        let len = self.len();
        if len % 2 != 0 {
            return Err(BisectorError::OddLength(len));
        }
        let red = self.red_count();
        if red % 2 != 0 {
            return Err(BisectorError::OddClass { red, len });
        }
        Ok(red)
    }
}

impl fmt::Display for ColorSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

impl FromStr for ColorSequence {
    type Err = BisectorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .chars()
            .map(|c| Color::from_char(c).ok_or(BisectorError::BadColor(c)))
            .collect::<Result<Vec<_>, _>>()
            .map(ColorSequence)
    }
}

/// `f(0), ..., f(2n-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BalanceProfile(pub Vec<i64>);

impl BalanceProfile {
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn first_zero(&self) -> Option<usize> {
        self.0.iter().position(|&v| v == 0)
    }
}

/// Sliding-window computation of the balance profile, O(1) per step.
pub fn balance_profile(c: &ColorSequence) -> Result<BalanceProfile, BisectorError> {
    let red_total = c.check()? as i64;
    let m = c.len();
    let n = m / 2;
    if m == 0 {
        return Ok(BalanceProfile(Vec::new()));
    }
    let is_red = |p: usize| i64::from(c.0[p % m] == Color::Red);
    let half = red_total / 2;
    let mut count: i64 = (0..n).map(is_red).sum();
    let mut values = Vec::with_capacity(m);
    for i in 0..m {
        values.push(count - half);
        count += is_red(i + n) - is_red(i);
    }
    Ok(BalanceProfile(values))
}

/// The window of length `n` with the smallest start whose balance is zero.
pub fn find_bisecting_window(c: &ColorSequence) -> Result<Window, BisectorError> {
    let profile = balance_profile(c)?;
    Ok(bisecting_window_from_profile(&profile))
}

pub(crate) fn bisecting_window_from_profile(profile: &BalanceProfile) -> Window {
    let m = profile.0.len();
    if m == 0 {
        return Window::empty();
    }
    let start = profile
        .first_zero()
        .expect("a balance profile with even classes always has a zero");
    debug_assert!(start <= m / 2);
    Window::new(start, m / 2)
}

/// All window starts with zero balance, each counted directly without
/// sliding updates.
pub fn brute_force_bisecting_windows(c: &ColorSequence) -> Result<Vec<usize>, BisectorError> {
    let red_total = c.check()?;
    let m = c.len();
    let n = m / 2;
    Ok((0..m)
        .filter(|&i| {
            let reds = (0..n).filter(|k| c.0[(i + k) % m] == Color::Red).count();
            2 * reds == red_total
        })
        .collect())
}

/// True iff every chord has exactly one endpoint inside `w`.
pub fn is_transversal(d: &ChordDiagram, w: &Window) -> bool {
    d.chords().iter().all(|ch| d.chord_status(w, ch) == BoundaryStatus::Crossing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_dow;

    fn seq(s: &str) -> ColorSequence {
        s.parse().unwrap()
    }

    #[test]
    fn profile_examples() {
        assert_eq!(balance_profile(&seq("RRBB")).unwrap().0, vec![1, 0, -1, 0]);
        assert_eq!(balance_profile(&seq("RRRR")).unwrap().0, vec![0, 0, 0, 0]);
        assert_eq!(balance_profile(&seq("RRRBRBBB")).unwrap().0, vec![1, 1, 0, -1, -1, -1, 0, 1]);
        assert_eq!(balance_profile(&seq("")).unwrap().0, Vec::<i64>::new());
    }

    #[test]
    fn window_examples() {
        assert_eq!(find_bisecting_window(&seq("RRBB")).unwrap(), Window::new(1, 2));
        assert_eq!(find_bisecting_window(&seq("RRRR")).unwrap(), Window::new(0, 2));
        assert_eq!(find_bisecting_window(&seq("RRRBRBBB")).unwrap(), Window::new(2, 4));
        assert_eq!(find_bisecting_window(&seq("")).unwrap(), Window::empty());
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_bisecting_windows(&seq("RRBB")).unwrap(), vec![1, 3]);
        assert_eq!(brute_force_bisecting_windows(&seq("RRRR")).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(brute_force_bisecting_windows(&seq("RBRB")).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn odd_inputs_rejected() {
        assert_eq!(balance_profile(&seq("RB")), Err(BisectorError::OddClass { red: 1, len: 2 }));
        assert_eq!(find_bisecting_window(&seq("RRB")), Err(BisectorError::OddLength(3)));
        assert_eq!(brute_force_bisecting_windows(&seq("RBBB")), Err(BisectorError::OddClass { red: 1, len: 4 }));
        assert_eq!("RXB".parse::<ColorSequence>(), Err(BisectorError::BadColor('X')));
    }

    #[test]
    fn transversal_examples() {
        assert!(is_transversal(&parse_dow("a b a b").unwrap(), &Window::new(0, 2)));
        assert!(!is_transversal(&parse_dow("a a b b").unwrap(), &Window::new(0, 2)));
        assert!(is_transversal(&parse_dow("a b a c b d c d").unwrap(), &Window::new(2, 4)));
        assert!(is_transversal(&ChordDiagram::empty(), &Window::empty()));
    }

    #[test]
    fn sequence_from_coloring() {
        let d = parse_dow("a b a c b d c d").unwrap();
        let col: ChordColoring = [("a", Color::Red), ("b", Color::Red), ("c", Color::Blue), ("d", Color::Blue)]
            .into_iter()
            .map(|(l, c)| (l.to_string(), c))
            .collect();
        assert_eq!(ColorSequence::from_coloring(&d, &col).unwrap().to_string(), "RRRBRBBB");
        let partial: ChordColoring = [("a".to_string(), Color::Red)].into_iter().collect();
        assert_eq!(
            ColorSequence::from_coloring(&d, &partial),
            Err(BisectorError::Uncolored("b".into()))
        );
    }
}
