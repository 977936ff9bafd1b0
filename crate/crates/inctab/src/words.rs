//! Schroeder paths, height words, and promotion in path language.

use crate::tableau::{IncreasingTableau, ShapeRequirement};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// A single step of a Schroeder path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchroederStep {
    Up,
    Down,
    Level,
}

impl SchroederStep {
    pub fn to_char(self) -> char {
        match self {
            SchroederStep::Up => 'U',
            SchroederStep::Down => 'D',
            SchroederStep::Level => 'H',
        }
    }
}

/// Ways a step sequence or height word can fail to be a small Schroeder path.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("unknown step character {0:?}; expected U, D, or H")]
    UnknownStep(char),
    #[error("path dips below the axis at step {step}")]
    BelowAxis { step: usize },
    #[error("level step on the axis at step {step}")]
    LevelOnAxis { step: usize },
    #[error("path ends at height {height} instead of returning to the axis")]
    DoesNotReturn { height: u32 },
    #[error("height word must start at 0, got {0}")]
    BadStart(u32),
    #[error("consecutive heights at position {pos} differ by more than one")]
    BigJump { pos: usize },
    #[error("a height word needs at least three entries, got {0}")]
    TooShort(usize),
}

/// The steps of a small Schroeder path: up, down, and level steps that
/// start and end on the horizontal axis, never dip below it, and never
/// place a level step on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchroederStepSeq {
    steps: Vec<SchroederStep>,
}

impl SchroederStepSeq {
    pub fn new(steps: Vec<SchroederStep>) -> Result<Self, PathError> {
        let mut h: u32 = 0;
        for (i, s) in steps.iter().enumerate() {
            match s {
                SchroederStep::Up => h += 1,
                SchroederStep::Down => {
                    if h == 0 {
                        return Err(PathError::BelowAxis { step: i });
                    }
                    h -= 1;
                }
                SchroederStep::Level => {
                    if h == 0 {
                        return Err(PathError::LevelOnAxis { step: i });
                    }
                }
            }
        }
        if h != 0 {
            return Err(PathError::DoesNotReturn { height: h });
        }
        Ok(SchroederStepSeq { steps })
    }

    pub fn steps(&self) -> &[SchroederStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Node heights along the path, one more entry than there are steps.
    pub fn heights(&self) -> HeightWord {
        let mut h = 0u32;
        let mut word = Vec::with_capacity(self.steps.len() + 1);
        word.push(0);
        for s in &self.steps {
            match s {
                SchroederStep::Up => h += 1,
                SchroederStep::Down => h -= 1,
                SchroederStep::Level => {}
            }
            word.push(h);
        }
        HeightWord::new(word).expect("heights of a valid path form a valid word")
    }
}

impl fmt::Display for SchroederStepSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for SchroederStepSeq {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, PathError> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(SchroederStep::Up),
                'D' | 'd' => Ok(SchroederStep::Down),
                'H' | 'h' => Ok(SchroederStep::Level),
                other => Err(PathError::UnknownStep(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        SchroederStepSeq::new(steps)
    }
}

/// The node heights of a small Schroeder path: a word that starts and ends
/// at 0, moves by at most one per position, stays nonnegative, and never
/// repeats a height at level 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeightWord {
    word: Vec<u32>,
}

impl HeightWord {
    pub fn new(word: Vec<u32>) -> Result<Self, PathError> {
        if word.len() < 3 {
            return Err(PathError::TooShort(word.len()));
        }
        if word[0] != 0 {
            return Err(PathError::BadStart(word[0]));
        }
        for pos in 1..word.len() {
            let (a, b) = (word[pos - 1], word[pos]);
            if a.abs_diff(b) > 1 {
                return Err(PathError::BigJump { pos });
            }
            if a == 0 && b == 0 {
                return Err(PathError::LevelOnAxis { step: pos - 1 });
            }
        }
        if *word.last().unwrap() != 0 {
            return Err(PathError::DoesNotReturn { height: *word.last().unwrap() });
        }
        Ok(HeightWord { word })
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.word
    }

    /// Number of letters, one more than the underlying path length.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of level steps, the repeat count of the matching tableau.
    pub fn level_count(&self) -> usize {
        self.word.windows(2).filter(|w| w[0] == w[1]).count()
    }

    pub fn reversed(&self) -> HeightWord {
        let mut word = self.word.clone();
        word.reverse();
        HeightWord::new(word).expect("reversal preserves validity")
    }

    pub fn to_steps(&self) -> SchroederStepSeq {
        let steps = self
            .word
            .windows(2)
            .map(|w| match w[1].cmp(&w[0]) {
                std::cmp::Ordering::Greater => SchroederStep::Up,
                std::cmp::Ordering::Less => SchroederStep::Down,
                std::cmp::Ordering::Equal => SchroederStep::Level,
            })
            .collect();
        SchroederStepSeq::new(steps).expect("a valid word yields a valid path")
    }
}

impl fmt::Display for HeightWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, h) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{h}")?;
        }
        Ok(())
    }
}

impl FromStr for HeightWord {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let word = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        HeightWord::new(word).map_err(|e| e.to_string())
    }
}

/// Encodes a two-row rectangular tableau as a path: value `j` becomes an
/// up step when it lies only in the first row, a down step when only in
/// the second, and a level step when in both.
pub fn to_steps(t: &IncreasingTableau) -> Result<SchroederStepSeq, ShapeRequirement> {
    if !t.is_two_row_rectangular() {
        return Err(ShapeRequirement::TwoRowRectangular { shape: t.shape() });
    }
    let steps = (1..=t.max_value())
        .map(|j| match (t.row_contains(0, j), t.row_contains(1, j)) {
            (true, false) => SchroederStep::Up,
            (false, true) => SchroederStep::Down,
            (true, true) => SchroederStep::Level,
            (false, false) => unreachable!("every value 1..=maxv appears"),
        })
        .collect();
    Ok(SchroederStepSeq::new(steps).expect("two-row tableaux encode valid paths"))
}

/// Rebuilds the two-row tableau from its path: the unique preimage places
/// value `j` in the first row for an up step, the second row for a down
/// step, and both rows for a level step.
pub fn from_steps(s: &SchroederStepSeq) -> IncreasingTableau {
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(), Vec::new()];
    for (i, step) in s.steps().iter().enumerate() {
        let v = i as u32 + 1;
        match step {
            SchroederStep::Up => rows[0].push(v),
            SchroederStep::Down => rows[1].push(v),
            SchroederStep::Level => {
                rows[0].push(v);
                rows[1].push(v);
            }
        }
    }
    IncreasingTableau::new(rows).expect("paths encode valid tableaux")
}

/// The height word of a two-row rectangular tableau. Position `i` equals
/// the difference of the row lengths of the shape occupied by entries at
/// most `i`, so the word can also be read off the truncation chain.
pub fn height_word(t: &IncreasingTableau) -> Result<HeightWord, ShapeRequirement> {
    Ok(to_steps(t)?.heights())
}

/// The unique split of a height word that drives promotion in path
/// language. Writing the word as `0 w1 0 w3` (flavor A) or
/// `0 w1 1 w2 0 w3` (flavor B): `w1` is strictly positive, ends in 1, and
/// never repeats a 1; `w2` is strictly positive, possibly empty; `w3` is
/// an arbitrary valid tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordFactorization {
    A { w1: Vec<u32>, w3: Vec<u32> },
    B { w1: Vec<u32>, w2: Vec<u32>, w3: Vec<u32> },
}

impl WordFactorization {
    /// Concatenates the pieces back into the original word.
    pub fn reassemble(&self) -> HeightWord {
        let mut word = vec![0u32];
        match self {
            WordFactorization::A { w1, w3 } => {
                word.extend_from_slice(w1);
                word.push(0);
                word.extend_from_slice(w3);
            }
            WordFactorization::B { w1, w2, w3 } => {
                word.extend_from_slice(w1);
                word.push(1);
                word.extend_from_slice(w2);
                word.push(0);
                word.extend_from_slice(w3);
            }
        }
        HeightWord::new(word).expect("factorization pieces reassemble the word")
    }

    /// Promotion in path language: `0 w1 0 w3` maps to `w1- 1 w3+ 0` and
    /// `0 w1 1 w2 0 w3` maps to `w1- 1 w2 1 w3+ 0`, where the minus and
    /// plus shift every letter down or up by one.
    pub fn promote(&self) -> HeightWord {
        let down = |w: &[u32]| w.iter().map(|&x| x - 1).collect::<Vec<_>>();
        let up = |w: &[u32]| w.iter().map(|&x| x + 1).collect::<Vec<_>>();
        let mut word = Vec::new();
        match self {
            WordFactorization::A { w1, w3 } => {
                word.extend(down(w1));
                word.push(1);
                word.extend(up(w3));
                word.push(0);
            }
            WordFactorization::B { w1, w2, w3 } => {
                word.extend(down(w1));
                word.push(1);
                word.extend_from_slice(w2);
                word.push(1);
                word.extend(up(w3));
                word.push(0);
            }
        }
        HeightWord::new(word).expect("promotion preserves validity")
    }
}

/// Splits a height word into its promotion factorization. The split point
/// is the first letter equal to 1 whose successor is at most 1; a 0
/// successor selects flavor A and a 1 successor selects flavor B.
pub fn word_factorize(w: &HeightWord) -> WordFactorization {
    let v = w.as_slice();
    let p = (1..v.len() - 1)
        .find(|&i| v[i] == 1 && v[i + 1] <= 1)
        .expect("every height word descends to its final 0 through a 1");
    let w1 = v[1..=p].to_vec();
    if v[p + 1] == 0 {
        WordFactorization::A { w1, w3: v[p + 2..].to_vec() }
    } else {
        let q = (p + 2..v.len())
            .find(|&i| v[i] == 0)
            .expect("every height word ends at 0");
        WordFactorization::B {
            w1,
            w2: v[p + 2..q].to_vec(),
            w3: v[q + 1..].to_vec(),
        }
    }
}

/// Promotion acting directly on height words.
pub fn word_promote(w: &HeightWord) -> HeightWord {
    word_factorize(w).promote()
}

/// The triangular array whose row `i` holds the first `len - i` letters of
/// the height word of the `i`-th promotion of the tableau. The first row
/// equals the last column, and the last column read bottom to top is the
/// height word of the evacuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightGrowthDiagram {
    rows: Vec<Vec<u32>>,
}

impl HeightGrowthDiagram {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Row `i` spans positions `i..len` of the underlying square array;
    /// this reads the final column, top to bottom.
    pub fn last_column(&self) -> Vec<u32> {
        self.rows.iter().map(|r| *r.last().expect("rows are nonempty")).collect()
    }

    /// The height word of the evacuation, read off the diagram.
    pub fn evacuation_word(&self) -> HeightWord {
        let mut col = self.last_column();
        col.reverse();
        HeightWord::new(col).expect("the reversed last column is a height word")
    }
}

/// Every valid height word with the given number of letters, for
/// exhaustive checks.
#[cfg(test)]
pub(crate) fn all_height_words(len: usize) -> Vec<HeightWord> {
    fn rec(cur: &mut Vec<u32>, len: usize, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            if *cur.last().unwrap() == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let h = *cur.last().unwrap();
        for next in h.saturating_sub(1)..=h + 1 {
            if next == 0 && h == 0 {
                continue;
            }
            cur.push(next);
            rec(cur, len, out);
            cur.pop();
        }
    }
    if len < 3 {
        return Vec::new();
    }
    let mut raw = Vec::new();
    rec(&mut vec![0], len, &mut raw);
    raw.into_iter()
        .map(|w| HeightWord::new(w).expect("the walk only emits valid words"))
        .collect()
}

/// Builds the height growth diagram by repeated word promotion.
pub fn height_growth_diagram(t: &IncreasingTableau) -> Result<HeightGrowthDiagram, ShapeRequirement> {
    let mut w = height_word(t)?;
    let len = w.len();
    let mut rows = Vec::with_capacity(len);
    for i in 0..len {
        rows.push(w.as_slice()[..len - i].to_vec());
        if i + 1 < len {
            w = word_promote(&w);
        }
    }
    Ok(HeightGrowthDiagram { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[u32]]) -> IncreasingTableau {
        IncreasingTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn steps_and_heights_of_a_two_row_tableau() {
        let x = t(&[&[1, 2, 4, 5, 6], &[2, 3, 6, 7, 8]]);
        let s = to_steps(&x).unwrap();
        assert_eq!(s.to_string(), "UHDUUHDD");
        assert_eq!(s.heights().as_slice(), &[0, 1, 1, 0, 1, 2, 2, 1, 0]);
        assert_eq!(from_steps(&s), x);
    }

    #[test]
    fn height_word_matches_row_length_differences() {
        for n in 1..=5 {
            for k in 0..n {
                for x in crate::enumerate::enumerate_two_row(n, k) {
                    let w = height_word(&x).unwrap();
                    let diffs: Vec<u32> = (0..=x.max_value())
                        .map(|j| {
                            let s = x.truncate(j);
                            (s.row_len(0) - s.row_len(1)) as u32
                        })
                        .collect();
                    assert_eq!(w.as_slice(), &diffs[..]);
                }
            }
        }
    }

    #[test]
    fn parse_and_reject_paths() {
        assert!("UHDD".parse::<SchroederStepSeq>().is_err());
        assert!("HUD".parse::<SchroederStepSeq>().is_err());
        assert!("UU".parse::<SchroederStepSeq>().is_err());
        assert!("UHDUUHDD".parse::<SchroederStepSeq>().is_ok());
        assert!(HeightWord::new(vec![0, 0, 1, 0]).is_err());
        assert!(HeightWord::new(vec![0, 2, 0]).is_err());
    }

    #[test]
    fn factorization_of_the_running_example() {
        let w = HeightWord::new(vec![0, 1, 1, 0, 1, 2, 2, 1, 0]).unwrap();
        let f = word_factorize(&w);
        assert_eq!(
            f,
            WordFactorization::B { w1: vec![1], w2: vec![], w3: vec![1, 2, 2, 1, 0] }
        );
        assert_eq!(f.reassemble(), w);
        assert_eq!(f.promote().as_slice(), &[0, 1, 1, 2, 3, 3, 2, 1, 0]);
    }

    #[test]
    fn flavor_a_example() {
        let w = HeightWord::new(vec![0, 1, 2, 3, 2, 2, 1, 0]).unwrap();
        let f = word_factorize(&w);
        assert_eq!(
            f,
            WordFactorization::A { w1: vec![1, 2, 3, 2, 2, 1], w3: vec![] }
        );
        assert_eq!(f.promote().as_slice(), &[0, 1, 2, 1, 1, 0, 1, 0]);
    }

    #[test]
    fn smallest_word_is_a_fixed_point() {
        let w = HeightWord::new(vec![0, 1, 0]).unwrap();
        assert_eq!(word_promote(&w), w);
    }

    #[test]
    fn factorizations_are_unique_for_short_words() {
        // Scan every valid height word of length at most 13 and count the
        // candidate splits satisfying the side conditions; there must be
        // exactly one each.
        fn w1_ok(w1: &[u32]) -> bool {
            !w1.is_empty()
                && w1.iter().all(|&x| x > 0)
                && *w1.last().unwrap() == 1
                && !w1.windows(2).any(|p| p == [1, 1])
        }
        for len in 3..=13 {
            for hw in all_height_words(len) {
                let word = hw.as_slice().to_vec();
                let mut count = 0;
                // Candidate flavor A splits: 0 w1 0 w3.
                for zero in 2..word.len() {
                    if word[zero] == 0 && w1_ok(&word[1..zero]) {
                        count += 1;
                    }
                }
                // Candidate flavor B splits: 0 w1 1 w2 0 w3.
                for one in 2..word.len() {
                    if word[one] != 1 {
                        continue;
                    }
                    if !w1_ok(&word[1..one]) {
                        continue;
                    }
                    for zero in one + 1..word.len() {
                        if word[zero] == 0 {
                            if word[one + 1..zero].iter().all(|&x| x > 0) {
                                count += 1;
                            }
                            break;
                        }
                    }
                }
                assert_eq!(count, 1, "word {word:?} admits {count} factorizations");
                assert_eq!(word_factorize(&hw).reassemble(), hw);
            }
        }
    }

    #[test]
    fn reversal_flips_the_path() {
        let w = HeightWord::new(vec![0, 1, 1, 0, 1, 2, 2, 1, 0]).unwrap();
        assert_eq!(w.reversed().as_slice(), &[0, 1, 2, 2, 1, 0, 1, 1, 0]);
    }
}
