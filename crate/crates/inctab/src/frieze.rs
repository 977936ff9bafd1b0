//! Tropical frieze patterns with zero boundary rows, and the array of
//! sliding height words that realizes them.

use crate::dynamics::promote;
use crate::tableau::{IncreasingTableau, ShapeRequirement};
use crate::words::{height_word, HeightWord};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum FriezeError {
    #[error("a frieze row needs at least one entry")]
    EmptyRow,
    #[error("frieze rows must end in 0 on both sides, found {value}")]
    NonzeroEnd { value: i64 },
    #[error("row {row} has length {len}, expected {expected}")]
    RaggedRow { row: usize, len: usize, expected: usize },
    #[error("a frieze needs at least one row")]
    NoRows,
}

/// One application of the frieze rule. The new row keeps zero ends; each
/// interior entry is determined by its west, north, and northeast
/// neighbors in the glide layout.
pub fn next_frieze_row(prev: &[i64]) -> Vec<i64> {
    let l = prev.len();
    let mut next = vec![0i64; l];
    for y in 1..l.saturating_sub(1) {
        next[y] = (next[y - 1] + prev[y + 1]).max(0) - prev[y];
    }
    next
}

fn check_row(row: &[i64]) -> Result<(), FriezeError> {
    if row.is_empty() {
        return Err(FriezeError::EmptyRow);
    }
    if row[0] != 0 {
        return Err(FriezeError::NonzeroEnd { value: row[0] });
    }
    if *row.last().unwrap() != 0 {
        return Err(FriezeError::NonzeroEnd { value: *row.last().unwrap() });
    }
    Ok(())
}

/// A tropical frieze: rows of equal width whose two boundary entries are
/// zero, drawn with row `i` shifted `i` columns right, so that whole rows
/// repeat with period width + 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalFrieze {
    rows: Vec<Vec<i64>>,
}

impl TropicalFrieze {
    /// Grows a frieze from a seed row by repeating the frieze rule.
    pub fn from_seed(seed: Vec<i64>, depth: usize) -> Result<Self, FriezeError> {
        check_row(&seed)?;
        if depth == 0 {
            return Err(FriezeError::NoRows);
        }
        let mut rows = Vec::with_capacity(depth);
        rows.push(seed);
        while rows.len() < depth {
            rows.push(next_frieze_row(rows.last().unwrap()));
        }
        Ok(TropicalFrieze { rows })
    }

    /// Wraps precomputed rows; widths and zero ends are validated, the
    /// frieze rule is not.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, FriezeError> {
        if rows.is_empty() {
            return Err(FriezeError::NoRows);
        }
        let expected = rows[0].len();
        for (i, row) in rows.iter().enumerate() {
            check_row(row)?;
            if row.len() != expected {
                return Err(FriezeError::RaggedRow { row: i, len: row.len(), expected });
            }
        }
        Ok(TropicalFrieze { rows })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    /// Rows repeat with this period.
    pub fn glide_period(&self) -> usize {
        self.width() + 1
    }

    /// Whether every consecutive pair of rows obeys the frieze rule.
    pub fn satisfies_rule(&self) -> bool {
        self.rows
            .windows(2)
            .all(|pair| pair[1] == next_frieze_row(&pair[0]))
    }
}

/// The frieze realized by a two-row rectangular tableau: row `i` is the
/// height word of the `i`-th promotion with the boundary letters dropped
/// and every letter lowered by one. There are max entry + 1 rows.
pub fn jdt_frieze(t: &IncreasingTableau) -> Result<TropicalFrieze, ShapeRequirement> {
    let mut cur = t.clone();
    let m = t.max_value();
    let mut rows = Vec::with_capacity(m as usize + 1);
    for i in 0..=m {
        rows.push(word_to_row(&height_word(&cur)?));
        if i < m {
            cur = promote(&cur);
        }
    }
    Ok(TropicalFrieze::from_rows(rows).expect("tableau words give zero-ended rows"))
}

/// Which of the frieze-row conditions a row satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowConditions {
    /// Both boundary entries are zero.
    pub zero_ends: bool,
    /// No entry is below -1.
    pub floor_minus_one: bool,
    /// Consecutive entries differ by at most one.
    pub small_steps: bool,
    /// Consecutive entries differ by exactly one.
    pub strict_steps: bool,
    /// No two adjacent entries are both -1.
    pub no_adjacent_dips: bool,
}

impl RowConditions {
    /// The row encodes the height word of a two-row rectangular tableau.
    pub fn encodes_word(&self) -> bool {
        self.zero_ends && self.floor_minus_one && self.small_steps && self.no_adjacent_dips
    }

    /// The row encodes the word of a standard tableau, one with no
    /// repeated entries.
    pub fn encodes_standard_word(&self) -> bool {
        self.encodes_word() && self.strict_steps
    }
}

pub fn classify_row(row: &[i64]) -> RowConditions {
    let zero_ends = !row.is_empty() && row[0] == 0 && *row.last().unwrap() == 0;
    let floor_minus_one = row.iter().all(|&v| v >= -1);
    let small_steps = row.windows(2).all(|w| (w[1] - w[0]).abs() <= 1);
    let strict_steps = row.windows(2).all(|w| (w[1] - w[0]).abs() == 1);
    let no_adjacent_dips = !row.windows(2).any(|w| w[0] == -1 && w[1] == -1);
    RowConditions { zero_ends, floor_minus_one, small_steps, strict_steps, no_adjacent_dips }
}

/// Lifts a frieze row back to a height word by raising every entry and
/// restoring the boundary zeros. `None` when the row fails a condition.
pub fn row_to_word(row: &[i64]) -> Option<HeightWord> {
    if !classify_row(row).encodes_word() {
        return None;
    }
    let mut word = Vec::with_capacity(row.len() + 2);
    word.push(0u32);
    for &v in row {
        word.push(u32::try_from(v + 1).ok()?);
    }
    word.push(0);
    HeightWord::new(word).ok()
}

/// Drops the boundary letters of a height word and lowers the rest.
pub fn word_to_row(w: &HeightWord) -> Vec<i64> {
    let v = w.as_slice();
    v[1..v.len() - 1].iter().map(|&h| i64::from(h) - 1).collect()
}
