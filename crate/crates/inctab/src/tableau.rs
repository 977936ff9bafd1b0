//! Increasing tableaux and their shape chains.

use crate::shape::{is_antichain, BoxCoord, PartitionShape};
use std::fmt;
use thiserror::Error;

/// Ways a filling can fail to be an increasing tableau. Each variant names
/// the first violated invariant together with the box where it happened.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum InvalidTableau {
    #[error("row {row} is empty; trailing empty rows must be dropped")]
    EmptyRow { row: usize },
    #[error("row {row} is longer than the row above it, so the shape is not a partition")]
    ShapeNotPartition { row: usize },
    #[error("entry at {at} is zero; entries must be positive")]
    ZeroEntry { at: BoxCoord },
    #[error("entry at {at} does not exceed its left neighbor")]
    RowNotIncreasing { at: BoxCoord },
    #[error("entry at {at} does not exceed the entry above it")]
    ColumnNotIncreasing { at: BoxCoord },
    #[error("entry set skips {missing}; entries must fill an initial segment 1..=maxv")]
    NotInitialSegment { missing: u32 },
}

/// A shape precondition an operation places on its input.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ShapeRequirement {
    #[error("operation requires a rectangular shape, got {shape}")]
    Rectangular { shape: PartitionShape },
    #[error("operation requires a rectangular shape with two rows, got {shape}")]
    TwoRowRectangular { shape: PartitionShape },
    #[error("operation requires a standard tableau, but {repeats} values repeat")]
    Standard { repeats: usize },
}

/// A filling of a partition shape whose entries strictly increase along
/// every row and down every column, and whose entry set is exactly
/// `{1, ..., maxv}`. A value may occupy several boxes as long as those
/// boxes share no row or column; the number of repeated values is
/// `size() - maxv`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IncreasingTableau {
    rows: Vec<Vec<u32>>,
}

impl IncreasingTableau {
    /// Validates the filling and reports the first violated invariant.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, InvalidTableau> {
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(InvalidTableau::EmptyRow { row: r });
            }
            if r > 0 && row.len() > rows[r - 1].len() {
                return Err(InvalidTableau::ShapeNotPartition { row: r });
            }
            for (c, &v) in row.iter().enumerate() {
                let at = BoxCoord::new(r, c);
                if v == 0 {
                    return Err(InvalidTableau::ZeroEntry { at });
                }
                if c > 0 && row[c - 1] >= v {
                    return Err(InvalidTableau::RowNotIncreasing { at });
                }
                if r > 0 && rows[r - 1][c] >= v {
                    return Err(InvalidTableau::ColumnNotIncreasing { at });
                }
            }
        }
        let maxv = rows.iter().flatten().copied().max().unwrap_or(0);
        let mut seen = vec![false; maxv as usize + 1];
        for &v in rows.iter().flatten() {
            seen[v as usize] = true;
        }
        if let Some(missing) = (1..=maxv).find(|&v| !seen[v as usize]) {
            return Err(InvalidTableau::NotInitialSegment { missing });
        }
        Ok(IncreasingTableau { rows })
    }

    /// The empty tableau of the empty shape.
    pub fn empty() -> Self {
        IncreasingTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.rows[r]
    }

    pub fn shape(&self) -> PartitionShape {
        PartitionShape::new(self.rows.iter().map(Vec::len).collect())
            .expect("tableau rows always form a partition")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Largest entry, zero for the empty tableau.
    pub fn max_value(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Number of values occupying more than one box, counted with
    /// multiplicity: `size() - maxv`.
    pub fn repeats(&self) -> usize {
        self.size() - self.max_value() as usize
    }

    pub fn entry(&self, at: BoxCoord) -> Option<u32> {
        self.rows.get(at.row).and_then(|row| row.get(at.col)).copied()
    }

    /// Every box holding value `v`, in reading order.
    pub fn positions_of(&self, v: u32) -> Vec<BoxCoord> {
        let mut out = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            if let Ok(c) = row.binary_search(&v) {
                out.push(BoxCoord::new(r, c));
            }
        }
        out
    }

    pub fn row_contains(&self, r: usize, v: u32) -> bool {
        self.rows.get(r).is_some_and(|row| row.binary_search(&v).is_ok())
    }

    pub fn is_rectangular(&self) -> bool {
        self.shape().is_rectangular()
    }

    pub fn is_two_row_rectangular(&self) -> bool {
        self.rows.len() == 2 && self.rows[0].len() == self.rows[1].len()
    }

    /// The shape occupied by entries at most `j`. Because entries increase
    /// along rows and columns these boxes always form a partition.
    pub fn truncate(&self, j: u32) -> PartitionShape {
        let parts: Vec<usize> = self
            .rows
            .iter()
            .map(|row| row.partition_point(|&v| v <= j))
            .take_while(|&len| len > 0)
            .collect();
        PartitionShape::new(parts).expect("truncation of a tableau is a partition")
    }

    /// The chain of truncation shapes from the empty shape up to the full
    /// shape, one entry per value `0..=maxv`.
    pub fn chain(&self) -> ShapeChain {
        ShapeChain::of(self)
    }

    /// Rotates a rectangular tableau by a half turn and reverses its
    /// alphabet, sending entry `x` to `maxv + 1 - x`.
    pub fn rot(&self) -> Result<IncreasingTableau, ShapeRequirement> {
        if !self.is_rectangular() {
            return Err(ShapeRequirement::Rectangular { shape: self.shape() });
        }
        let m = self.max_value();
        let rows: Vec<Vec<u32>> = self
            .rows
            .iter()
            .rev()
            .map(|row| row.iter().rev().map(|&v| m + 1 - v).collect())
            .collect();
        Ok(IncreasingTableau::new(rows).expect("rotation preserves validity"))
    }

    /// The major index for two-row rectangular tableaux: the sum of all
    /// values `i` appearing in the first row with `i + 1` in the second.
    pub fn maj(&self) -> Result<u64, ShapeRequirement> {
        if !self.is_two_row_rectangular() {
            return Err(ShapeRequirement::TwoRowRectangular { shape: self.shape() });
        }
        let mut total = 0u64;
        for &i in &self.rows[0] {
            if self.row_contains(1, i + 1) {
                total += u64::from(i);
            }
        }
        Ok(total)
    }

    /// The classical major index of a standard tableau: the sum of all
    /// descents, the values `i` whose successor `i + 1` sits in a strictly
    /// lower row.
    pub fn standard_major_index(&self) -> Result<u64, ShapeRequirement> {
        if self.repeats() != 0 {
            return Err(ShapeRequirement::Standard { repeats: self.repeats() });
        }
        let mut row_of = vec![0usize; self.max_value() as usize + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v as usize] = r;
            }
        }
        let m = self.max_value() as usize;
        let mut total = 0u64;
        for i in 1..m {
            if row_of[i + 1] > row_of[i] {
                total += i as u64;
            }
        }
        Ok(total)
    }
}

impl fmt::Display for IncreasingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::render::render_tableau(self))
    }
}

/// Ways a list of shapes can fail to encode an increasing tableau.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ChainError {
    #[error("a shape chain must contain at least the empty shape")]
    Empty,
    #[error("a shape chain must start at the empty shape")]
    DoesNotStartEmpty,
    #[error("step {step} of the chain is not nested in its successor")]
    NotNested { step: usize },
    #[error("step {step} of the chain adds no boxes")]
    EmptyStep { step: usize },
    #[error("step {step} of the chain adds two comparable boxes")]
    StepNotAntichain { step: usize },
}

/// A nested sequence of shapes starting at the empty shape in which each
/// consecutive difference is a nonempty antichain of boxes. Such chains
/// are exactly the truncation chains of increasing tableaux: the boxes
/// added at step `j` are the boxes holding the value `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShapeChain {
    shapes: Vec<PartitionShape>,
}

impl ShapeChain {
    pub fn new(shapes: Vec<PartitionShape>) -> Result<Self, ChainError> {
        if shapes.is_empty() {
            return Err(ChainError::Empty);
        }
        if !shapes[0].is_empty() {
            return Err(ChainError::DoesNotStartEmpty);
        }
        for step in 1..shapes.len() {
            if !shapes[step].contains(&shapes[step - 1]) {
                return Err(ChainError::NotNested { step });
            }
            let added = shapes[step].boxes_beyond(&shapes[step - 1]);
            if added.is_empty() {
                return Err(ChainError::EmptyStep { step });
            }
            if !is_antichain(&added) {
                return Err(ChainError::StepNotAntichain { step });
            }
        }
        Ok(ShapeChain { shapes })
    }

    /// The truncation chain of a tableau.
    pub fn of(t: &IncreasingTableau) -> ShapeChain {
        let shapes = (0..=t.max_value()).map(|j| t.truncate(j)).collect();
        ShapeChain::new(shapes).expect("truncation chain of a tableau is valid")
    }

    pub fn shapes(&self) -> &[PartitionShape] {
        &self.shapes
    }

    /// Number of shapes, which is one more than the tableau's largest value.
    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Rebuilds the tableau: the boxes added at step `j` receive value `j`.
    pub fn to_tableau(&self) -> IncreasingTableau {
        let full = self.shapes.last().expect("chain is nonempty");
        let mut rows: Vec<Vec<u32>> = full.parts().iter().map(|&len| vec![0; len]).collect();
        for step in 1..self.shapes.len() {
            for b in self.shapes[step].boxes_beyond(&self.shapes[step - 1]) {
                rows[b.row][b.col] = step as u32;
            }
        }
        IncreasingTableau::new(rows).expect("a valid chain encodes a valid tableau")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[u32]]) -> IncreasingTableau {
        IncreasingTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validation_reports_first_violation() {
        assert_eq!(
            IncreasingTableau::new(vec![vec![1, 2], vec![2, 2]]),
            Err(InvalidTableau::RowNotIncreasing { at: BoxCoord::new(1, 1) })
        );
        assert_eq!(
            IncreasingTableau::new(vec![vec![1, 2], vec![1, 3]]),
            Err(InvalidTableau::ColumnNotIncreasing { at: BoxCoord::new(1, 0) })
        );
        assert_eq!(
            IncreasingTableau::new(vec![vec![1, 3]]),
            Err(InvalidTableau::NotInitialSegment { missing: 2 })
        );
        assert_eq!(
            IncreasingTableau::new(vec![vec![1, 2], vec![2, 3, 4]]),
            Err(InvalidTableau::ShapeNotPartition { row: 1 })
        );
    }

    #[test]
    fn repeats_count_duplicated_values() {
        // Six boxes, largest value five: exactly one repeat.
        let x = t(&[&[1, 2, 4], &[3, 4, 5]]);
        assert_eq!(x.max_value(), 5);
        assert_eq!(x.repeats(), 1);
        assert_eq!(x.positions_of(4), vec![BoxCoord::new(0, 2), BoxCoord::new(1, 1)]);
    }

    #[test]
    fn truncation_walks_the_chain() {
        let x = t(&[&[1, 2, 4], &[3, 4, 5]]);
        let parts: Vec<Vec<usize>> = (0..=5).map(|j| x.truncate(j).parts().to_vec()).collect();
        assert_eq!(
            parts,
            vec![vec![], vec![1], vec![2], vec![2, 1], vec![3, 2], vec![3, 3]]
        );
    }

    #[test]
    fn chain_round_trip() {
        let x = t(&[&[1, 2, 4], &[3, 4, 5]]);
        assert_eq!(x.chain().to_tableau(), x);
    }

    #[test]
    fn rot_reverses_alphabet_and_rotates() {
        let x = t(&[&[1, 2, 4], &[3, 4, 5]]);
        let r = x.rot().unwrap();
        assert_eq!(r.rows(), &[vec![1, 2, 3], vec![2, 4, 5]]);
        assert_eq!(r.rot().unwrap(), x);
        let ragged = t(&[&[1, 2], &[2]]);
        assert!(matches!(ragged.rot(), Err(ShapeRequirement::Rectangular { .. })));
    }

    #[test]
    fn maj_sums_descents_into_the_second_row() {
        assert_eq!(t(&[&[1], &[2]]).maj().unwrap(), 1);
        assert_eq!(t(&[&[1, 2], &[2, 3]]).maj().unwrap(), 3);
        // Entries 1, 2, 5 and 6 have successors in the second row.
        let x = t(&[&[1, 2, 4, 5, 6], &[2, 3, 6, 7, 8]]);
        assert_eq!(x.maj().unwrap(), 14);
    }

    #[test]
    fn standard_major_index_counts_lower_row_descents() {
        let s = t(&[&[1, 4, 5], &[2, 6, 8], &[3], &[7]]);
        assert_eq!(s.standard_major_index().unwrap(), 1 + 2 + 5 + 6);
        let rep = t(&[&[1, 2], &[2, 3]]);
        assert!(matches!(
            rep.standard_major_index(),
            Err(ShapeRequirement::Standard { repeats: 1 })
        ));
    }
}
