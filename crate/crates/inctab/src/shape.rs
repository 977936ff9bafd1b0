//! Partition shapes and box coordinates.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Location of a box in a Young diagram. Rows count from the top and
/// columns from the left, both starting at zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BoxCoord {
    pub row: usize,
    pub col: usize,
}

impl BoxCoord {
    pub fn new(row: usize, col: usize) -> Self {
        BoxCoord { row, col }
    }
}

impl fmt::Display for BoxCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// Ways a list of row lengths can fail to be a partition.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ShapeError {
    #[error("row {row} has length zero; trailing empty rows must be dropped")]
    ZeroPart { row: usize },
    #[error("row {row} is longer than the row above it")]
    NotWeaklyDecreasing { row: usize },
}

/// An integer partition viewed as a Young diagram: a weakly decreasing
/// list of positive row lengths. The empty partition has no rows.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionShape {
    parts: Vec<usize>,
}

impl PartitionShape {
    /// Validates that `parts` is weakly decreasing with positive entries.
    pub fn new(parts: Vec<usize>) -> Result<Self, ShapeError> {
        for (r, &len) in parts.iter().enumerate() {
            if len == 0 {
                return Err(ShapeError::ZeroPart { row: r });
            }
            if r > 0 && len > parts[r - 1] {
                return Err(ShapeError::NotWeaklyDecreasing { row: r });
            }
        }
        Ok(PartitionShape { parts })
    }

    pub fn empty() -> Self {
        PartitionShape { parts: Vec::new() }
    }

    pub fn rectangular(rows: usize, cols: usize) -> Self {
        if rows == 0 || cols == 0 {
            return Self::empty();
        }
        PartitionShape {
            parts: vec![cols; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of row `r`, or zero when the row does not exist.
    pub fn row_len(&self, r: usize) -> usize {
        self.parts.get(r).copied().unwrap_or(0)
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True when every row has the same length.
    pub fn is_rectangular(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    pub fn contains_box(&self, b: BoxCoord) -> bool {
        b.col < self.row_len(b.row)
    }

    /// Containment of Young diagrams: every row of `inner` fits inside
    /// the corresponding row of `self`.
    pub fn contains(&self, inner: &PartitionShape) -> bool {
        inner
            .parts
            .iter()
            .enumerate()
            .all(|(r, &len)| len <= self.row_len(r))
    }

    /// All boxes in reading order (row by row, left to right).
    pub fn boxes(&self) -> impl Iterator<Item = BoxCoord> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| BoxCoord::new(r, c)))
    }

    /// Boxes of `self` that are not boxes of `inner`. Callers must check
    /// containment first when they rely on a genuine skew shape.
    pub fn boxes_beyond(&self, inner: &PartitionShape) -> Vec<BoxCoord> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (inner.row_len(r)..len).map(move |c| BoxCoord::new(r, c)))
            .collect()
    }
}

impl fmt::Display for PartitionShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// True when no box of `boxes` sits weakly southeast of another, which
/// for boxes of a skew shape means no two share a row or a column.
pub fn is_antichain(boxes: &[BoxCoord]) -> bool {
    for (i, a) in boxes.iter().enumerate() {
        for b in &boxes[i + 1..] {
            let comparable = (a.row <= b.row && a.col <= b.col) || (b.row <= a.row && b.col <= a.col);
            if comparable {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_partitions() {
        assert_eq!(
            PartitionShape::new(vec![2, 3]),
            Err(ShapeError::NotWeaklyDecreasing { row: 1 })
        );
        assert_eq!(
            PartitionShape::new(vec![2, 0]),
            Err(ShapeError::ZeroPart { row: 1 })
        );
    }

    #[test]
    fn basic_accessors() {
        let s = PartitionShape::new(vec![5, 4]).unwrap();
        assert_eq!(s.size(), 9);
        assert_eq!(s.rows(), 2);
        assert!(!s.is_rectangular());
        assert!(s.contains_box(BoxCoord::new(1, 3)));
        assert!(!s.contains_box(BoxCoord::new(1, 4)));
        assert!(s.contains(&PartitionShape::new(vec![3, 3]).unwrap()));
        assert!(!s.contains(&PartitionShape::new(vec![5, 5]).unwrap()));
        assert_eq!(s.to_string(), "(5,4)");
        assert_eq!(PartitionShape::empty().to_string(), "∅");
    }

    #[test]
    fn antichain_detection() {
        // Boxes on an antidiagonal are pairwise incomparable.
        let good = [BoxCoord::new(0, 2), BoxCoord::new(1, 1), BoxCoord::new(2, 0)];
        assert!(is_antichain(&good));
        // A shared column makes two boxes comparable.
        let bad = [BoxCoord::new(0, 1), BoxCoord::new(1, 1)];
        assert!(!is_antichain(&bad));
    }
}
