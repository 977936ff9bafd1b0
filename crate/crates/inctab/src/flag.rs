//! The flagged form of a two-row rectangular tableau: a standard tableau
//! whose shape is two equal rows with a column of single boxes hanging
//! below, together with the skew companion that rectifies to it.

use crate::tableau::{IncreasingTableau, ShapeRequirement};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum FlagError {
    #[error("a flagged tableau needs at least two rows, found {0}")]
    TooFewRows(usize),
    #[error("the first two rows must have equal length, found {top} and {second}")]
    UnequalLeadingRows { top: usize, second: usize },
    #[error("rows beyond the second must be single boxes, row {row} has length {len}")]
    TailRowTooLong { row: usize, len: usize },
    #[error("flagged tableaux are standard, but entry {value} repeats")]
    NotStandard { value: u32 },
}

/// Values present in both rows.
fn repeated_values(t: &IncreasingTableau) -> Vec<u32> {
    t.row(0)
        .iter()
        .copied()
        .filter(|&v| t.row_contains(1, v))
        .collect()
}

/// Removes a sorted list of values from a sorted row.
fn without(row: &[u32], drop: &[u32]) -> Vec<u32> {
    row.iter().copied().filter(|v| !drop.contains(v)).collect()
}

/// Merges two sorted lists of distinct values.
fn merged(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out
}

/// Straightens a two-row rectangular tableau into a standard tableau.
/// Each repeated value keeps its first-row copy; its second-row copy is
/// traded for the entry just right of it, which moves into a new
/// single-box row.
pub fn to_flag(t: &IncreasingTableau) -> Result<IncreasingTableau, ShapeRequirement> {
    if !t.is_two_row_rectangular() {
        return Err(ShapeRequirement::TwoRowRectangular { shape: t.shape() });
    }
    let repeats = repeated_values(t);
    let row2 = t.row(1);
    let displaced: Vec<u32> = repeats
        .iter()
        .map(|&a| {
            let i = row2.binary_search(&a).expect("repeated values sit in row two");
            row2[i + 1]
        })
        .collect();
    let mut rows = vec![without(t.row(0), &repeats), without(row2, &displaced)];
    for &b in &displaced {
        rows.push(vec![b]);
    }
    Ok(IncreasingTableau::new(rows).expect("the flagged rows form a standard tableau"))
}

/// Undoes `to_flag`. The single-box rows rejoin the second row, each one
/// marking its left neighbor there as a value to duplicate into the first
/// row.
pub fn from_flag(f: &IncreasingTableau) -> Result<IncreasingTableau, FlagError> {
    let rows = f.rows();
    if rows.len() < 2 {
        return Err(FlagError::TooFewRows(rows.len()));
    }
    if rows[0].len() != rows[1].len() {
        return Err(FlagError::UnequalLeadingRows { top: rows[0].len(), second: rows[1].len() });
    }
    for (i, r) in rows.iter().enumerate().skip(2) {
        if r.len() != 1 {
            return Err(FlagError::TailRowTooLong { row: i, len: r.len() });
        }
    }
    if f.repeats() > 0 {
        let value = (1..=f.max_value())
            .find(|&v| f.positions_of(v).len() > 1)
            .expect("a positive repeat count means some value repeats");
        return Err(FlagError::NotStandard { value });
    }
    let displaced: Vec<u32> = rows.iter().skip(2).map(|r| r[0]).collect();
    let row2 = merged(&rows[1], &displaced);
    let repeats: Vec<u32> = displaced
        .iter()
        .map(|b| {
            let i = row2.binary_search(b).expect("displaced values rejoin row two");
            row2[i - 1]
        })
        .collect();
    let row1 = merged(&rows[0], &repeats);
    Ok(IncreasingTableau::new(vec![row1, row2])
        .expect("unflagging a standard flagged tableau is a two row tableau"))
}

/// The auxiliary pair of rows obtained by dropping, from the first row,
/// each value just left of a repeated value there, and from the second
/// row the repeated values themselves. The surviving entries are distinct
/// but in general skip some values.
pub fn d_rows(t: &IncreasingTableau) -> Result<[Vec<u32>; 2], ShapeRequirement> {
    if !t.is_two_row_rectangular() {
        return Err(ShapeRequirement::TwoRowRectangular { shape: t.shape() });
    }
    let repeats = repeated_values(t);
    let row1 = t.row(0);
    let shadows: Vec<u32> = repeats
        .iter()
        .map(|&a| {
            let i = row1.binary_search(&a).expect("repeated values sit in row one");
            row1[i - 1]
        })
        .collect();
    Ok([without(row1, &shadows), without(t.row(1), &repeats)])
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum InvalidSkewFlag {
    #[error("the overhang column must increase strictly at position {pos}")]
    HatNotIncreasing { pos: usize },
    #[error("body rows must have equal positive length")]
    BadBodyWidth,
    #[error("body row {row} must increase strictly at column {col}")]
    BodyRowNotIncreasing { row: usize, col: usize },
    #[error("body columns must increase strictly at column {col}")]
    BodyColumnNotIncreasing { col: usize },
    #[error("the lowest overhang entry must be smaller than the body entry below it")]
    JunctionOutOfOrder,
    #[error("entries must be exactly 1 through {expected} with no repeats")]
    NotInitialSegment { expected: u32 },
}

/// A standard filling of the skew shape made of two full rows with a
/// column of single boxes standing on the rightmost body column. `hat`
/// lists the overhang column top to bottom; `body` holds the two full
/// rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewFlagTableau {
    hat: Vec<u32>,
    body: [Vec<u32>; 2],
}

impl SkewFlagTableau {
    pub fn new(hat: Vec<u32>, body: [Vec<u32>; 2]) -> Result<Self, InvalidSkewFlag> {
        if body[0].is_empty() || body[0].len() != body[1].len() {
            return Err(InvalidSkewFlag::BadBodyWidth);
        }
        for pos in 1..hat.len() {
            if hat[pos - 1] >= hat[pos] {
                return Err(InvalidSkewFlag::HatNotIncreasing { pos });
            }
        }
        for (row, r) in body.iter().enumerate() {
            for col in 1..r.len() {
                if r[col - 1] >= r[col] {
                    return Err(InvalidSkewFlag::BodyRowNotIncreasing { row, col });
                }
            }
        }
        for col in 0..body[0].len() {
            if body[0][col] >= body[1][col] {
                return Err(InvalidSkewFlag::BodyColumnNotIncreasing { col });
            }
        }
        if let Some(&low) = hat.last() {
            if low >= body[0][body[0].len() - 1] {
                return Err(InvalidSkewFlag::JunctionOutOfOrder);
            }
        }
        let expected = (hat.len() + body[0].len() + body[1].len()) as u32;
        let mut seen = vec![false; expected as usize + 1];
        for &v in hat.iter().chain(&body[0]).chain(&body[1]) {
            if v == 0 || v > expected || seen[v as usize] {
                return Err(InvalidSkewFlag::NotInitialSegment { expected });
            }
            seen[v as usize] = true;
        }
        Ok(SkewFlagTableau { hat, body })
    }

    pub fn hat(&self) -> &[u32] {
        &self.hat
    }

    pub fn body_rows(&self) -> &[Vec<u32>; 2] {
        &self.body
    }

    pub fn width(&self) -> usize {
        self.body[0].len()
    }

    pub fn max_value(&self) -> u32 {
        (self.hat.len() + 2 * self.width()) as u32
    }

    /// Row reading word, bottom row first, then the overhang bottom to
    /// top.
    pub fn reading_word(&self) -> Vec<u32> {
        self.body[1]
            .iter()
            .chain(&self.body[0])
            .copied()
            .chain(self.hat.iter().rev().copied())
            .collect()
    }

    /// Straightens the skew filling by row insertion of its reading word.
    pub fn rectify(&self) -> IncreasingTableau {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for x in self.reading_word() {
            row_insert(&mut rows, x);
        }
        IncreasingTableau::new(rows).expect("insertion of distinct values is standard")
    }
}

fn row_insert(rows: &mut Vec<Vec<u32>>, value: u32) {
    let mut x = value;
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![x]);
            return;
        }
        match rows[r].iter().position(|&y| y > x) {
            None => {
                rows[r].push(x);
                return;
            }
            Some(i) => {
                std::mem::swap(&mut x, &mut rows[r][i]);
                r += 1;
            }
        }
    }
}

/// The skew companion of a two-row rectangular tableau: the dropped
/// left-neighbor values form the overhang column and the auxiliary rows
/// form the body.
pub fn skew_of(t: &IncreasingTableau) -> Result<SkewFlagTableau, ShapeRequirement> {
    if !t.is_two_row_rectangular() {
        return Err(ShapeRequirement::TwoRowRectangular { shape: t.shape() });
    }
    let repeats = repeated_values(t);
    let row1 = t.row(0);
    let hat: Vec<u32> = repeats
        .iter()
        .map(|&a| {
            let i = row1.binary_search(&a).expect("repeated values sit in row one");
            row1[i - 1]
        })
        .collect();
    let body = d_rows(t)?;
    Ok(SkewFlagTableau::new(hat, body).expect("the companion of a valid tableau is valid"))
}

/// Half-turn of a flagged standard tableau, landing in skew form: entries
/// are complemented, the leading rows swap and reverse into the body, and
/// the single-box tail flips into the overhang column.
pub fn rot_flag(f: &IncreasingTableau) -> Result<SkewFlagTableau, FlagError> {
    let rows = f.rows();
    if rows.len() < 2 {
        return Err(FlagError::TooFewRows(rows.len()));
    }
    if rows[0].len() != rows[1].len() {
        return Err(FlagError::UnequalLeadingRows { top: rows[0].len(), second: rows[1].len() });
    }
    for (i, r) in rows.iter().enumerate().skip(2) {
        if r.len() != 1 {
            return Err(FlagError::TailRowTooLong { row: i, len: r.len() });
        }
    }
    let m = f.max_value();
    let comp = |v: u32| m + 1 - v;
    let hat: Vec<u32> = rows.iter().skip(2).rev().map(|r| comp(r[0])).collect();
    let flip = |r: &[u32]| r.iter().rev().map(|&v| comp(v)).collect::<Vec<u32>>();
    let body = [flip(&rows[1]), flip(&rows[0])];
    Ok(SkewFlagTableau::new(hat, body).expect("the half turn of a flagged tableau is valid"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate_shape, enumerate_two_row};
    use crate::shape::PartitionShape;

    fn t(rows: &[&[u32]]) -> IncreasingTableau {
        IncreasingTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn flags_the_running_example() {
        let x = t(&[&[1, 2, 4, 5, 6], &[2, 3, 6, 7, 8]]);
        let f = to_flag(&x).unwrap();
        assert_eq!(f, t(&[&[1, 4, 5], &[2, 6, 8], &[3], &[7]]));
        assert_eq!(from_flag(&f).unwrap(), x);
        assert_eq!(x.maj().unwrap(), 14);
        assert_eq!(f.standard_major_index().unwrap(), 14);
    }

    #[test]
    fn flagging_is_a_bijection() {
        for n in 1..=5usize {
            for k in 0..n {
                let universe = enumerate_two_row(n, k);
                let mut images: Vec<IncreasingTableau> = universe
                    .iter()
                    .map(|x| {
                        let f = to_flag(x).unwrap();
                        assert_eq!(from_flag(&f).unwrap(), *x);
                        assert_eq!(x.maj().unwrap(), f.standard_major_index().unwrap());
                        f
                    })
                    .collect();
                images.sort();
                images.dedup();
                assert_eq!(images.len(), universe.len());
                let mut parts = vec![n - k, n - k];
                parts.extend(std::iter::repeat(1).take(k));
                let mut targets = enumerate_shape(&PartitionShape::new(parts).unwrap(), 0);
                targets.sort();
                assert_eq!(images, targets);
            }
        }
    }

    #[test]
    fn auxiliary_rows_of_the_skew_example() {
        let x = t(&[&[1, 2, 3, 4, 7], &[4, 5, 6, 7, 8]]);
        assert_eq!(d_rows(&x).unwrap(), [vec![1, 2, 7], vec![5, 6, 8]]);
        let s = skew_of(&x).unwrap();
        assert_eq!(s.hat(), &[3, 4]);
        assert_eq!(s.body_rows(), &[vec![1, 2, 7], vec![5, 6, 8]]);
        assert_eq!(s.reading_word(), vec![5, 6, 8, 1, 2, 7, 4, 3]);
        assert_eq!(s.rectify(), to_flag(&x).unwrap());
    }

    #[test]
    fn rectification_straightens_every_companion() {
        for n in 1..=5usize {
            for k in 0..n {
                for x in enumerate_two_row(n, k) {
                    assert_eq!(skew_of(&x).unwrap().rectify(), to_flag(&x).unwrap());
                }
            }
        }
    }

    #[test]
    fn half_turn_commutes_with_flagging() {
        let x = t(&[&[1, 2, 3, 4, 7], &[4, 5, 6, 7, 8]]);
        let lhs = rot_flag(&to_flag(&x).unwrap()).unwrap();
        assert_eq!(lhs.hat(), &[1, 4]);
        assert_eq!(lhs.body_rows(), &[vec![2, 3, 5], vec![6, 7, 8]]);
        assert_eq!(lhs, skew_of(&x.rot().unwrap()).unwrap());
        for n in 1..=4usize {
            for k in 0..n {
                for y in enumerate_two_row(n, k) {
                    let a = rot_flag(&to_flag(&y).unwrap()).unwrap();
                    let b = skew_of(&y.rot().unwrap()).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn rejects_malformed_flags_and_skews() {
        assert_eq!(from_flag(&t(&[&[1, 2, 3]])), Err(FlagError::TooFewRows(1)));
        assert_eq!(
            from_flag(&t(&[&[1, 2], &[3]])),
            Err(FlagError::UnequalLeadingRows { top: 2, second: 1 })
        );
        assert_eq!(
            from_flag(&t(&[&[1, 2], &[2, 3]])),
            Err(FlagError::NotStandard { value: 2 })
        );
        assert_eq!(
            from_flag(&t(&[&[1, 3], &[2, 4], &[5, 6]])),
            Err(FlagError::TailRowTooLong { row: 2, len: 2 })
        );
        assert_eq!(
            SkewFlagTableau::new(vec![3, 3], [vec![1, 2], vec![4, 5]]),
            Err(InvalidSkewFlag::HatNotIncreasing { pos: 1 })
        );
        assert_eq!(
            SkewFlagTableau::new(vec![5], [vec![1, 2], vec![3, 4]]),
            Err(InvalidSkewFlag::JunctionOutOfOrder)
        );
        assert_eq!(
            SkewFlagTableau::new(vec![], [vec![1, 2], vec![3, 5]]),
            Err(InvalidSkewFlag::NotInitialSegment { expected: 4 })
        );
    }

    #[test]
    fn flagging_fixes_standard_inputs() {
        let x = t(&[&[1, 2, 5], &[3, 4, 6]]);
        assert_eq!(to_flag(&x).unwrap(), x);
        assert_eq!(skew_of(&x).unwrap().hat(), &[] as &[u32]);
    }
}
