//! Promotion, evacuation, and growth diagrams.

use crate::shape::{BoxCoord, PartitionShape};
use crate::tableau::{IncreasingTableau, ShapeChain, ShapeRequirement};
use std::collections::BTreeSet;
use thiserror::Error;

/// Failures of the inverse and orbit routines.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DynamicsError {
    #[error("no preimage under promotion: the reverse slide strands empty boxes at {stranded:?}")]
    NoPreimage { stranded: Vec<BoxCoord> },
    #[error("orbit did not close after {cap} applications")]
    OrbitCapExceeded { cap: u64 },
    #[error(transparent)]
    Shape(#[from] ShapeRequirement),
}

/// Orbit searches give up after this multiple of the maximum entry.
pub const ORBIT_CAP_FACTOR: u64 = 10;

/// Promotion. Deletes the entry in the top left corner, slides values
/// toward it, fills the boxes left empty with a new maximum, and shifts
/// every entry down by one. Each slide round is simultaneous: every empty
/// box with a filled right or lower neighbor takes the smaller of those
/// labels, and the label is erased from each neighbor that carries it.
pub fn promote(t: &IncreasingTableau) -> IncreasingTableau {
    promote_with_flow(t).0
}

/// Promotion together with its flow path: the sorted set of boxes that
/// were empty at some point during the slide, starting with the top left
/// corner.
pub fn promote_with_flow(t: &IncreasingTableau) -> (IncreasingTableau, Vec<BoxCoord>) {
    if t.rows().is_empty() {
        return (t.clone(), Vec::new());
    }
    let m = t.max_value();
    let mut grid: Vec<Vec<Option<u32>>> = t
        .rows()
        .iter()
        .map(|r| r.iter().copied().map(Some).collect())
        .collect();
    let mut ever_empty = BTreeSet::new();
    grid[0][0] = None;
    ever_empty.insert(BoxCoord { row: 0, col: 0 });
    loop {
        let mut fills: Vec<(usize, usize, u32)> = Vec::new();
        let mut clears: Vec<(usize, usize)> = Vec::new();
        for r in 0..grid.len() {
            for c in 0..grid[r].len() {
                if grid[r][c].is_some() {
                    continue;
                }
                let at = |nr: usize, nc: usize| grid.get(nr).and_then(|row| row.get(nc)).copied().flatten();
                let label = match (at(r, c + 1), at(r + 1, c)) {
                    (Some(a), Some(b)) => a.min(b),
                    (Some(a), None) => a,
                    (None, Some(b)) => b,
                    (None, None) => continue,
                };
                fills.push((r, c, label));
                for (nr, nc) in [(r, c + 1), (r + 1, c)] {
                    if at(nr, nc) == Some(label) {
                        clears.push((nr, nc));
                    }
                }
            }
        }
        if fills.is_empty() {
            break;
        }
        for &(r, c, v) in &fills {
            grid[r][c] = Some(v);
        }
        for &(r, c) in &clears {
            grid[r][c] = None;
            ever_empty.insert(BoxCoord { row: r, col: c });
        }
    }
    let rows: Vec<Vec<u32>> = grid
        .iter()
        .map(|row| row.iter().map(|v| match v { Some(x) => x - 1, None => m }).collect())
        .collect();
    let out = IncreasingTableau::new(rows).expect("promotion preserves validity");
    (out, ever_empty.into_iter().collect())
}

/// Iterated promotion.
pub fn promote_steps(t: &IncreasingTableau, steps: u64) -> IncreasingTableau {
    let mut cur = t.clone();
    for _ in 0..steps {
        cur = promote(&cur);
    }
    cur
}

/// Undoes one promotion. Boxes holding the maximum entry are emptied and
/// the rest are shifted up by one. Each label then switches once, from
/// the largest down to 2: every empty box whose filled left or upper
/// neighbor carries the label takes it, and the label is erased from each
/// neighbor that carried it. The top left corner, which must be the only
/// box left empty, receives the entry 1.
pub fn promote_inverse(t: &IncreasingTableau) -> Result<IncreasingTableau, DynamicsError> {
    if t.rows().is_empty() {
        return Ok(t.clone());
    }
    let m = t.max_value();
    let mut grid: Vec<Vec<Option<u32>>> = t
        .rows()
        .iter()
        .map(|r| r.iter().map(|&v| if v == m { None } else { Some(v + 1) }).collect())
        .collect();
    for label in (2..=m).rev() {
        let mut fills: Vec<(usize, usize)> = Vec::new();
        let mut clears: Vec<(usize, usize)> = Vec::new();
        for r in 0..grid.len() {
            for c in 0..grid[r].len() {
                if grid[r][c].is_some() {
                    continue;
                }
                let mut donated = false;
                if r > 0 && grid[r - 1][c] == Some(label) {
                    donated = true;
                    clears.push((r - 1, c));
                }
                if c > 0 && grid[r][c - 1] == Some(label) {
                    donated = true;
                    clears.push((r, c - 1));
                }
                if donated {
                    fills.push((r, c));
                }
            }
        }
        for &(r, c) in &fills {
            grid[r][c] = Some(label);
        }
        for &(r, c) in &clears {
            grid[r][c] = None;
        }
    }
    let stranded: Vec<BoxCoord> = grid
        .iter()
        .enumerate()
        .flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| v.is_none())
                .map(move |(c, _)| BoxCoord { row: r, col: c })
        })
        .collect();
    if stranded != [BoxCoord { row: 0, col: 0 }] {
        return Err(DynamicsError::NoPreimage { stranded });
    }
    grid[0][0] = Some(1);
    let rows: Vec<Vec<u32>> = grid
        .iter()
        .map(|row| row.iter().map(|v| v.expect("all boxes are filled")).collect())
        .collect();
    Ok(IncreasingTableau::new(rows).expect("the reverse slide preserves validity"))
}

/// Evacuation: the shape of the entries up to `j` in the result is read
/// off the `(m - j)`-th promotion of the input, where `m` is the maximum
/// entry.
pub fn evacuate(t: &IncreasingTableau) -> IncreasingTableau {
    let m = t.max_value();
    let mut shapes = vec![PartitionShape::empty(); m as usize + 1];
    let mut cur = t.clone();
    for i in 0..=m {
        shapes[(m - i) as usize] = cur.truncate(m - i);
        if i < m {
            cur = promote(&cur);
        }
    }
    ShapeChain::new(shapes)
        .expect("evacuation chains are valid")
        .to_tableau()
}

/// Evacuation conjugated by the half turn. Defined on rectangular shapes.
pub fn dual_evacuate(t: &IncreasingTableau) -> Result<IncreasingTableau, ShapeRequirement> {
    Ok(evacuate(&t.rot()?).rot().expect("evacuation preserves the shape"))
}

/// The order of the tableau under promotion.
pub fn promotion_rank(t: &IncreasingTableau) -> Result<u64, DynamicsError> {
    let cap = ORBIT_CAP_FACTOR * u64::from(t.max_value()).max(1);
    let mut cur = promote(t);
    for r in 1..=cap {
        if cur == *t {
            return Ok(r);
        }
        cur = promote(&cur);
    }
    Err(DynamicsError::OrbitCapExceeded { cap })
}

/// The order of the tableau under evacuation followed by its conjugate
/// by the half turn. Defined on rectangular shapes.
pub fn evacuation_rank(t: &IncreasingTableau) -> Result<u64, DynamicsError> {
    let cap = ORBIT_CAP_FACTOR * u64::from(t.max_value()).max(1);
    let mut cur = dual_evacuate(&evacuate(t))?;
    for r in 1..=cap {
        if cur == *t {
            return Ok(r);
        }
        cur = dual_evacuate(&evacuate(&cur))?;
    }
    Err(DynamicsError::OrbitCapExceeded { cap })
}

/// The promotion orbit, starting at the given tableau.
pub fn promotion_orbit(t: &IncreasingTableau) -> Result<Vec<IncreasingTableau>, DynamicsError> {
    let cap = ORBIT_CAP_FACTOR * u64::from(t.max_value()).max(1);
    let mut orbit = vec![t.clone()];
    for _ in 0..cap {
        let next = promote(orbit.last().unwrap());
        if next == *t {
            return Ok(orbit);
        }
        orbit.push(next);
    }
    Err(DynamicsError::OrbitCapExceeded { cap })
}

/// The square array whose `i`-th row lists the shapes of the truncations
/// of the `i`-th promotion, drawn with row `i` shifted `i` columns to the
/// right. Reading up the central column recovers the evacuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthDiagram {
    rows: Vec<ShapeChain>,
}

impl GrowthDiagram {
    pub fn new(t: &IncreasingTableau) -> Self {
        let m = t.max_value();
        let mut rows = Vec::with_capacity(m as usize + 1);
        let mut cur = t.clone();
        for i in 0..=m {
            rows.push(cur.chain());
            if i < m {
                cur = promote(&cur);
            }
        }
        GrowthDiagram { rows }
    }

    pub fn rows(&self) -> &[ShapeChain] {
        &self.rows
    }

    /// Number of rows, one more than the maximum entry.
    pub fn side(&self) -> usize {
        self.rows.len()
    }

    /// Shape at matrix position `(i, j)`; row `i` occupies columns
    /// `i ..= i + m`.
    pub fn shape_at(&self, i: usize, j: usize) -> Option<&PartitionShape> {
        let m = self.rows.len() - 1;
        if i > m || j < i || j > i + m {
            return None;
        }
        Some(&self.rows[i].shapes()[j - i])
    }

    /// The chain of the evacuation, read up the central column.
    pub fn evacuation_chain(&self) -> ShapeChain {
        let m = self.rows.len() - 1;
        let shapes: Vec<PartitionShape> = (0..=m)
            .map(|j| self.rows[m - j].shapes()[j].clone())
            .collect();
        ShapeChain::new(shapes).expect("the central column is a valid chain")
    }

    /// Every aligned two by two square of shapes, as (nw, ne, sw, se).
    pub fn local_squares(&self) -> Vec<[PartitionShape; 4]> {
        let m = self.rows.len() - 1;
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 1..i + m {
                out.push([
                    self.shape_at(i, j).unwrap().clone(),
                    self.shape_at(i, j + 1).unwrap().clone(),
                    self.shape_at(i + 1, j).unwrap().clone(),
                    self.shape_at(i + 1, j + 1).unwrap().clone(),
                ]);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate_shape, enumerate_two_row};

    fn t(rows: &[&[u32]]) -> IncreasingTableau {
        IncreasingTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn sh(parts: &[usize]) -> PartitionShape {
        PartitionShape::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn promotes_the_small_square_example() {
        let x = t(&[&[1, 2, 4], &[3, 4, 5]]);
        let (p, flow) = promote_with_flow(&x);
        assert_eq!(p, t(&[&[1, 3, 4], &[2, 4, 5]]));
        let expected: Vec<BoxCoord> = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2)]
            .iter()
            .map(|&(row, col)| BoxCoord { row, col })
            .collect();
        assert_eq!(flow, expected);
    }

    #[test]
    fn promotes_the_four_row_example() {
        let x = t(&[
            &[1, 2, 4, 7],
            &[3, 5, 6, 8],
            &[5, 7, 8, 10],
            &[7, 9, 10, 11],
        ]);
        let p11 = t(&[
            &[1, 2, 4, 7],
            &[3, 4, 6, 8],
            &[5, 6, 8, 10],
            &[7, 9, 10, 11],
        ]);
        assert_eq!(promote_steps(&x, 11), p11);
        assert_eq!(promotion_rank(&x).unwrap(), 33);
    }

    #[test]
    fn single_box_and_single_row_are_fixed() {
        assert_eq!(promote(&t(&[&[1]])), t(&[&[1]]));
        assert_eq!(promote(&t(&[&[1, 2, 3]])), t(&[&[1, 2, 3]]));
        let e = IncreasingTableau::empty();
        assert_eq!(promote(&e), e);
        assert_eq!(promote_inverse(&e).unwrap(), e);
    }

    #[test]
    fn inverse_undoes_promotion_on_two_row_universes() {
        for n in 1..=5 {
            for k in 0..n {
                for x in enumerate_two_row(n, k) {
                    let p = promote(&x);
                    assert_eq!(promote_inverse(&p).unwrap(), x);
                    assert_eq!(promote(&promote_inverse(&x).unwrap()), x);
                }
            }
        }
    }

    #[test]
    fn inverse_undoes_promotion_on_ragged_shapes() {
        let shapes = [sh(&[3, 2]), sh(&[2, 2, 1]), sh(&[3, 3, 1]), sh(&[4, 2])];
        for shape in &shapes {
            for k in 0..=2 {
                for x in enumerate_shape(shape, k) {
                    let p = promote(&x);
                    assert_eq!(p.shape(), *shape);
                    assert_eq!(p.max_value(), x.max_value());
                    assert_eq!(promote_inverse(&p).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn evacuation_is_an_involution() {
        for n in 1..=4 {
            for k in 0..n {
                for x in enumerate_two_row(n, k) {
                    assert_eq!(evacuate(&evacuate(&x)), x);
                }
            }
        }
        for x in enumerate_shape(&sh(&[2, 2, 1]), 1) {
            assert_eq!(evacuate(&evacuate(&x)), x);
        }
    }

    #[test]
    fn evacuation_fixes_the_self_dual_example() {
        let x = t(&[&[1, 2, 4], &[3, 4, 6], &[5, 7, 8]]);
        assert_eq!(evacuate(&x), x);
        assert_eq!(promotion_rank(&x).unwrap(), 2);
        let r = x.rot().unwrap();
        assert_eq!(r, t(&[&[1, 2, 4], &[3, 5, 6], &[5, 7, 8]]));
        assert_eq!(evacuate(&r), r);
    }

    #[test]
    fn dual_evacuation_composes_to_full_promotion() {
        for n in 1..=4 {
            for k in 0..n {
                for x in enumerate_two_row(n, k) {
                    let both = dual_evacuate(&evacuate(&x)).unwrap();
                    assert_eq!(both, promote_steps(&x, u64::from(x.max_value())));
                    assert_eq!(dual_evacuate(&dual_evacuate(&x).unwrap()).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn evacuation_conjugates_promotion_to_its_inverse() {
        for n in 1..=4 {
            for k in 0..n {
                for x in enumerate_two_row(n, k) {
                    let lhs = evacuate(&promote(&x));
                    let rhs = promote_inverse(&evacuate(&x)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn rank_divisibility_on_small_universes() {
        for n in 1..=4 {
            for k in 0..n {
                for x in enumerate_two_row(n, k) {
                    let pr = promotion_rank(&x).unwrap();
                    let er = evacuation_rank(&x).unwrap();
                    let maxv = u64::from(x.max_value());
                    assert_eq!(pr % er, 0);
                    assert_eq!((maxv * er) % pr, 0);
                }
            }
        }
    }

    #[test]
    fn orbit_structure_of_tiny_universes() {
        let five = enumerate_two_row(3, 1);
        assert_eq!(five.len(), 5);
        for x in &five {
            assert_eq!(promotion_rank(x).unwrap(), 5);
        }
        let syt = enumerate_two_row(2, 0);
        assert_eq!(syt.len(), 2);
        for x in &syt {
            assert_eq!(promotion_rank(x).unwrap(), 2);
        }
        let orbit = promotion_orbit(&five[0]).unwrap();
        assert_eq!(orbit.len(), 5);
        let mut sorted = orbit.clone();
        sorted.sort();
        let mut all = five.clone();
        all.sort();
        assert_eq!(sorted, all);
    }

    #[test]
    fn growth_diagram_of_the_running_example() {
        let x = t(&[&[1, 2, 4, 5, 6], &[2, 3, 6, 7, 8]]);
        let gd = GrowthDiagram::new(&x);
        assert_eq!(gd.side(), 9);
        let row0: Vec<PartitionShape> = [
            vec![],
            vec![1],
            vec![2, 1],
            vec![2, 2],
            vec![3, 2],
            vec![4, 2],
            vec![5, 3],
            vec![5, 4],
            vec![5, 5],
        ]
        .iter()
        .map(|p| sh(p))
        .collect();
        let row1: Vec<PartitionShape> = [
            vec![],
            vec![1],
            vec![2, 1],
            vec![3, 1],
            vec![4, 1],
            vec![5, 2],
            vec![5, 3],
            vec![5, 4],
            vec![5, 5],
        ]
        .iter()
        .map(|p| sh(p))
        .collect();
        assert_eq!(gd.rows()[0].shapes(), &row0[..]);
        assert_eq!(gd.rows()[1].shapes(), &row1[..]);
        // Promotion rank 4 repeats the rows with period 4.
        for i in 0..5 {
            assert_eq!(gd.rows()[i], gd.rows()[i + 4]);
        }
        assert_eq!(gd.shape_at(4, 7), Some(&sh(&[2, 2])));
        assert_eq!(gd.shape_at(0, 9), None);
        assert_eq!(gd.shape_at(2, 1), None);
        assert_eq!(gd.evacuation_chain(), evacuate(&x).chain());
    }

    #[test]
    fn growth_diagram_counts_its_squares() {
        let x = t(&[&[1, 2], &[2, 3]]);
        let gd = GrowthDiagram::new(&x);
        // Side m + 1 = 4 gives m * (m - 1) = 6 aligned squares.
        assert_eq!(gd.local_squares().len(), 6);
        for [nw, ne, sw, se] in gd.local_squares() {
            assert!(ne.contains(&nw) && nw.contains(&sw) && ne.contains(&se) && se.contains(&sw));
        }
    }
}
