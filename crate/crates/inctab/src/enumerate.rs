//! Exhaustive enumeration of increasing tableaux.

use crate::shape::PartitionShape;
use crate::tableau::IncreasingTableau;

/// All increasing tableaux of rectangular shape `2 x n` with exactly `k`
/// repeated values, ordered lexicographically on their height words.
///
/// The largest value is `2n - k`, so `k` ranges over `0..n`; the value `1`
/// occupies only the top left box and `2n - k` only the bottom right box,
/// which forces at least one unrepeated value in each row and rules out
/// `k = n`. Out-of-range `k` yields an empty list.
pub fn enumerate_two_row(n: usize, k: usize) -> Vec<IncreasingTableau> {
    let mut out = Vec::new();
    if n == 0 || k >= n {
        return out;
    }
    let m = 2 * n - k;
    // Walk height words: h_0 = 0, steps in {-1, 0, +1}, heights stay
    // nonnegative, no 0-step at height 0, exactly k level steps and
    // n - k rises, ending at height 0. Trying the smaller next height
    // first yields lexicographic order on the words.
    let mut heights = vec![0u32; m + 1];
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(), Vec::new()];
    dfs_two_row(m, k, n - k, 1, 0, 0, 0, &mut heights, &mut rows, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn dfs_two_row(
    m: usize,
    levels: usize,
    rises: usize,
    pos: usize,
    used_levels: usize,
    used_rises: usize,
    used_falls: usize,
    heights: &mut Vec<u32>,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<IncreasingTableau>,
) {
    let h = heights[pos - 1];
    if pos > m {
        if h == 0 && used_levels == levels && used_rises == rises {
            out.push(
                IncreasingTableau::new(rows.clone()).expect("height words encode valid tableaux"),
            );
        }
        return;
    }
    let remaining = m - pos + 1;
    // The path must still descend h times.
    if (h as usize) > remaining {
        return;
    }
    let v = pos as u32;
    if h > 0 && used_falls < rises {
        heights[pos] = h - 1;
        rows[1].push(v);
        dfs_two_row(m, levels, rises, pos + 1, used_levels, used_rises, used_falls + 1, heights, rows, out);
        rows[1].pop();
    }
    if h > 0 && used_levels < levels {
        heights[pos] = h;
        rows[0].push(v);
        rows[1].push(v);
        dfs_two_row(m, levels, rises, pos + 1, used_levels + 1, used_rises, used_falls, heights, rows, out);
        rows[0].pop();
        rows[1].pop();
    }
    if used_rises < rises {
        heights[pos] = h + 1;
        rows[0].push(v);
        dfs_two_row(m, levels, rises, pos + 1, used_levels, used_rises + 1, used_falls, heights, rows, out);
        rows[0].pop();
    }
}

/// All increasing tableaux of the given shape with exactly `k` repeated
/// values, ordered lexicographically on their truncation chains (shapes
/// compared by their row-length lists).
///
/// Tableaux are built as chains of nested shapes in which each step adds
/// a nonempty antichain of boxes; `k` counts the boxes beyond one per step.
pub fn enumerate_shape(shape: &PartitionShape, k: usize) -> Vec<IncreasingTableau> {
    let total = shape.size();
    if total == 0 {
        return if k == 0 { vec![IncreasingTableau::empty()] } else { Vec::new() };
    }
    if k >= total {
        return Vec::new();
    }
    let m = total - k;
    let mut cur = vec![0usize; shape.rows()];
    let mut keyed: Vec<(Vec<Vec<usize>>, IncreasingTableau)> = Vec::new();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.rows()];
    let mut chain_key: Vec<Vec<usize>> = vec![Vec::new()];
    dfs_shape(shape, m, 1, &mut cur, &mut rows, &mut chain_key, &mut keyed);
    keyed.sort();
    keyed.into_iter().map(|(_, t)| t).collect()
}

fn dfs_shape(
    target: &PartitionShape,
    m: usize,
    step: usize,
    cur: &mut Vec<usize>,
    rows: &mut Vec<Vec<u32>>,
    chain_key: &mut Vec<Vec<usize>>,
    out: &mut Vec<(Vec<Vec<usize>>, IncreasingTableau)>,
) {
    if step > m {
        if cur.iter().copied().eq(target.parts().iter().copied()) {
            let tableau_rows: Vec<Vec<u32>> =
                rows.iter().filter(|r| !r.is_empty()).cloned().collect();
            let t = IncreasingTableau::new(tableau_rows)
                .expect("antichain chains encode valid tableaux");
            out.push((chain_key.clone(), t));
        }
        return;
    }
    // Boxes still missing must fit in the remaining steps; each step adds
    // at most one box per row.
    let missing: usize = target
        .parts()
        .iter()
        .zip(cur.iter())
        .map(|(&t, &c)| t - c)
        .sum();
    let steps_left = m - step + 1;
    if missing < steps_left || missing > steps_left * target.rows() {
        return;
    }
    // A row can take a box when it has room in the target and the new box
    // stays strictly left of the row above; that one condition makes any
    // subset of such rows a valid antichain addition.
    let addable: Vec<usize> = (0..target.rows())
        .filter(|&r| cur[r] < target.row_len(r) && (r == 0 || cur[r] < cur[r - 1]))
        .collect();
    let count = addable.len();
    if count == 0 {
        return;
    }
    for mask in 1u32..(1 << count) {
        let chosen: Vec<usize> = (0..count)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| addable[i])
            .collect();
        for &r in &chosen {
            rows[r].push(step as u32);
            cur[r] += 1;
        }
        chain_key.push(cur.iter().copied().filter(|&len| len > 0).collect());
        dfs_shape(target, m, step + 1, cur, rows, chain_key, out);
        chain_key.pop();
        for &r in &chosen {
            rows[r].pop();
            cur[r] -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_row_small_counts() {
        assert_eq!(enumerate_two_row(1, 0).len(), 1);
        assert_eq!(enumerate_two_row(2, 0).len(), 2);
        assert_eq!(enumerate_two_row(2, 1).len(), 1);
        assert_eq!(enumerate_two_row(3, 0).len(), 5);
        assert_eq!(enumerate_two_row(3, 1).len(), 5);
        assert_eq!(enumerate_two_row(3, 2).len(), 1);
        assert_eq!(enumerate_two_row(3, 3).len(), 0);
        assert_eq!(enumerate_two_row(0, 0).len(), 0);
    }

    #[test]
    fn two_row_totals_are_small_schroeder_numbers() {
        let totals: Vec<usize> = (1..=6)
            .map(|n| (0..n).map(|k| enumerate_two_row(n, k).len()).sum())
            .collect();
        assert_eq!(totals, vec![1, 3, 11, 45, 197, 903]);
    }

    #[test]
    fn the_unique_one_repeat_tableau_on_two_columns() {
        let xs = enumerate_two_row(2, 1);
        assert_eq!(xs.len(), 1);
        assert_eq!(xs[0].rows(), &[vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn two_row_matches_shape_enumeration() {
        for n in 1..=5 {
            for k in 0..n {
                let a = enumerate_two_row(n, k);
                let shape = PartitionShape::rectangular(2, n);
                let b = enumerate_shape(&shape, k);
                let mut a_sorted = a.clone();
                a_sorted.sort();
                let mut b_sorted = b.clone();
                b_sorted.sort();
                assert_eq!(a_sorted, b_sorted, "n={n} k={k}");
                // Both orders are duplicate-free.
                a_sorted.dedup();
                assert_eq!(a_sorted.len(), a.len());
            }
        }
    }

    #[test]
    fn standard_counts_on_small_rectangles() {
        // Standard tableaux counts: 2 x n gives the Catalan numbers and
        // 3 x 3 gives 42.
        let c33 = enumerate_shape(&PartitionShape::rectangular(3, 3), 0);
        assert_eq!(c33.len(), 42);
    }

    #[test]
    fn height_word_order_is_lexicographic() {
        use crate::words::height_word;
        for n in 1..=5 {
            for k in 0..n {
                let words: Vec<Vec<u32>> = enumerate_two_row(n, k)
                    .iter()
                    .map(|t| height_word(t).unwrap().as_slice().to_vec())
                    .collect();
                assert!(words.windows(2).all(|w| w[0] < w[1]), "n={n} k={k}");
            }
        }
    }
}
