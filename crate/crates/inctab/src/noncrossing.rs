//! Noncrossing set partitions, their rotation, and the half-turn
//! symmetric counts used by the fixed-point formulas.

use crate::qpoly::{binomial, exact_ratio, factorial};
use crate::tableau::{IncreasingTableau, ShapeRequirement};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum NcError {
    #[error("blocks must be nonempty")]
    EmptyBlock,
    #[error("value {value} is outside 1..={n}")]
    OutOfRange { value: u32, n: u32 },
    #[error("value {value} appears in more than one block")]
    Repeated { value: u32 },
    #[error("value {value} is missing from every block")]
    Missing { value: u32 },
    #[error("blocks {first:?} and {second:?} cross")]
    Crossing { first: Vec<u32>, second: Vec<u32> },
    #[error("block {{{value}}} is a singleton")]
    HasSingleton { value: u32 },
}

/// A noncrossing partition of 1..=n. Blocks are kept sorted, and the
/// block list is sorted by minima.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NoncrossingPartition {
    n: u32,
    blocks: Vec<Vec<u32>>,
}

/// Two sorted blocks cross when their merged sequence alternates between
/// them more than twice.
fn blocks_cross(a: &[u32], b: &[u32]) -> bool {
    let mut switches = 0u32;
    let mut last = 0u8;
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i] < b[j]);
        let cur = if take_a { 1 } else { 2 };
        if take_a {
            i += 1;
        } else {
            j += 1;
        }
        if cur != last {
            if last != 0 {
                switches += 1;
            }
            last = cur;
        }
    }
    switches > 2
}

impl NoncrossingPartition {
    pub fn new(n: u32, blocks: Vec<Vec<u32>>) -> Result<Self, NcError> {
        let mut blocks: Vec<Vec<u32>> = blocks;
        let mut seen = vec![false; n as usize + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(NcError::EmptyBlock);
            }
            b.sort_unstable();
            for &v in b.iter() {
                if v == 0 || v > n {
                    return Err(NcError::OutOfRange { value: v, n });
                }
                if seen[v as usize] {
                    return Err(NcError::Repeated { value: v });
                }
                seen[v as usize] = true;
            }
        }
        if let Some(v) = (1..=n).find(|&v| !seen[v as usize]) {
            return Err(NcError::Missing { value: v });
        }
        blocks.sort_by_key(|b| b[0]);
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                if blocks_cross(&blocks[i], &blocks[j]) {
                    return Err(NcError::Crossing {
                        first: blocks[i].clone(),
                        second: blocks[j].clone(),
                    });
                }
            }
        }
        Ok(NoncrossingPartition { n, blocks })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn has_singletons(&self) -> bool {
        self.blocks.iter().any(|b| b.len() == 1)
    }

    /// Rotation by one step: every value drops by one and 1 wraps to n.
    pub fn rotate(&self) -> Self {
        self.rotate_by(1)
    }

    /// Rotation by the given number of steps.
    pub fn rotate_by(&self, steps: u32) -> Self {
        let n = self.n;
        if n == 0 {
            return self.clone();
        }
        let s = steps % n;
        let map = |v: u32| (v - 1 + n - s) % n + 1;
        let blocks = self.blocks.iter().map(|b| b.iter().copied().map(map).collect()).collect();
        NoncrossingPartition::new(n, blocks).expect("rotation preserves the noncrossing property")
    }
}

impl fmt::Display for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "{{}}");
        }
        for b in &self.blocks {
            write!(f, "{{")?;
            for (i, v) in b.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

impl FromStr for NoncrossingPartition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let mut blocks = Vec::new();
        let mut max = 0u32;
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest.strip_prefix('{').ok_or("expected '{'")?;
            let end = open.find('}').ok_or("unclosed block")?;
            let inner = &open[..end];
            if !inner.trim().is_empty() {
                let block = inner
                    .split(',')
                    .map(|p| p.trim().parse::<u32>().map_err(|e| e.to_string()))
                    .collect::<Result<Vec<u32>, _>>()?;
                max = max.max(block.iter().copied().max().unwrap_or(0));
                blocks.push(block);
            }
            rest = open[end + 1..].trim_start();
        }
        NoncrossingPartition::new(max, blocks).map_err(|e| e.to_string())
    }
}

/// Sends a two-row rectangular tableau to a noncrossing partition: each
/// second-row value, taken in increasing order, is joined to the largest
/// first-row value below it that has not yet been consumed.
pub fn to_ncpartition(t: &IncreasingTableau) -> Result<NoncrossingPartition, ShapeRequirement> {
    if !t.is_two_row_rectangular() {
        return Err(ShapeRequirement::TwoRowRectangular { shape: t.shape() });
    }
    let n = t.max_value();
    let mut used = vec![false; n as usize + 1];
    let mut block_of: Vec<Option<usize>> = vec![None; n as usize + 1];
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    let row1 = t.row(0);
    for &i in t.row(1) {
        let s = row1
            .iter()
            .copied()
            .filter(|&v| v < i && !used[v as usize])
            .max()
            .expect("an unconsumed smaller first row value exists");
        used[s as usize] = true;
        let b = match block_of[s as usize] {
            Some(b) => b,
            None => {
                blocks.push(vec![s]);
                block_of[s as usize] = Some(blocks.len() - 1);
                blocks.len() - 1
            }
        };
        blocks[b].push(i);
        block_of[i as usize] = Some(b);
    }
    Ok(NoncrossingPartition::new(n, blocks).expect("the image partition is noncrossing"))
}

/// Inverse of `to_ncpartition`, defined on singleton-free partitions:
/// block minima populate the first row, maxima the second, and interior
/// values both.
pub fn from_ncpartition(p: &NoncrossingPartition) -> Result<IncreasingTableau, NcError> {
    let mut row1 = Vec::new();
    let mut row2 = Vec::new();
    for b in p.blocks() {
        if b.len() == 1 {
            return Err(NcError::HasSingleton { value: b[0] });
        }
        row1.push(b[0]);
        row2.push(*b.last().unwrap());
        for &v in &b[1..b.len() - 1] {
            row1.push(v);
            row2.push(v);
        }
    }
    row1.sort_unstable();
    row2.sort_unstable();
    Ok(IncreasingTableau::new(vec![row1, row2])
        .expect("a singleton-free noncrossing partition unfolds to a tableau"))
}

/// Visits every noncrossing partition of 1..=m exactly once. Blocks are
/// delivered sorted by minima. The recursion keeps a stack of gaps:
/// the minimum of a gap starts a block, each later block member splits
/// off the skipped run as a new gap, and the leftover tail becomes a gap
/// of its own.
pub fn for_each_noncrossing_partition<F: FnMut(&[Vec<u32>])>(m: u32, mut visit: F) {
    let mut segments: Vec<Vec<u32>> = Vec::new();
    if m > 0 {
        segments.push((1..=m).collect());
    }
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    rec(&mut segments, &mut blocks, &mut visit);
}

fn rec<F: FnMut(&[Vec<u32>])>(
    segments: &mut Vec<Vec<u32>>,
    blocks: &mut Vec<Vec<u32>>,
    visit: &mut F,
) {
    let seg = match segments.pop() {
        None => {
            let mut out = blocks.clone();
            out.sort_by_key(|b| b[0]);
            visit(&out);
            return;
        }
        Some(seg) => seg,
    };
    let mut block = vec![seg[0]];
    choose(&seg, 1, &mut block, segments, blocks, visit);
    segments.push(seg);
}

fn choose<F: FnMut(&[Vec<u32>])>(
    seg: &[u32],
    start: usize,
    block: &mut Vec<u32>,
    segments: &mut Vec<Vec<u32>>,
    blocks: &mut Vec<Vec<u32>>,
    visit: &mut F,
) {
    blocks.push(block.clone());
    let tail = start < seg.len();
    if tail {
        segments.push(seg[start..].to_vec());
    }
    rec(segments, blocks, visit);
    if tail {
        segments.pop();
    }
    blocks.pop();
    for j in start..seg.len() {
        block.push(seg[j]);
        let gap = j > start;
        if gap {
            segments.push(seg[start..j].to_vec());
        }
        choose(seg, j + 1, block, segments, blocks, visit);
        if gap {
            segments.pop();
        }
        block.pop();
    }
}

fn shifted_block(b: &[u32], shift: u32, m: u32) -> Vec<u32> {
    let mut out: Vec<u32> = b.iter().map(|&v| (v - 1 + shift) % m + 1).collect();
    out.sort_unstable();
    out
}

/// Whether a block list is fixed by rotation through the given shift.
pub fn blocks_shift_invariant(blocks: &[Vec<u32>], shift: u32, m: u32) -> bool {
    if m == 0 {
        return true;
    }
    let originals: std::collections::BTreeSet<&[u32]> =
        blocks.iter().map(|b| b.as_slice()).collect();
    blocks
        .iter()
        .all(|b| originals.contains(shifted_block(b, shift, m).as_slice()))
}

/// Counts noncrossing partitions of 1..=m without singletons, with the
/// given number of blocks, fixed by rotation through the given shift.
pub fn count_rotation_invariant_singleton_free(m: u32, shift: u32, blocks_wanted: usize) -> u64 {
    let mut count = 0u64;
    for_each_noncrossing_partition(m, |blocks| {
        if blocks.len() == blocks_wanted
            && blocks.iter().all(|b| b.len() >= 2)
            && blocks_shift_invariant(blocks, shift, m)
        {
            count += 1;
        }
    });
    count
}

/// Rational count of partitions of 1..=2n fixed by the half turn with
/// the given number of block pairs, split by whether a self-symmetric
/// block is present. Singletons allowed.
fn typeb_total(n: u64, pairs: u64, central: bool) -> BigRational {
    if pairs > n {
        return BigRational::zero();
    }
    if n == 0 {
        return if pairs == 0 && !central {
            BigRational::one()
        } else {
            BigRational::zero()
        };
    }
    let c = binomial(n, pairs);
    let factor = if central { n - pairs } else { pairs };
    BigRational::new(&c * &c * BigInt::from(factor), BigInt::from(n))
}

/// Integer form of the half-turn symmetric total, singletons allowed.
pub fn typeb_symmetric_total(n: u64, pairs: u64, central: bool) -> BigInt {
    let total = typeb_total(n, pairs, central);
    assert!(total.is_integer(), "the rational count collapses to an integer");
    total.to_integer()
}

/// Counts half-turn symmetric noncrossing partitions of 1..=2n with the
/// given number of block pairs and no singletons, by inclusion and
/// exclusion over forced singleton pairs.
pub fn typeb_count(n: u64, pairs: u64, central: bool) -> BigInt {
    let mut acc = BigRational::zero();
    for i in 0..=pairs.min(n) {
        let term = BigRational::from_integer(binomial(n, i)) * typeb_total(n - i, pairs - i, central);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    assert!(acc.is_integer(), "the alternating sum collapses to an integer");
    acc.to_integer()
}

/// Factorial product form of `typeb_count`, zero outside its domain.
pub fn typeb_product_form(n: u64, pairs: u64, central: bool) -> BigInt {
    if central {
        if n < 2 * pairs + 1 {
            return BigInt::zero();
        }
        let den = factorial(n - 2 * pairs - 1)
            * factorial(pairs)
            * factorial(pairs)
            * BigInt::from(n - pairs);
        exact_ratio(factorial(n), den)
    } else {
        if pairs == 0 || n < 2 * pairs {
            return BigInt::zero();
        }
        let den = factorial(n - 2 * pairs)
            * factorial(pairs)
            * factorial(pairs - 1)
            * BigInt::from(n - pairs);
        exact_ratio(factorial(n), den)
    }
}

/// Brute-force tabulation over all noncrossing partitions of 1..=2n fixed
/// by the half turn, keyed by (block pairs, self-symmetric block present,
/// singleton-free).
pub fn typeb_bruteforce(n: u64) -> BTreeMap<(u64, bool, bool), u64> {
    assert!(n <= 8, "brute force is limited to half size 8");
    let m = 2 * n as u32;
    let mut table = BTreeMap::new();
    for_each_noncrossing_partition(m, |blocks| {
        if !blocks_shift_invariant(blocks, n as u32, m) {
            return;
        }
        let central = blocks
            .iter()
            .filter(|b| shifted_block(b, n as u32, m) == **b)
            .count() as u64;
        let pairs = (blocks.len() as u64 - central) / 2;
        let sf = blocks.iter().all(|b| b.len() >= 2);
        *table.entry((pairs, central > 0, sf)).or_insert(0u64) += 1;
    });
    table
}
