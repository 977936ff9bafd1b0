//! Exhaustive fixed-point counts for the cyclic actions, compared against
//! root-of-unity evaluations, product formulas, and symmetric partition
//! counts.

use crate::dynamics::{evacuate, promotion_rank, DynamicsError};
use crate::enumerate::{enumerate_shape, enumerate_two_row};
use crate::noncrossing::{count_rotation_invariant_singleton_free, typeb_count};
use crate::qpoly::{closed_form_f, eval_at_root, f_poly, IntPolynomial};
use crate::shape::PartitionShape;
use num_bigint::BigInt;
use num_integer::Integer;
use std::collections::BTreeMap;

/// Which cyclic action a report is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SievingGroup {
    Promotion,
    Evacuation,
}

/// One checked group element: the number of tableaux it fixes and the
/// value of the q-count at the matching root of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CspEntry {
    pub m: u64,
    pub fixed: u64,
    pub f_value: i64,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CspReport {
    pub n: u64,
    pub k: u64,
    pub order: u64,
    pub group: SievingGroup,
    pub entries: Vec<CspEntry>,
    pub ok: bool,
}

fn root_value(f: &IntPolynomial, order: u64) -> Option<i64> {
    let v = if order == 1 {
        f.eval_one()
    } else {
        eval_at_root(f, order).ok()?
    };
    i64::try_from(&v).ok()
}

/// Checks the sieving statement for promotion: for every power of the
/// cyclic group of order 2n - k, the fixed tableaux are counted by the
/// q-count at the matching root of unity, and for proper powers also by
/// the factorial product form.
pub fn csp_promotion(n: usize, k: usize) -> CspReport {
    let universe = enumerate_two_row(n, k);
    let order = (2 * n - k) as u64;
    let ranks: Vec<u64> = universe
        .iter()
        .map(|t| promotion_rank(t).expect("two-row orbits close"))
        .collect();
    let f = f_poly(n as u64, k as u64);
    let entries: Vec<CspEntry> = (0..order)
        .map(|m| {
            let fixed = ranks.iter().filter(|&&r| m % r == 0).count() as u64;
            let d = order / m.gcd(&order);
            let (f_value, mut ok) = match root_value(&f, d) {
                Some(v) => (v, true),
                None => (-1, false),
            };
            ok &= i64::try_from(fixed) == Ok(f_value);
            if d >= 2 {
                ok &= closed_form_f(n as u64, k as u64, d) == BigInt::from(f_value);
            }
            CspEntry { m, fixed, f_value, ok }
        })
        .collect();
    let ok = entries.iter().all(|e| e.ok);
    CspReport { n: n as u64, k: k as u64, order, group: SievingGroup::Promotion, entries, ok }
}

/// Checks the sieving statement for evacuation under the two-element
/// group: the identity fixes everything, and the involution fixes as many
/// tableaux as the q-count's value at -1.
pub fn csp_evacuation(n: usize, k: usize) -> CspReport {
    let universe = enumerate_two_row(n, k);
    let f = f_poly(n as u64, k as u64);
    let mut entries = Vec::with_capacity(2);
    for m in 0..2u64 {
        let fixed = if m == 0 {
            universe.len() as u64
        } else {
            universe.iter().filter(|t| evacuate(t) == **t).count() as u64
        };
        let d = if m == 0 { 1 } else { 2 };
        let (f_value, mut ok) = match root_value(&f, d) {
            Some(v) => (v, true),
            None => (-1, false),
        };
        ok &= i64::try_from(fixed) == Ok(f_value);
        entries.push(CspEntry { m, fixed, f_value, ok });
    }
    let ok = entries.iter().all(|e| e.ok);
    CspReport { n: n as u64, k: k as u64, order: 2, group: SievingGroup::Evacuation, entries, ok }
}

/// Counts fixed tableaux of each proper power four independent ways:
/// promotion ranks, the q-count at a root of unity, the factorial product
/// form, and rotation-symmetric singleton-free noncrossing partitions.
/// Returns false on any disagreement.
pub fn csp_cross_check(n: usize, k: usize) -> bool {
    let universe = enumerate_two_row(n, k);
    let order = 2 * n - k;
    let ranks: Vec<u64> = universe
        .iter()
        .map(|t| promotion_rank(t).expect("two-row orbits close"))
        .collect();
    let f = f_poly(n as u64, k as u64);
    for d in 1..=order {
        if order % d != 0 {
            continue;
        }
        let g = (order / d) as u64;
        let by_ranks = ranks.iter().filter(|&&r| g % r == 0).count() as u64;
        let by_root = match root_value(&f, d as u64) {
            Some(v) if v >= 0 => v as u64,
            _ => return false,
        };
        let by_partitions =
            count_rotation_invariant_singleton_free((2 * n - k) as u32, g as u32, n - k);
        let by_formula = if d == 1 {
            BigInt::from(universe.len())
        } else if n % d == 0 {
            typeb_count((order / d) as u64, ((n - k) / d) as u64, false)
        } else if (n + 1) % d == 0 {
            typeb_count((order / d) as u64, ((n - k - 1) / d) as u64, true)
        } else {
            BigInt::from(0u32)
        };
        if by_ranks != by_root
            || by_partitions != by_root
            || by_formula != BigInt::from(by_root)
        {
            return false;
        }
    }
    true
}

/// The distribution of the major index over the two-row universe, as a
/// polynomial in q.
pub fn maj_generating_function(n: usize, k: usize) -> IntPolynomial {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for t in enumerate_two_row(n, k) {
        let maj = t.maj().expect("the universe is two-row rectangular") as usize;
        if coeffs.len() <= maj {
            coeffs.resize(maj + 1, BigInt::from(0u32));
        }
        coeffs[maj] += 1;
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// Promotion orders over a whole universe, tallied as order -> count.
pub fn rank_census(shape: &PartitionShape, repeats: usize) -> Result<BTreeMap<u64, u64>, DynamicsError> {
    let mut census = BTreeMap::new();
    for t in enumerate_shape(shape, repeats) {
        let r = promotion_rank(&t)?;
        *census.entry(r).or_insert(0u64) += 1;
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::{maj_shift, IntPolynomial};

    #[test]
    fn promotion_sieving_holds_at_desk_scale() {
        for n in 1..=5 {
            for k in 0..n {
                let report = csp_promotion(n, k);
                assert!(report.ok, "promotion sieving failed at n={n} k={k}");
                assert_eq!(report.entries.len(), 2 * n - k);
                assert_eq!(report.entries[0].fixed as usize, enumerate_two_row(n, k).len());
            }
        }
    }

    #[test]
    fn evacuation_sieving_holds_at_desk_scale() {
        for n in 1..=5 {
            for k in 0..n {
                let report = csp_evacuation(n, k);
                assert!(report.ok, "evacuation sieving failed at n={n} k={k}");
            }
        }
    }

    #[test]
    fn all_four_counting_routes_agree() {
        for n in 1..=5 {
            for k in 0..n {
                assert!(csp_cross_check(n, k), "cross check failed at n={n} k={k}");
            }
        }
    }

    #[test]
    fn major_index_distribution_is_the_shifted_q_count() {
        let g = maj_generating_function(3, 1);
        let mut expected = vec![BigInt::from(0u32); 4];
        expected.extend(std::iter::repeat(BigInt::from(1u32)).take(5));
        assert_eq!(g, IntPolynomial::from_coeffs(expected));
        for n in 1..=5 {
            for k in 0..n {
                let lhs = maj_generating_function(n, k);
                let shift = IntPolynomial::monomial(
                    BigInt::from(1u32),
                    maj_shift(n as u64, k as u64) as usize,
                );
                let rhs = &shift * &f_poly(n as u64, k as u64);
                assert_eq!(lhs, rhs, "maj distribution at n={n} k={k}");
            }
        }
    }

    #[test]
    fn census_collects_whole_orbits() {
        let shape = PartitionShape::new(vec![3, 3]).unwrap();
        let census = rank_census(&shape, 1).unwrap();
        assert_eq!(census.get(&5), Some(&5));
        assert_eq!(census.values().sum::<u64>(), 5);
        let square = PartitionShape::new(vec![2, 2]).unwrap();
        let syt = rank_census(&square, 0).unwrap();
        assert_eq!(syt.get(&2), Some(&2));
    }
}
