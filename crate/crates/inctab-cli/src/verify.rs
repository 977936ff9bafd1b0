//! Verification suites behind the `verify` subcommand. Each suite walks
//! its exhaustive universe and returns witness strings for every failure.

use inctab::dynamics::{
    dual_evacuate, evacuate, promote, promote_inverse, promote_steps, promotion_rank,
};
use inctab::enumerate::{enumerate_shape, enumerate_two_row};
use inctab::flag::{from_flag, rot_flag, skew_of, to_flag};
use inctab::frieze::{classify_row, jdt_frieze, next_frieze_row, TropicalFrieze};
use inctab::noncrossing::{
    from_ncpartition, to_ncpartition, typeb_count, typeb_product_form, typeb_symmetric_total,
};
use inctab::qpoly::{binomial, closed_form_f, eval_at_root, f_poly, maj_shift, IntPolynomial};
use inctab::sieving::{csp_cross_check, csp_evacuation, csp_promotion, maj_generating_function};
use inctab::words::{from_steps, height_growth_diagram, height_word, to_steps, word_factorize, word_promote};
use inctab::{IncreasingTableau, PartitionShape};
use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

fn grid(n_max: usize) -> Vec<(usize, usize)> {
    (1..=n_max).flat_map(|n| (0..n).map(move |k| (n, k))).collect()
}

fn witness(label: &str, n: usize, k: usize, t: &IncreasingTableau) -> String {
    format!("{label} fails at n={n} k={k} for\n{t}")
}

/// Every cell check over the two-row universes, run in parallel.
fn over_universes<F>(n_max: usize, cell: F) -> Vec<String>
where
    F: Fn(usize, usize, &IncreasingTableau, &mut Vec<String>) + Sync,
{
    grid(n_max)
        .par_iter()
        .flat_map_iter(|&(n, k)| {
            let mut bad = Vec::new();
            for t in enumerate_two_row(n, k) {
                cell(n, k, &t, &mut bad);
            }
            bad
        })
        .collect()
}

pub fn bijections(n_max: usize) -> Vec<String> {
    over_universes(n_max, |n, k, t, bad| {
        let steps = to_steps(t).unwrap();
        if from_steps(&steps) != *t {
            bad.push(witness("path round trip", n, k, t));
        }
        if steps.heights() != height_word(t).unwrap() {
            bad.push(witness("path heights", n, k, t));
        }
        let f = to_flag(t).unwrap();
        if from_flag(&f) != Ok(t.clone()) {
            bad.push(witness("flag round trip", n, k, t));
        }
        if to_flag(&evacuate(t)).unwrap() != evacuate(&f) {
            bad.push(witness("flag evacuation transport", n, k, t));
        }
        if t.maj().unwrap() != f.standard_major_index().unwrap() {
            bad.push(witness("major index transport", n, k, t));
        }
        if skew_of(t).unwrap().rectify() != f {
            bad.push(witness("skew rectification", n, k, t));
        }
        if rot_flag(&f).unwrap() != skew_of(&t.rot().unwrap()).unwrap() {
            bad.push(witness("skew half-turn transport", n, k, t));
        }
        let p = to_ncpartition(t).unwrap();
        if from_ncpartition(&p) != Ok(t.clone()) {
            bad.push(witness("partition round trip", n, k, t));
        }
        if to_ncpartition(&promote(t)).unwrap() != p.rotate() {
            bad.push(witness("partition rotation transport", n, k, t));
        }
    })
}

pub fn dynamics(n_max: usize) -> Vec<String> {
    let mut bad = over_universes(n_max, |n, k, t, bad| {
        let order = (2 * n - k) as u64;
        if promote_steps(t, order) != *t {
            bad.push(witness("full promotion period", n, k, t));
        }
        if promote_inverse(&promote(t)) != Ok(t.clone()) {
            bad.push(witness("promotion inverse", n, k, t));
        }
        let e = evacuate(t);
        if evacuate(&e) != *t {
            bad.push(witness("double evacuation", n, k, t));
        }
        let star = dual_evacuate(t).unwrap();
        if dual_evacuate(&star) != Ok(t.clone()) {
            bad.push(witness("double dual evacuation", n, k, t));
        }
        if promote(&e) != evacuate(&promote_inverse(t).unwrap()) {
            bad.push(witness("evacuation conjugates promotion", n, k, t));
        }
        if dual_evacuate(&e).unwrap() != promote_steps(t, order) {
            bad.push(witness("composite equals full promotion", n, k, t));
        }
        if e != t.rot().unwrap() {
            bad.push(witness("evacuation equals half turn", n, k, t));
        }
        if promotion_rank(t).map(|r| order % r) != Ok(0) {
            bad.push(witness("orbit size divides the order", n, k, t));
        }
    });
    let shape = PartitionShape::new(vec![4, 4, 4]).unwrap();
    let counts: Vec<usize> = (0..=shape.size())
        .map(|k| enumerate_shape(&shape, k).len())
        .collect();
    if counts[2] != 1596 {
        bad.push(format!("3x4 census at two repeats: {} != 1596", counts[2]));
    }
    let total: usize = counts.iter().sum();
    if total != 4593 {
        bad.push(format!("3x4 census total: {total} != 4593"));
    }
    bad
}

pub fn words(n_max: usize) -> Vec<String> {
    over_universes(n_max, |n, k, t, bad| {
        let w = height_word(t).unwrap();
        if word_promote(&w) != height_word(&promote(t)).unwrap() {
            bad.push(witness("word promotion transport", n, k, t));
        }
        if word_factorize(&w).reassemble() != w {
            bad.push(witness("factorization reassembly", n, k, t));
        }
        if w.level_count() != t.repeats() {
            bad.push(witness("level step count", n, k, t));
        }
        let h = height_growth_diagram(t).unwrap();
        if h.rows()[0] != h.last_column() {
            bad.push(witness("growth first row vs last column", n, k, t));
        }
        if h.evacuation_word() != height_word(&evacuate(t)).unwrap() {
            bad.push(witness("growth evacuation column", n, k, t));
        }
    })
}

pub fn frieze(n_max: usize) -> Vec<String> {
    over_universes(n_max, |n, k, t, bad| {
        let fr = jdt_frieze(t).unwrap();
        if !fr.satisfies_rule() {
            bad.push(witness("slide frieze rule", n, k, t));
        }
        let period = fr.glide_period();
        let grown = TropicalFrieze::from_seed(fr.rows()[0].clone(), 2 * period + 1).unwrap();
        if (0..=period).any(|i| grown.rows()[i] != grown.rows()[i + period]) {
            bad.push(witness("glide periodicity", n, k, t));
        }
        for row in fr.rows() {
            let next = next_frieze_row(row);
            if !classify_row(row).encodes_word() || !classify_row(&next).encodes_word() {
                bad.push(witness("row condition closure", n, k, t));
                break;
            }
            if k == 0
                && (!classify_row(row).encodes_standard_word()
                    || !classify_row(&next).encodes_standard_word())
            {
                bad.push(witness("strict row condition closure", n, k, t));
                break;
            }
        }
    })
}

pub fn csp(n_max: usize) -> Vec<String> {
    grid(n_max)
        .par_iter()
        .flat_map_iter(|&(n, k)| {
            let mut bad = Vec::new();
            let p = csp_promotion(n, k);
            for e in p.entries.iter().filter(|e| !e.ok) {
                bad.push(format!(
                    "promotion sieving n={n} k={k} m={}: fixed {} vs value {}",
                    e.m, e.fixed, e.f_value
                ));
            }
            let ev = csp_evacuation(n, k);
            for e in ev.entries.iter().filter(|e| !e.ok) {
                bad.push(format!(
                    "evacuation sieving n={n} k={k} m={}: fixed {} vs value {}",
                    e.m, e.fixed, e.f_value
                ));
            }
            if !csp_cross_check(n, k) {
                bad.push(format!("count routes disagree at n={n} k={k}"));
            }
            bad
        })
        .collect()
}

/// Arithmetic identities: the shifted q-count against the major index
/// distribution, root evaluations against the product form, and the
/// half-turn symmetric count formulas.
pub fn identities(n_max: usize, max_half: u64) -> Vec<String> {
    let mut bad = Vec::new();
    for (n, k) in grid(n_max) {
        let g = maj_generating_function(n, k);
        let shift = maj_shift(n as u64, k as u64) as usize;
        let expected = &IntPolynomial::monomial(BigInt::one(), shift) * &f_poly(n as u64, k as u64);
        if g != expected {
            bad.push(format!("major index distribution differs at n={n} k={k}"));
        }
    }
    for n in 1..=7u64 {
        for k in 0..n {
            let f = f_poly(n, k);
            for d in 2..=(2 * n - k) {
                if (2 * n - k) % d != 0 {
                    continue;
                }
                if eval_at_root(&f, d).unwrap() != closed_form_f(n, k, d) {
                    bad.push(format!("root value vs product form at n={n} k={k} d={d}"));
                }
            }
        }
    }
    for n in 1..=max_half {
        for pairs in 0..=n {
            for central in [false, true] {
                if typeb_count(n, pairs, central) != typeb_product_form(n, pairs, central) {
                    bad.push(format!(
                        "symmetric count vs product form at n={n} pairs={pairs} central={central}"
                    ));
                }
            }
            let c = binomial(n, pairs);
            let square = &c * &c;
            let central_total = typeb_symmetric_total(n, pairs, true);
            let both = typeb_symmetric_total(n, pairs, false) + &central_total;
            if both != square {
                bad.push(format!("pair totals vs squared binomial at n={n} pairs={pairs}"));
            }
            if central_total * BigInt::from(n) != square * BigInt::from(n - pairs) {
                bad.push(format!("central share at n={n} pairs={pairs}"));
            }
        }
    }
    bad
}

pub const SUITE_NAMES: &[&str] = &["bijections", "dynamics", "words", "frieze", "csp", "identities"];

pub fn run_suite(name: &str, n_max: usize) -> Vec<String> {
    match name {
        "bijections" => bijections(n_max),
        "dynamics" => dynamics(n_max),
        "words" => words(n_max),
        "frieze" => frieze(n_max),
        "csp" => csp(n_max),
        "identities" => identities(n_max, 30),
        other => vec![format!("unknown suite {other}")],
    }
}
