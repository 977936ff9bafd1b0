//! The aligned squares of growth diagrams follow local rules: within the
//! harvested corpus, three corners of a square pin down the fourth.

use inctab::dynamics::GrowthDiagram;
use inctab::enumerate::{enumerate_shape, enumerate_two_row};
use inctab::PartitionShape;
use std::collections::BTreeMap;

fn harvest() -> Vec<[PartitionShape; 4]> {
    let mut squares = Vec::new();
    for n in 1..=5usize {
        for k in 0..n {
            for t in enumerate_two_row(n, k) {
                squares.extend(GrowthDiagram::new(&t).local_squares());
            }
        }
    }
    for parts in [vec![3, 2], vec![2, 2, 1], vec![3, 3, 1]] {
        let shape = PartitionShape::new(parts).unwrap();
        for k in 0..=2 {
            for t in enumerate_shape(&shape, k) {
                squares.extend(GrowthDiagram::new(&t).local_squares());
            }
        }
    }
    squares
}

#[test]
fn forward_completion_is_a_function() {
    let mut rule: BTreeMap<[PartitionShape; 3], PartitionShape> = BTreeMap::new();
    for [nw, ne, sw, se] in harvest() {
        if let Some(prev) = rule.insert([nw.clone(), ne.clone(), sw.clone()], se.clone()) {
            assert_eq!(prev, se, "square ({nw}, {ne}, {sw}) completes two ways");
        }
    }
    assert!(rule.len() > 100, "the corpus exercises many distinct squares");
}

#[test]
fn backward_completion_is_a_function() {
    let mut rule: BTreeMap<[PartitionShape; 3], PartitionShape> = BTreeMap::new();
    for [nw, ne, sw, se] in harvest() {
        if let Some(prev) = rule.insert([ne.clone(), sw.clone(), se.clone()], nw.clone()) {
            assert_eq!(prev, nw, "square ({ne}, {sw}, {se}) completes two ways");
        }
    }
    assert!(rule.len() > 100, "the corpus exercises many distinct squares");
}
