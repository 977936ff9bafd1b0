//! Randomized round trips over the two-row universes.

use inctab::dynamics::{evacuate, promote, promote_inverse};
use inctab::flag::{from_flag, to_flag};
use inctab::frieze::{row_to_word, word_to_row, TropicalFrieze};
use inctab::json::{FriezeDto, PartitionDto, TableauDto};
use inctab::noncrossing::{from_ncpartition, to_ncpartition};
use inctab::words::{from_steps, height_word, to_steps, word_factorize};
use inctab::IncreasingTableau;
use inctab::enumerate::enumerate_two_row;
use proptest::prelude::*;

/// A random element of a random two-row universe with n up to 5.
fn any_two_row() -> impl Strategy<Value = IncreasingTableau> {
    (1..=5usize)
        .prop_flat_map(|n| (Just(n), 0..n))
        .prop_flat_map(|(n, k)| {
            let universe = enumerate_two_row(n, k);
            let len = universe.len();
            (Just(universe), 0..len)
        })
        .prop_map(|(universe, i)| universe[i].clone())
}

proptest! {
    #[test]
    fn promotion_round_trips(t in any_two_row()) {
        prop_assert_eq!(promote_inverse(&promote(&t)).unwrap(), t.clone());
        prop_assert_eq!(promote(&promote_inverse(&t).unwrap()), t);
    }

    #[test]
    fn evacuation_and_half_turn_are_involutions(t in any_two_row()) {
        prop_assert_eq!(evacuate(&evacuate(&t)), t.clone());
        prop_assert_eq!(t.rot().unwrap().rot().unwrap(), t);
    }

    #[test]
    fn path_and_word_encodings_round_trip(t in any_two_row()) {
        let steps = to_steps(&t).unwrap();
        prop_assert_eq!(from_steps(&steps), t.clone());
        let word = height_word(&t).unwrap();
        prop_assert_eq!(steps.heights(), word.clone());
        prop_assert_eq!(word_factorize(&word).reassemble(), word.clone());
        let row = word_to_row(&word);
        prop_assert_eq!(row_to_word(&row), Some(word));
    }

    #[test]
    fn flag_and_partition_bijections_round_trip(t in any_two_row()) {
        prop_assert_eq!(from_flag(&to_flag(&t).unwrap()).unwrap(), t.clone());
        prop_assert_eq!(from_ncpartition(&to_ncpartition(&t).unwrap()).unwrap(), t);
    }

    #[test]
    fn json_payloads_round_trip(t in any_two_row()) {
        let text = serde_json::to_string(&TableauDto::of(&t)).unwrap();
        let back: TableauDto = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.into_tableau().unwrap(), t.clone());

        let p = to_ncpartition(&t).unwrap();
        let text = serde_json::to_string(&PartitionDto::of(&p)).unwrap();
        let back: PartitionDto = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.into_partition().unwrap(), p);
    }

    #[test]
    fn frieze_payloads_round_trip(seed in proptest::collection::vec(-3i64..=3, 1..=10)) {
        let mut row = vec![0i64];
        row.extend(seed);
        row.push(0);
        let depth = row.len() + 2;
        let fr = TropicalFrieze::from_seed(row, depth).unwrap();
        let text = serde_json::to_string(&FriezeDto::of(&fr)).unwrap();
        let back: FriezeDto = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.into_frieze().unwrap(), fr);
    }
}
