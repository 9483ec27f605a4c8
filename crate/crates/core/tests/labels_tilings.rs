use proptest::prelude::*;

use dyck_tilings::dyck::{decode_lehmer, dts, encode_lehmer, hermite_history, hermite_label, hook_length_gf, tiling_of_decreasing};
use dyck_tilings::label::{build_poset, gf_z, inversion, post_order_seed, pre_order_seed};
use dyck_tilings::tiling::{enumerate_tilings_below, weight_gf};
use dyck_tilings::{Direction, DyckPath, LabeledTree, PlaneTree, QPoly};

fn trees(max: usize) -> impl Iterator<Item = PlaneTree> {
    (0..=max).flat_map(PlaneTree::enumerate)
}

fn hook_count(t: &PlaneTree) -> usize {
    let n = t.size();
    let f: usize = (1..=n).product();
    f / (0..n).map(|e| t.subtree(e).count()).product::<usize>()
}

#[test]
fn label_counts_follow_the_hook_formula() {
    for t in trees(5) {
        let inc = LabeledTree::enumerate(&t, Direction::Increasing);
        let dec = LabeledTree::enumerate(&t, Direction::Decreasing);
        assert_eq!(inc.len(), hook_count(&t), "{t}");
        assert_eq!(dec.len(), inc.len());
    }
}

#[test]
fn label_total_is_a_double_factorial() {
    let totals: Vec<usize> =
        (0..=5).map(|n| PlaneTree::enumerate(n).iter().map(|t| LabeledTree::enumerate(t, Direction::Increasing).len()).sum()).collect();
    assert_eq!(totals, [1, 1, 3, 15, 105, 945]);
}

#[test]
fn every_tiling_comes_from_one_label() {
    for n in 0..=4 {
        for lambda in DyckPath::enumerate(n) {
            let top = DyckPath::top(n);
            let tilings = enumerate_tilings_below(1, 1, lambda.steps(), top.steps());
            let t = PlaneTree::from_path(&lambda);
            let mut from_labels: Vec<_> = LabeledTree::enumerate(&t, Direction::Increasing)
                .iter()
                .map(|l| dts(l).unwrap().normalized())
                .collect();
            from_labels.sort_by_key(|x| format!("{x:?}"));
            let mut all: Vec<_> = tilings.into_iter().map(|x| x.normalized()).collect();
            all.sort_by_key(|x| format!("{x:?}"));
            assert_eq!(from_labels, all, "{lambda}");
        }
    }
}

#[test]
fn hook_formula_matches_the_tiling_count() {
    for t in trees(5) {
        let tilings = enumerate_tilings_below(1, 1, t.path().steps(), DyckPath::top(t.size()).steps());
        let by_tilings = weight_gf(&tilings);
        assert_eq!(by_tilings, hook_length_gf(&t).unwrap(), "{t}");
        assert_eq!(gf_z(&pre_order_seed(&t)).unwrap(), by_tilings, "{t}");
        assert_eq!(gf_z(&post_order_seed(&t)).unwrap(), by_tilings, "{t}");
    }
}

#[test]
fn seed_is_the_minimum() {
    for t in trees(4) {
        let p = build_poset(&pre_order_seed(&t)).unwrap();
        assert_eq!(p.len(), hook_count(&t));
        assert_eq!(p.minimal(), vec![0]);
        assert_eq!(p.rank_gf().unwrap(), hook_length_gf(&t).unwrap());
    }
}

#[test]
fn inversion_convention() {
    // counts j < i with w_j < w_i
    assert_eq!(inversion(&[1, 2, 3]), 3);
    assert_eq!(inversion(&[3, 2, 1]), 0);
    assert_eq!(inversion(&[2, 1, 3]), 2);
}

#[test]
fn the_312_pattern() {
    let t = PlaneTree::parse("UUDDUUDDUD").unwrap();
    let l = LabeledTree::from_pre_order(t, &[5, 2, 4, 1, 3], Direction::Decreasing).unwrap();
    assert!(!l.is_312_avoiding());
    assert!(tiling_of_decreasing(&l).unwrap().is_trivial());
    let z = PlaneTree::parse("UDUDUD").unwrap();
    let seed = LabeledTree::from_pre_order(z, &[1, 2, 3], Direction::Decreasing).unwrap();
    assert!(seed.is_312_avoiding());
}

#[test]
fn zigzag_example() {
    let t = PlaneTree::parse("UDUDUD").unwrap();
    assert_eq!(gf_z(&pre_order_seed(&t)).unwrap(), QPoly::from_i64s(&[1, 2, 2, 1]));
}

fn label_strategy() -> impl Strategy<Value = LabeledTree> {
    (0usize..=5).prop_flat_map(|n| {
        let ts = PlaneTree::enumerate(n);
        (0..ts.len()).prop_flat_map(move |i| {
            let ls = LabeledTree::enumerate(&ts[i], Direction::Increasing);
            (0..ls.len()).prop_map(move |j| ls[j].clone())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn dts_and_hermite_history_are_inverse(l in label_strategy()) {
        let t = dts(&l).unwrap();
        prop_assert!(t.validate().is_ok());
        prop_assert_eq!(hermite_label(&t).unwrap(), l.bar());
        prop_assert_eq!(tiling_of_decreasing(&l.bar()).unwrap().normalized(), t.normalized());
    }

    #[test]
    fn lehmer_round_trip(l in label_strategy()) {
        let w = l.pre_order_word();
        prop_assert_eq!(decode_lehmer(&encode_lehmer(&w)).unwrap(), w);
        let t = dts(&l).unwrap();
        prop_assert_eq!(hermite_history(&t).len(), l.size());
    }

    #[test]
    fn bar_is_an_involution(l in label_strategy()) {
        prop_assert_eq!(l.bar().bar(), l.clone());
        prop_assert_ne!(l.bar().direction(), l.direction());
    }

    #[test]
    fn covers_raise_the_rank(l in label_strategy()) {
        let d = l.bar();
        let base = gf_z(&d).unwrap();
        for up in d.upper_covers() {
            prop_assert!(d.is_covered_by(&up).unwrap());
            prop_assert_eq!(gf_z(&up).unwrap().at_one() < base.at_one(), true);
        }
    }
}
