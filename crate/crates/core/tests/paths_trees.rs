use proptest::prelude::*;

use dyck_tilings::path::catalan;
use dyck_tilings::tree::{path_to_tree, tree_to_path};
use dyck_tilings::{DyckPath, PlaneTree};

/// Random Dyck path from a bit stream, forced back to height zero at the end.
fn dyck() -> impl Strategy<Value = DyckPath> {
    (0usize..8, prop::collection::vec(any::<bool>(), 16)).prop_map(|(n, bits)| {
        let (mut s, mut ups, mut downs) = (String::new(), 0, 0);
        for b in bits {
            if ups < n && (b || downs == ups) {
                s.push('U');
                ups += 1;
            } else if downs < ups {
                s.push('D');
                downs += 1;
            }
        }
        s.extend(std::iter::repeat_n('U', n - ups));
        s.extend(std::iter::repeat_n('D', n - downs));
        DyckPath::parse(&s).unwrap()
    })
}

#[test]
fn catalan_counts() {
    let counts: Vec<usize> = (0..=8).map(|n| DyckPath::enumerate(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 5, 14, 42, 132, 429, 1430]);
    for n in 0..=8 {
        assert_eq!(catalan(n), counts[n] as u128);
        assert_eq!(PlaneTree::enumerate(n).len(), counts[n]);
    }
}

#[test]
fn empty_path() {
    let e = DyckPath::enumerate(0);
    assert_eq!(e, vec![DyckPath::empty()]);
    assert!(e[0].is_empty());
    assert_eq!(PlaneTree::from_path(&e[0]).size(), 0);
}

#[test]
fn rejects_bad_words() {
    assert!(DyckPath::parse("DU").is_err());
    assert!(DyckPath::parse("UUD").is_err());
    assert!(DyckPath::parse("UXD").is_err());
}

#[test]
fn chords_of_a_small_path() {
    let p = DyckPath::parse("UUDDUD").unwrap();
    let lens: Vec<usize> = p.chord_pairs().iter().map(|c| c.len()).collect();
    assert_eq!(lens, [2, 1, 1]);
    let t = PlaneTree::from_path(&p);
    assert_eq!(t.root_edges(), &[0, 2]);
    assert_eq!(t.children(0), &[1]);
    assert!(t.strictly_right(2, 1));
    assert!(!t.strictly_right(1, 0));
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn tree_round_trip(p in dyck()) {
        let t = path_to_tree(&p);
        prop_assert_eq!(t.size(), p.size());
        prop_assert_eq!(tree_to_path(&t), p);
    }

    #[test]
    fn mirror_is_an_involution(p in dyck()) {
        prop_assert_eq!(p.mirror().mirror(), p.clone());
        prop_assert_eq!(p.mirror().size(), p.size());
    }

    #[test]
    fn prime_factors_concatenate(p in dyck()) {
        let parts = p.prime_decompose();
        prop_assert!(parts.iter().all(|f| f.is_prime()));
        prop_assert_eq!(DyckPath::concat(&parts), p);
    }

    #[test]
    fn between_zigzag_and_top(p in dyck()) {
        let n = p.size();
        prop_assert!(DyckPath::zigzag(n).is_below(&p));
        prop_assert!(p.is_below(&DyckPath::top(n)));
        let inside = p.paths_between(&DyckPath::top(n));
        prop_assert!(inside.iter().all(|q| p.is_below(q)));
        prop_assert!(inside.contains(&p));
        prop_assert_eq!(DyckPath::zigzag(n).area_to(&DyckPath::top(n)), n * n.saturating_sub(1) / 2);
    }

    #[test]
    fn subtree_sizes_match_chords(p in dyck()) {
        let t = PlaneTree::from_path(&p);
        for e in 0..t.size() {
            prop_assert_eq!(t.subtree(e).count(), t.chord(e).len());
            for c in t.children(e) {
                prop_assert_eq!(t.parent(*c), Some(e));
            }
        }
    }
}
