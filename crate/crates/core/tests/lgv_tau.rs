use proptest::prelude::*;

use dyck_tilings::label::{post_order_seed, pre_order_seed};
use dyck_tilings::lgv::{bareiss_det, check_condition_star2, det_y_label, gf_w, gf_y, lgv_determinant, PointConfig, YDir, YoungDiagram};
use dyck_tilings::qpoly::q_binomial;
use dyck_tilings::tau::{join, label_of_tau, meet, rank, tau_of_label, tau_poset, verify_lattice, Tau};
use dyck_tilings::{Direction, LabeledTree, PlaneTree, QPoly};

fn diagram() -> impl Strategy<Value = YoungDiagram> {
    prop::collection::vec(0usize..5, 0..5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        YoungDiagram::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn determinant_counts_subdiagrams(mu in diagram()) {
        let det = lgv_determinant(&PointConfig::for_diagram(mu.parts())).unwrap();
        prop_assert_eq!(det, gf_y(&mu, YDir::Up));
    }

    #[test]
    fn up_and_down_are_reflections(mu in diagram()) {
        prop_assert_eq!(gf_y(&mu, YDir::Down), gf_y(&mu, YDir::Up).reflect(mu.size()));
    }

    #[test]
    fn rectangles_are_binomials(p in 0usize..6, r in 0usize..6) {
        prop_assert_eq!(gf_y(&YoungDiagram::rectangle(r, p), YDir::Up), q_binomial(p, r));
    }
}

#[test]
fn small_diagram() {
    let mu = YoungDiagram::new(vec![2, 1]).unwrap();
    assert_eq!(gf_y(&mu, YDir::Down), QPoly::from_i64s(&[1, 2, 1, 1]));
    assert_eq!(bareiss_det(Vec::new()).unwrap(), QPoly::one());
}

#[test]
fn w_is_nonnegative_for_small_trees() {
    for n in 0..=4 {
        for t in PlaneTree::enumerate(n) {
            for l in LabeledTree::enumerate(&t, Direction::Decreasing) {
                if det_y_label(&l).is_err() {
                    continue;
                }
                let w = gf_w(&l).unwrap();
                assert!(w.is_nonnegative(), "{l} on {t}: {w}");
            }
        }
    }
}

#[test]
fn sibling_condition_examples() {
    let t = PlaneTree::parse("UUDDUUDUDD").unwrap();
    let good = LabeledTree::from_pre_order(t.clone(), &[4, 1, 5, 2, 3], Direction::Decreasing).unwrap();
    let bad = LabeledTree::from_pre_order(t, &[2, 1, 5, 4, 3], Direction::Decreasing).unwrap();
    assert!(check_condition_star2(&good));
    assert!(!check_condition_star2(&bad));
    let chain = pre_order_seed(&PlaneTree::parse("UUUDDD").unwrap());
    assert!(check_condition_star2(&chain));
}

#[test]
fn tau_round_trip() {
    for n in 0..=5 {
        for t in PlaneTree::enumerate(n) {
            for l in LabeledTree::enumerate(&t, Direction::Decreasing) {
                let tau = tau_of_label(&l).unwrap();
                assert_eq!(label_of_tau(&t, &tau).unwrap(), l);
            }
        }
    }
}

#[test]
fn tau_posets_are_graded_lattices() {
    for n in 0..=3 {
        for t in PlaneTree::enumerate(n) {
            for l in LabeledTree::enumerate(&t, Direction::Decreasing) {
                let seed = tau_of_label(&l).unwrap();
                let r = verify_lattice(&t, &seed).unwrap();
                assert!(r.ok(), "{t}: {:?}", r.violations);
                let p = tau_poset(&seed).unwrap();
                let ranks = p.ranks().unwrap();
                for (i, x) in p.elements.iter().enumerate() {
                    assert_eq!(rank(&seed, x).unwrap(), ranks[i]);
                    label_of_tau(&t, x).unwrap();
                }
            }
        }
    }
}

#[test]
fn post_order_seed_reaches_every_label() {
    for n in 0..=5 {
        for t in PlaneTree::enumerate(n) {
            let p = tau_poset(&tau_of_label(&post_order_seed(&t)).unwrap()).unwrap();
            assert_eq!(p.len(), LabeledTree::enumerate(&t, Direction::Decreasing).len(), "{t}");
        }
    }
}

#[test]
fn join_and_meet_are_symmetric() {
    let seed = Tau::parse("000").unwrap();
    let p = tau_poset(&seed).unwrap();
    for a in &p.elements {
        for b in &p.elements {
            assert_eq!(join(a, b).unwrap(), join(b, a).unwrap());
            assert_eq!(meet(a, b).unwrap(), meet(b, a).unwrap());
            assert_eq!(join(a, a).unwrap(), a.clone());
        }
    }
    assert_eq!(join(&Tau::parse("022").unwrap(), &Tau::parse("004").unwrap()).unwrap(), Tau::parse("020").unwrap());
}
