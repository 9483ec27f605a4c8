//! Counts computed once by exhaustive enumeration and frozen here.

use dyck_tilings::golden;
use dyck_tilings::label::{build_poset, pre_order_seed};
use dyck_tilings::path::Step;
use dyck_tilings::rational::expand_du;
use dyck_tilings::tau::{tau_of_label, tau_poset};
use dyck_tilings::tiling::enumerate_tilings_below;
use dyck_tilings::{Direction, DyckPath, LabeledTree, PlaneTree};

fn tilings_of_size(a: usize, b: usize, n: usize) -> usize {
    let mut hi = vec![Step::U; a * n];
    hi.extend(vec![Step::D; b * n]);
    DyckPath::enumerate(n).iter().map(|l| enumerate_tilings_below(a, b, &expand_du(l, a, b), &hi).len()).sum()
}

#[test]
fn rational_tiling_totals() {
    let frozen = [
        ((1, 1), [1, 1, 3, 15]),
        ((1, 2), [1, 1, 4, 30]),
        ((2, 1), [1, 1, 4, 30]),
        ((1, 3), [1, 1, 5, 50]),
        ((2, 2), [1, 1, 7, 108]),
        ((2, 3), [1, 1, 11, 289]),
    ];
    for ((a, b), counts) in frozen {
        let got: Vec<usize> = (0..=3).map(|n| tilings_of_size(a, b, n)).collect();
        assert_eq!(got, counts, "({a},{b})");
    }
}

#[test]
fn label_poset_totals() {
    let frozen = [(1, 0), (1, 0), (3, 1), (15, 13), (105, 164)];
    for (n, want) in frozen.iter().enumerate() {
        let got = PlaneTree::enumerate(n).iter().fold((0, 0), |acc, t| {
            let p = build_poset(&pre_order_seed(t)).unwrap();
            (acc.0 + p.len(), acc.1 + p.covers.len())
        });
        assert_eq!(got, *want, "n={n}");
    }
}

#[test]
fn tau_poset_totals() {
    let frozen = [(1, 0), (1, 0), (4, 1), (34, 22), (495, 566)];
    for (n, want) in frozen.iter().enumerate() {
        let mut got = (0, 0);
        for t in PlaneTree::enumerate(n) {
            for l in LabeledTree::enumerate(&t, Direction::Decreasing) {
                let p = tau_poset(&tau_of_label(&l).unwrap()).unwrap();
                got.0 += p.len();
                got.1 += p.covers.len();
            }
        }
        assert_eq!(got, *want, "n={n}");
    }
}

#[test]
fn reference_checks_pass() {
    let out = golden::run_all();
    assert!(out.len() >= 40);
    let failed: Vec<_> = out.iter().filter(|o| !o.passed).map(|o| format!("{}: {:?}", o.name, o.detail)).collect();
    assert!(failed.is_empty(), "{failed:#?}");
}
