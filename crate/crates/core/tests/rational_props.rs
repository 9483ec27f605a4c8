use proptest::prelude::*;

use dyck_tilings::path::Step;
use dyck_tilings::rational::*;
use dyck_tilings::tiling::enumerate_tilings_below;
use dyck_tilings::DyckPath;

fn mu_strategy() -> impl Strategy<Value = (Vec<usize>, usize)> {
    (1usize..=4, 1usize..=3).prop_flat_map(|(n, k)| {
        let parts: Vec<_> = (1..=n).map(|i| 0..=(n - i) * k).collect();
        (parts, Just(k))
    })
}

/// Brute force over all words with the right number of steps.
fn count_rational(n: usize, a: usize, b: usize) -> usize {
    let len = (a + b) * n;
    (0u32..1 << len)
        .filter(|m| m.count_ones() as usize == a * n)
        .filter(|m| {
            let (mut u, mut d) = (0, 0);
            (0..len).all(|i| {
                if m >> i & 1 == 1 {
                    u += 1;
                } else {
                    d += 1;
                }
                b * u >= a * d
            })
        })
        .count()
}

fn double_factorial(n: usize) -> usize {
    (1..=n).map(|i| 2 * i - 1).product()
}

fn top(a: usize, b: usize, n: usize) -> Vec<Step> {
    let mut hi = vec![Step::U; a * n];
    hi.extend(vec![Step::D; b * n]);
    hi
}

#[test]
fn rational_path_counts() {
    for (n, a, b) in [(0, 1, 2), (1, 1, 2), (2, 1, 2), (3, 1, 2), (2, 1, 3), (3, 1, 3), (1, 2, 3), (2, 2, 3), (2, 2, 2), (3, 2, 1)] {
        assert_eq!(enumerate_rational(n, a, b).unwrap().len(), count_rational(n, a, b), "({a},{b}) n={n}");
    }
    assert_eq!(enumerate_rational(3, 1, 2).unwrap().len(), 12);
    let inflated = enumerate_rational(3, 1, 2).unwrap().iter().filter(|p| p.is_inflated()).count();
    assert_eq!(inflated, inflated_paths(3, 1, 2).len());
    assert_eq!(inflated, 5);
}

#[test]
fn stirling_permutations_count() {
    for n in 1..=4 {
        let all = all_mu(n, 2);
        assert_eq!(all.len(), double_factorial(n));
        let perms: Vec<Vec<usize>> =
            all.iter().map(|m| stirling_from_sets(&sets_from_mu(m, 2).unwrap()).unwrap()).collect();
        assert!(perms.iter().all(|s| is_stirling(s, 2)));
        let mut uniq = perms.clone();
        uniq.sort();
        uniq.dedup();
        assert_eq!(uniq.len(), perms.len());
    }
}

#[test]
fn tilings_above_the_zigzag_match_mu() {
    for k in 1..=3 {
        for n in 0..=3 {
            let lambda = DyckPath::zigzag(n);
            let mut mus: Vec<Vec<usize>> = enumerate_tilings_below(1, k, &expand_d(&lambda, k), &top(1, k, n))
                .iter()
                .map(|t| mu_of_1k_tiling(t).unwrap())
                .collect();
            mus.sort();
            let mut all = all_mu(n, k);
            all.sort();
            assert_eq!(mus, all, "k={k} n={n}");
        }
    }
}

#[test]
fn duality_on_small_tilings() {
    for (n, k) in [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3)] {
        for lambda in DyckPath::enumerate(n) {
            for t in enumerate_tilings_below(1, k, &expand_d(&lambda, k), &top(1, k, n)) {
                check_duality(&t).unwrap();
                let l = label_of_1k_tiling(&t).unwrap();
                assert_eq!(phi(&phi(&l).unwrap()).unwrap(), l);
            }
        }
    }
}

#[test]
fn decomposition_recovers_the_top() {
    for (a, b) in [(1, 2), (2, 2), (2, 3), (3, 2)] {
        for n in 0..=2 {
            for lambda in DyckPath::enumerate(n) {
                for t in enumerate_tilings_below(a, b, &expand_du(&lambda, a, b), &top(a, b, n)) {
                    if !t.is_trivial() {
                        continue;
                    }
                    let g = decompose_trivial_ab(&t).unwrap();
                    check_grid_admissible(&g).unwrap();
                    assert_eq!(reassemble_top(&g, a, b).unwrap(), t.top().unwrap());
                    assert_eq!(g.total_weight(), t.weight());
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn mu_sets_round_trip((mu, k) in mu_strategy()) {
        let s = sets_from_mu(&mu, k).unwrap();
        prop_assert_eq!(mu_from_sets(&s, k).unwrap(), mu.clone());
        let st = stirling_from_sets(&s).unwrap();
        prop_assert!(is_stirling(&st, k));
        prop_assert_eq!(sets_from_stirling(&st, k).unwrap(), s);
        prop_assert_eq!(mu_from_stirling(&st, k).unwrap(), mu);
    }

    #[test]
    fn xi_sets_round_trip((xi, k) in mu_strategy()) {
        let s = sets_from_xi(&xi, k).unwrap();
        prop_assert_eq!(xi_from_sets(&s, k).unwrap(), xi);
    }

    #[test]
    fn decomposition_is_sandwiched((mu, k) in mu_strategy()) {
        let alphas = decompose_mu(&mu, k);
        prop_assert_eq!(alphas.len(), k);
        for i in 0..mu.len() {
            prop_assert_eq!(alphas.iter().map(|a| a[i]).sum::<usize>(), mu[i]);
        }
        for w in alphas.windows(2) {
            prop_assert!(sandwiched(&w[0], &w[1]));
        }
    }

    #[test]
    fn column_split_is_interleaved(v in prop::collection::vec(0i64..9, 0..6), a in 1usize..4) {
        let parts = split_columns(&v, a);
        prop_assert_eq!(parts.len(), a);
        prop_assert!(is_interleaved(&parts));
        for i in 0..v.len() {
            prop_assert_eq!(parts.iter().map(|p| p[i]).sum::<i64>(), v[i]);
        }
    }
}
