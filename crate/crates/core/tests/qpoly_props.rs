use num_bigint::BigInt;
use proptest::prelude::*;

use dyck_tilings::qpoly::{q_binomial, q_factorial, q_int};
use dyck_tilings::QPoly;

fn poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-20i64..20, 0..6).prop_map(|c| QPoly::from_i64s(&c))
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, QPoly::zero());
    }

    #[test]
    fn display_parses_back(a in poly()) {
        prop_assert_eq!(a.to_string().parse::<QPoly>().unwrap(), a.clone());
        prop_assert_eq!(a.compact().parse::<QPoly>().unwrap(), a);
    }

    #[test]
    fn exact_division_undoes_product(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn eval_is_a_homomorphism(a in poly(), b in poly(), x in -3i64..4) {
        let x = BigInt::from(x);
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
    }

    #[test]
    fn binomial_symmetry_and_pascal(p in 0usize..8, r in 0usize..8) {
        prop_assert_eq!(q_binomial(p, r), q_binomial(r, p));
        prop_assert!(q_binomial(p, r).is_palindromic());
        if p > 0 && r > 0 {
            // [p+r, r] = [p+r-1, r-1] + q^r [p+r-1, r]
            let lhs = q_binomial(p, r);
            let rhs = &q_binomial(p, r - 1) + &q_binomial(p - 1, r).shift(r);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn binomial_from_factorials(p in 0usize..7, r in 0usize..7) {
        let f = (&q_factorial(p) * &q_factorial(r)) * q_binomial(p, r);
        prop_assert_eq!(f, q_factorial(p + r));
    }
}

#[test]
fn small_values() {
    assert_eq!(q_int(3).unwrap(), QPoly::from_i64s(&[1, 1, 1]));
    assert_eq!(q_factorial(3), QPoly::from_i64s(&[1, 2, 2, 1]));
    assert_eq!(q_factorial(3).compact(), "1 + 2q + 2q^2 + q^3");
    assert_eq!(q_binomial(2, 2), QPoly::from_i64s(&[1, 1, 2, 1, 1]));
    assert_eq!(q_factorial(5).at_one(), BigInt::from(120));
}
