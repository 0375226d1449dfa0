use num_bigint::BigInt;
use proptest::prelude::*;
use visipoly::Polynomial;

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(-50i64..50, 0..6).prop_map(Polynomial::from_coeffs)
}

proptest! {
    #[test]
    fn mul_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn mul_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn mul_degree_adds(a in arb_poly(), b in arb_poly()) {
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            prop_assert_eq!((&a * &b).degree(), Some(da + db));
        }
    }

    #[test]
    fn add_then_sub_is_identity(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn shift_is_multiplication_by_monomial(a in arb_poly(), k in 0usize..5) {
        prop_assert_eq!(a.shift(k), &a * &Polynomial::monomial(1, k));
    }
}

#[test]
fn binomial_rows_sum_to_powers_of_two() {
    for k in 0..=80usize {
        let p = Polynomial::binomial_power(k);
        let sum: BigInt = p.coeffs().iter().sum();
        assert_eq!(sum, BigInt::from(1) << k);
        assert_eq!(p.degree(), Some(k));
        assert!(p.is_monic() && p.is_nonnegative());
    }
}

#[test]
fn binomial_power_matches_repeated_multiplication() {
    let base = Polynomial::from_coeffs([1, 1]);
    let mut acc = Polynomial::one();
    for k in 0..=20usize {
        assert_eq!(Polynomial::binomial_power(k), acc);
        acc = &acc * &base;
    }
}
