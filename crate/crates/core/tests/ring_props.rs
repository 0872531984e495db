use fockbasis::exactring::{bar_poly, eval_at_one, eval_q_poly, fit_polynomial_in_q};
use fockbasis::LaurentPolynomial as LP;
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LP> {
    prop::collection::vec((-6i64..=6, -5i64..=5), 0..6).prop_map(LP::from_terms)
}

proptest! {
    #[test]
    fn bar_is_an_involution(p in poly()) {
        prop_assert_eq!(bar_poly(&bar_poly(&p)), p);
    }

    #[test]
    fn bar_and_eval_are_multiplicative(p in poly(), q in poly()) {
        let pq = &p * &q;
        prop_assert_eq!(bar_poly(&pq), &bar_poly(&p) * &bar_poly(&q));
        prop_assert_eq!(eval_at_one(&pq), eval_at_one(&p) * eval_at_one(&q));
    }

    #[test]
    fn fit_recovers_polynomial_and_predicts_held_out(coeffs in prop::collection::vec(-20i64..=20, 1..5)) {
        let c: Vec<BigInt> = coeffs.iter().map(|&x| BigInt::from(x)).collect();
        let bound = c.len() - 1;
        let primes = [2u64, 3, 5, 7, 11];
        let samples: Vec<(u64, BigInt)> = primes[..=bound].iter().map(|&p| (p, eval_q_poly(&c, p))).collect();
        let fit = fit_polynomial_in_q(&samples, bound).unwrap();
        prop_assert_eq!(eval_q_poly(&fit, 13), eval_q_poly(&c, 13));
    }

    #[test]
    fn compact_string_round_trips_through_pairs(p in poly()) {
        prop_assert_eq!(LP::from_pairs(&p.to_pairs()).unwrap(), p);
    }
}
