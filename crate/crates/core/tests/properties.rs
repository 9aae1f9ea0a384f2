use krawtchouk::combinatorics::binomial;
use krawtchouk::identities::{sum_squares_general, sum_squares_symmetric};
use krawtchouk::krawtchouk::{verify_binomial_conjugation, verify_pascal, verify_recurrence_j};
use krawtchouk::zeon::{lower, op_t, op_tstar, op_u, raise};
use krawtchouk::{format_rational, parse_rational, Int, KrawtchoukMatrix, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pascal_and_recurrence_hold_for_any_r(order in 0usize..=12, r in rational()) {
        prop_assert!(verify_pascal(order, &r).passed());
        if order > 0 {
            prop_assert!(verify_recurrence_j(order, &r).unwrap().passed());
        }
    }

    /// Column j is a polynomial in r of degree at most j, so its (j+1)-th
    /// finite difference vanishes.
    #[test]
    fn columns_are_polynomial_in_r(order in 0usize..=10, j in 0usize..=10, r0 in rational(), step in rational()) {
        prop_assume!(j <= order && !step.is_zero());
        let k = j + 1;
        let samples: Vec<KrawtchoukMatrix> = (0..=k)
            .map(|i| KrawtchoukMatrix::build(order, &(&r0 + &step * Rational::from_integer(i.into()))))
            .collect();
        for n in 0..=order {
            let mut diff = Rational::zero();
            for (i, m) in samples.iter().enumerate() {
                let c = Rational::from_integer(binomial(k as u64, i as i64));
                let term = c * m.get(n, j);
                if i % 2 == 0 { diff += term } else { diff -= term }
            }
            prop_assert!(diff.is_zero(), "n={} j={}", n, j);
        }
    }

    #[test]
    fn column_sums_are_generating_function_at_one(order in 0usize..=12, r in rational()) {
        let m = KrawtchoukMatrix::build(order, &r);
        for j in 0..=order {
            let sum: Rational = (0..=order).map(|n| m.get(n, j).clone()).sum();
            let two = Rational::from_integer(2.into());
            let expected = num_traits::pow(two, order - j) * num_traits::pow(Rational::one() - &r, j);
            prop_assert_eq!(sum, expected);
        }
    }

    #[test]
    fn general_sum_of_squares(order in 1usize..=10, j in 0usize..=10, m in 0usize..=10, r in rational()) {
        prop_assume!(j <= order && m <= order && !(Rational::one() + &r).is_zero());
        let (lhs, rhs) = sum_squares_general(order, &r, j, m).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn symmetric_agrees_with_general_at_one(order in 1usize..=12, j in 0usize..=12, m in 0usize..=12) {
        prop_assume!(j <= order && m <= order);
        let sym = sum_squares_symmetric(order, j, m).unwrap();
        let gen = sum_squares_general(order, &Rational::one(), j, m).unwrap();
        prop_assert_eq!(&sym.0, &sym.1);
        prop_assert_eq!(sym, gen);
    }

    #[test]
    fn binomial_conjugation(order in 0usize..=12) {
        prop_assert!(verify_binomial_conjugation(order).passed());
    }

    #[test]
    fn rational_text_round_trips(r in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn zeon_commutator_and_layers(n in 1u32..=8, i in 1u32..=8, k in 1u32..=8) {
        prop_assume!(i <= n && k <= n);
        let (t, ts, u) = (op_t(n).unwrap(), op_tstar(n).unwrap(), op_u(n).unwrap());
        prop_assert_eq!(&ts.mul(&t).sub(&t.mul(&ts)), &u);
        let (ri, lk) = (raise(n, i).unwrap(), lower(n, k).unwrap());
        let commutator = lk.mul(&ri).sub(&ri.mul(&lk));
        if i == k {
            // [delta_i, e_i] is +1 on subsets without i and -1 on subsets with i
            prop_assert!(commutator.is_diagonal());
            for (mask, v) in commutator.diagonal().iter().enumerate() {
                let expected = if mask >> (i - 1) & 1 == 1 { -1 } else { 1 };
                prop_assert_eq!(v, &Int::from(expected));
            }
        } else {
            prop_assert!(commutator.is_zero());
        }
    }
}
