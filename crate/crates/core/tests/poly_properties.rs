use critval_core::exact_poly::rational::{integer, rational};
use critval_core::exact_poly::{
    rf_equal, Assignment, ExactRational, Monomial, Polynomial, RationalFunction, VariableId,
};
use proptest::prelude::*;

fn x(i: usize) -> VariableId {
    VariableId::x(i)
}

fn vars() -> [VariableId; 3] {
    [x(1), x(2), VariableId::y(1)]
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0u32..4, 0u32..3, 0u32..3), -6i64..=6, 1i64..=3), 0..7).prop_map(
        |terms| {
            let [u, v, w] = vars();
            Polynomial::from_terms(terms.into_iter().map(|((i, j, k), n, d)| {
                (Monomial::from_powers([(u, i), (v, j), (w, k)]), rational(n, d))
            }))
        },
    )
}

fn small_rational() -> impl Strategy<Value = ExactRational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rational(n, d))
}

fn point() -> impl Strategy<Value = Assignment> {
    prop::collection::vec(small_rational(), 6).prop_map(|vals| {
        let ids = [x(1), x(2), VariableId::y(1), VariableId::z(1), VariableId::z(2), VariableId::z(3)];
        ids.into_iter().zip(vals).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn addition_and_multiplication_commute(p in poly(), q in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn associativity(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn distributivity(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn identities_and_inverse(p in poly()) {
        prop_assert_eq!(&p + &Polynomial::zero(), p.clone());
        prop_assert_eq!(&p * &Polynomial::one(), p.clone());
        prop_assert!((&p - &p).is_zero());
        prop_assert!((&p * &Polynomial::zero()).is_zero());
    }

    #[test]
    fn canonical_form_is_order_independent(p in poly(), seed in any::<u64>()) {
        let mut terms = p.terms().to_vec();
        let k = terms.len().max(1);
        terms.rotate_left((seed as usize) % k);
        terms.reverse();
        prop_assert_eq!(Polynomial::from_terms(terms), p.clone());
        let reparsed: Polynomial = p.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, p);
    }

    #[test]
    fn derivative_inverts_antiderivative(p in poly()) {
        for v in vars() {
            prop_assert_eq!(p.antiderivative(v).derivative(v), p.clone());
        }
    }

    #[test]
    fn product_rule(p in poly(), q in poly()) {
        let v = x(1);
        let lhs = (&p * &q).derivative(v);
        let rhs = &(&p.derivative(v) * &q) + &(&p * &q.derivative(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_is_a_ring_map(p in poly(), q in poly(), at in point()) {
        let (ep, eq) = (p.evaluate(&at).unwrap(), q.evaluate(&at).unwrap());
        prop_assert_eq!((&p * &q).evaluate(&at).unwrap(), &ep * &eq);
        prop_assert_eq!((&p + &q).evaluate(&at).unwrap(), &ep + &eq);
        prop_assert_eq!(p.partial_evaluate(&at).constant_value().unwrap(), ep);
    }

    #[test]
    fn integral_is_additive_over_intervals(p in poly()) {
        let v = x(1);
        let [a, b, c] = [1, 2, 3].map(|k| Polynomial::var(VariableId::z(k)));
        let ab = p.definite_integral(v, &a, &b).unwrap();
        let bc = p.definite_integral(v, &b, &c).unwrap();
        let ac = p.definite_integral(v, &a, &c).unwrap();
        prop_assert_eq!(&ab + &bc, ac);
        prop_assert!(p.definite_integral(v, &a, &a).unwrap().is_zero());
        prop_assert_eq!(p.definite_integral(v, &b, &a).unwrap(), -&ab);
    }

    #[test]
    fn integral_then_evaluate_matches_evaluate_then_integrate(p in poly(), at in point()) {
        // integrate x1 from z1 to z2, then evaluate; and the same with the
        // other variables fixed first
        let v = x(1);
        let lo = Polynomial::var(VariableId::z(1));
        let hi = Polynomial::var(VariableId::z(2));
        let first = p.definite_integral(v, &lo, &hi).unwrap().evaluate(&at).unwrap();
        let mut rest = at.clone();
        rest.remove(&v);
        let fixed = p.partial_evaluate(&rest);
        let lo_v = lo.evaluate(&at).unwrap();
        let hi_v = hi.evaluate(&at).unwrap();
        let second = fixed
            .definite_integral(v, &Polynomial::constant(lo_v), &Polynomial::constant(hi_v))
            .unwrap()
            .constant_value()
            .unwrap();
        prop_assert_eq!(first, second);
    }

    #[test]
    fn substitution_commutes_with_evaluation(p in poly(), q in poly(), at in point()) {
        let v = x(2);
        let mut shifted = at.clone();
        shifted.insert(v, q.evaluate(&at).unwrap());
        prop_assert_eq!(p.substitute(v, &q).evaluate(&at).unwrap(), p.evaluate(&shifted).unwrap());
    }

    #[test]
    fn rational_function_equality(p in poly(), q in poly(), c in poly(), at in point()) {
        prop_assume!(!q.is_zero() && !c.is_zero());
        let f = RationalFunction::new(p.clone(), q.clone()).unwrap();
        let g = RationalFunction::new(&p * &c, &q * &c).unwrap();
        prop_assert!(rf_equal(&f, &f));
        prop_assert!(rf_equal(&f, &g) && rf_equal(&g, &f));
        let sum = &f + &g;
        let twice = RationalFunction::new(p.scale(&integer(2)), q.clone()).unwrap();
        prop_assert!(rf_equal(&sum, &twice));
        if let (Ok(fv), Ok(hv)) = (f.evaluate(&at), (&f * &g).evaluate(&at)) {
            prop_assert_eq!(hv, &fv * &fv);
        }
    }
}

#[test]
fn rf_equal_distinguishes() {
    let one = RationalFunction::one();
    let half = RationalFunction::new(Polynomial::one(), Polynomial::integer(2)).unwrap();
    assert!(!rf_equal(&one, &half));
}
