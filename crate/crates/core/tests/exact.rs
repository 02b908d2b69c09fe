use cometcount::exact::{LaurentPoly2, RatFun, QT, ZW};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn poly_strategy() -> impl Strategy<Value = LaurentPoly2> {
    prop::collection::vec(((0i32..3, 0i32..3), -4i64..5), 0..4).prop_map(|terms| {
        LaurentPoly2::from_terms(terms.into_iter().map(|(m, c)| (m, BigRational::from_integer(BigInt::from(c)))))
    })
}

fn ratfun_strategy() -> impl Strategy<Value = RatFun> {
    (poly_strategy(), poly_strategy()).prop_map(|(n, d)| {
        let d = if d.is_zero() { LaurentPoly2::one() } else { d };
        RatFun::from_parts(&n, &d).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in ratfun_strategy(), b in ratfun_strategy(), c in ratfun_strategy()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, RatFun::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), RatFun::one());
            prop_assert_eq!(&(&b / &a) * &a, b.clone());
        }
    }

    #[test]
    fn normalize_is_idempotent(a in ratfun_strategy()) {
        let again = RatFun::normalize(&a.numerator(), &a.denominator()).unwrap();
        prop_assert_eq!(&again, &a);
        let text = a.to_text(ZW);
        prop_assert_eq!(RatFun::parse(&text, ZW).unwrap(), a);
    }

    #[test]
    fn polynomial_reconstruction(n in poly_strategy(), d in poly_strategy()) {
        prop_assume!(!d.is_zero());
        let f = RatFun::from_parts(&(&n * &d), &d).unwrap();
        let p = f.as_polynomial().unwrap();
        prop_assert_eq!(&p, &n);
        prop_assert_eq!(RatFun::from_poly(&p), f);
    }

    #[test]
    fn swap_and_sign_are_involutions(a in ratfun_strategy()) {
        prop_assert_eq!(a.swap().swap(), a.clone());
        prop_assert_eq!(a.negate_vars().negate_vars(), a);
    }
}

#[test]
fn cancellation_examples() {
    let f = |s: &str| RatFun::parse(s, ZW).unwrap();
    assert_eq!(f("(z^2 - 1)/(z - 1)"), f("z + 1"));
    assert!(f("(0)/(w^3)").is_zero());
    assert_eq!(f("(z^4 - w^4)/(z^2 + w^2)").as_polynomial().unwrap(), LaurentPoly2::parse("z^2 - w^2", ZW).unwrap());
    assert!(f("(1)/(z - 1)").as_polynomial().is_err());
}

#[test]
fn half_power_examples() {
    let f = RatFun::parse("z^2 - 2*z*w + w^2", ZW).unwrap();
    let e = f.substitute_halfpowers([(1, -1), (1, 1)]).unwrap();
    assert_eq!(e, LaurentPoly2::parse("q - 2 + q^-1", QT).unwrap());
    let zw = RatFun::parse("z*w", ZW).unwrap();
    assert_eq!(zw.substitute_halfpowers([(1, -1), (1, 1)]).unwrap(), LaurentPoly2::one());
    // odd total degree has no expression in q
    assert!(RatFun::var(0).substitute_halfpowers([(1, 1), (1, -1)]).is_err());
}
