use cometcount::combinat::{partitions_of, Partition};
use cometcount::exact::{LaurentPoly2, RatFun};
use cometcount::polybases::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn coeff(row: &[(Partition, LaurentPoly2)], nu: &Partition) -> LaurentPoly2 {
    row.iter().find(|(m, _)| m == nu).map(|(_, c)| c.clone()).unwrap_or_else(LaurentPoly2::zero)
}

/// (q,t) ↦ (0,q).
fn to_pure(c: &LaurentPoly2) -> LaurentPoly2 {
    LaurentPoly2::from_terms(c.terms().filter(|((a, _), _)| *a == 0).map(|((_, b), v)| ((*b, 0), v.clone())))
}

#[test]
fn hall_littlewood_is_the_pure_specialization() {
    for n in 1..=5 {
        for lambda in partitions_of(n) {
            let h = macdonald_schur(&lambda);
            let k = hall_littlewood_schur(&lambda);
            for nu in partitions_of(n) {
                assert_eq!(to_pure(&coeff(&h, &nu)), coeff(&k, &nu), "lambda={lambda} nu={nu}");
            }
        }
    }
    assert_eq!(hall_littlewood_schur(&p("2")), vec![(p("2"), LaurentPoly2::one())]);
    assert_eq!(
        hall_littlewood_schur(&p("1,1")),
        vec![(p("2"), LaurentPoly2::one()), (p("1,1"), LaurentPoly2::unit_monomial(1, 0))]
    );
}

#[test]
fn two_hall_littlewood_constructions_agree() {
    for n in 1..=5 {
        for lambda in partitions_of(n) {
            assert_eq!(hall_littlewood_via_p(&lambda, n).unwrap(), hall_littlewood(&lambda, n).unwrap(), "{lambda}");
        }
    }
}

#[test]
fn kostka_foulkes_positivity_and_values_at_one() {
    let one = BigRational::from_integer(BigInt::from(1));
    for n in 1..=6 {
        for lambda in partitions_of(n) {
            for nu in partitions_of(n) {
                let k = kostka_foulkes(&nu, &lambda).unwrap();
                assert!(k.is_integral() && k.terms().all(|(_, c)| !c.is_negative()), "K~_{nu},{lambda}");
                // K(1) is the Kostka number
                let count = ssyt(&nu, lambda.parts()).len() as i64;
                assert_eq!(k.eval(&one, &one).unwrap(), BigRational::from_integer(BigInt::from(count)));
                if !nu.dominates(&lambda) {
                    assert!(k.is_zero());
                }
            }
        }
    }
}

#[test]
fn macdonald_extreme_coefficients() {
    for n in 1..=5 {
        for lambda in partitions_of(n) {
            let h = macdonald_schur(&lambda);
            assert_eq!(coeff(&h, &Partition::row(n)), LaurentPoly2::one());
            let e = LaurentPoly2::unit_monomial(lambda.conjugate().nstat() as i32, lambda.nstat() as i32);
            assert_eq!(coeff(&h, &Partition::column(n)), e, "{lambda}");
            for (_, c) in &h {
                assert!(c.is_integral() && c.terms().all(|(_, v)| !v.is_negative()));
            }
        }
    }
}

#[test]
fn green_polynomials_at_the_identity_class() {
    // Q^τ_{(1^n)}(q) = Σ_λ f^λ K̃_{λτ}(q) is the Schur-to-h_1^n weight of H̃_τ
    for n in 1..=4 {
        for tau in partitions_of(n) {
            let q = green(&Partition::column(n), &tau).unwrap();
            let f = hall_littlewood(&tau, n).unwrap();
            let h1n = cometcount::symfun::SymFun::power_sum(&[Partition::column(n)], n).unwrap();
            let pair = f.hall_pair(&h1n).unwrap();
            assert_eq!(RatFun::from_poly(&q), pair, "{tau}");
        }
    }
}

#[test]
fn hook_specializations() {
    for n in 1..=4 {
        for lambda in partitions_of(n) {
            for g in 0..3 {
                let h = hook_genus(&lambda, g);
                let s = hook_specials(&lambda, g);
                assert_eq!(pure_from_hook(&h), s.pure);
                assert_eq!(epoly_from_hook(&h), s.epoly);
            }
        }
    }
    assert_eq!(hook_genus(&Partition::empty(), 2), RatFun::one());
}

#[test]
fn cache_files_round_trip() {
    let dir = std::env::temp_dir().join(format!("cometcount-test-{}", std::process::id()));
    let t = build_table(4);
    store_table(&dir, &t).unwrap();
    assert_eq!(load_table(&dir, 4).unwrap(), t);
    std::fs::write(dir.join("macdonald-n4.txt"), "garbage").unwrap();
    assert!(load_table(&dir, 4).is_err());
    assert!(load_table(&dir, 5).is_err());
    std::fs::remove_dir_all(&dir).unwrap();
}
