use cometcount::combinat::MultiPartition;
use cometcount::exact::{LaurentPoly2, RatFun, QT, ZW};
use cometcount::kernel::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

fn mp(s: &str) -> MultiPartition {
    s.parse().unwrap()
}

fn qpoly(s: &str) -> LaurentPoly2 {
    LaurentPoly2::parse(s, QT).unwrap()
}

fn shapes(n_max: usize, k_max: usize) -> Vec<MultiPartition> {
    (1..=n_max).flat_map(|n| (1..=k_max).flat_map(move |k| MultiPartition::all(n, k))).collect()
}

fn d(g: u32, mu: &MultiPartition) -> i64 {
    dim_mu(&KernelQuery::full(g, mu.clone()))
}

#[test]
fn rank_one_values() {
    for g in 0..4 {
        for k in 1..4 {
            let mu = MultiPartition::new(vec!["1".parse().unwrap(); k]).unwrap();
            let h = hmu(&KernelQuery::full(g, mu.clone())).unwrap();
            let want = RatFun::parse("z - w", ZW).unwrap().pow(2 * g as i32);
            assert_eq!(h.value, want, "g={g} k={k}");
            assert_eq!(h.d_mu, 2 * g as i64);
            assert_eq!(apoly(g, &mu).unwrap().value, LaurentPoly2::unit_monomial(g as i32, 0));
        }
    }
    assert_eq!(epoly(1, &mp("1")).unwrap(), qpoly("q^2 - 2*q + 1"));
}

#[test]
fn dimension_examples() {
    assert_eq!(d(0, &mp("1,1;1,1;1,1")), 0);
    assert_eq!(d(1, &mp("2")), 2);
    assert_eq!(d(3, &mp("1;1;1")), 6);
}

#[test]
fn ordering_independence() {
    for g in 0..=1 {
        for mu in shapes(3, 3) {
            let mut comps = mu.components().to_vec();
            comps.reverse();
            let rev = MultiPartition::new(comps).unwrap();
            let a = hmu(&KernelQuery::full(g, mu.clone())).unwrap().value;
            let b = hmu(&KernelQuery::full(g, rev)).unwrap().value;
            assert_eq!(a, b, "g={g} mu={mu}");
        }
    }
}

#[test]
fn epoly_routes_and_vanishing() {
    for g in 0..=2 {
        for mu in shapes(3, 3) {
            let e = epoly(g, &mu).unwrap();
            assert_eq!(epoly_via_specialized_kernel(g, &mu).unwrap(), e, "g={g} mu={mu}");
            if g >= 1 {
                assert!(e.eval_int(1).is_zero(), "g={g} mu={mu}");
            }
            assert!(check_curious(&e, d(g, &mu)));
        }
    }
}

#[test]
fn candidate_specializes_to_e_and_a() {
    for g in 0..=2 {
        for mu in shapes(3, 2) {
            let h = mhp_candidate(g, &mu).unwrap();
            assert_eq!(at_t_minus_one(&h), epoly(g, &mu).unwrap(), "g={g} mu={mu}");
            let a = apoly(g, &mu).unwrap().value.shift((d(g, &mu) / 2) as i32, 0);
            assert_eq!(pure_part(&h), a, "g={g} mu={mu}");
        }
    }
}

#[test]
fn genus_zero_examples() {
    assert_eq!(hmu(&KernelQuery::full(0, mp("1;1"))).unwrap().value, RatFun::one());
    assert!(hmu(&KernelQuery::full(0, mp("2;2"))).unwrap().value.is_zero());
    assert_eq!(epoly(0, &mp("1;1")).unwrap(), LaurentPoly2::one());
    assert!(epoly(0, &mp("2;2")).unwrap().is_zero());
    assert_eq!(epoly(0, &mp("1,1;1,1;1,1")).unwrap(), LaurentPoly2::one());
    let a = apoly(0, &mp("1,1;1,1;1,1")).unwrap();
    assert_eq!(a.value, LaurentPoly2::one());
    assert!(a.quiver_interpretation);
    assert!(!apoly(0, &mp("2;2")).unwrap().quiver_interpretation);
    // mismatched sizes contribute nothing
    assert!(hmu(&KernelQuery::full(1, mp("2;1"))).unwrap().value.is_zero());
}

#[test]
fn modes_agree_with_full_kernel() {
    for g in 0..=2 {
        for mu in shapes(3, 3) {
            let full = hmu(&KernelQuery::full(g, mu.clone())).unwrap().value;
            let pure = hmu(&KernelQuery::new(g, mu.clone(), Mode::Pure)).unwrap().value;
            assert_eq!(pure_from_full(&full), pure, "g={g} mu={mu}");
        }
    }
}

/// ℍ(0,√q) read off ℍ(z,w).
fn pure_from_full(h: &RatFun) -> RatFun {
    h.set_zero(0).unwrap().halve_exponents(1).unwrap().swap()
}

#[test]
fn euler_examples() {
    let r = |n: i64| BigRational::from_integer(BigInt::from(n));
    assert_eq!(euler_tilde(2, &mp("2")).unwrap(), r(-2));
    assert_eq!(euler_tilde(2, &mp("1,1")).unwrap(), r(0));
    assert_eq!(euler_tilde(1, &mp("1,1")).unwrap(), r(3));
    assert_eq!(euler_tilde(0, &mp("1")), Err(KernelError::UnsupportedGenusZero));
    for g in 1..=2 {
        for mu in shapes(3, 2) {
            let e = epoly(g, &mu).unwrap();
            assert_eq!(euler_limit(&e, g), Some(euler_tilde(g, &mu).unwrap()), "g={g} mu={mu}");
        }
    }
}

#[test]
fn nonemptiness() {
    assert!(check_nonempty(0, &mp("1,1;1,1;1,1")).unwrap());
    assert!(check_nonempty(3, &mp("1;1")).unwrap());
    assert!(!check_nonempty(0, &mp("1,1;1,1")).unwrap());
    assert_eq!(check_nonempty(0, &mp("2;2")), Err(KernelError::DivisibleMu(mp("2;2"))));
}

#[test]
fn induction_lemma() {
    use cometcount::combinat::{divisors, partitions_of, Partition};
    use cometcount::symfun::{Basis, SymFun};
    for n in 1..=6 {
        for dd in divisors(n) {
            let p = SymFun::power_sum(&[Partition::new(vec![dd; n / dd])], n).unwrap();
            for lambda in partitions_of(n) {
                let h = SymFun::basis_element(Basis::H, std::slice::from_ref(&lambda), n).unwrap();
                assert_eq!(p.hall_pair(&h).unwrap(), RatFun::from_bigint(induc_closed_form(dd, &lambda)));
            }
        }
    }
}

#[test]
fn omega_starts_with_one() {
    let s = omega_series(1, 2, 2, Mode::Pure).unwrap();
    assert_eq!(s.term(0).unwrap(), cometcount::symfun::SymFun::one(2, 2));
    assert_eq!(omega_family(0, 1, 3, Mode::Full).unwrap().len(), 6);
}

#[test]
fn hmu_is_polynomial_in_computed_range() {
    let mut cases: Vec<(u32, MultiPartition)> = Vec::new();
    for g in 0..=2 {
        cases.extend(shapes(3, 3).into_iter().map(|m| (g, m)));
    }
    for g in 0..=1 {
        for k in 1..=2 {
            cases.extend(MultiPartition::all_sorted(4, k).into_iter().map(|m| (g, m)));
        }
    }
    for (g, mu) in cases {
        let h = hmu(&KernelQuery::full(g, mu.clone())).unwrap();
        assert!(h.polynomial, "g={g} mu={mu}");
    }
}
