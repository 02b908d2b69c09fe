use std::collections::BTreeMap;

use cometcount::combinat::{partitions_of, Partition};
use cometcount::exact::RatFun;
use cometcount::polybases::ssyt;
use cometcount::symfun::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn el(basis: Basis, s: &str, cap: usize) -> SymFun {
    SymFun::basis_element(basis, &[p(s)], cap).unwrap()
}

fn half() -> RatFun {
    RatFun::from_rational(&BigRational::new(BigInt::from(1), BigInt::from(2)))
}

#[test]
fn small_expansions() {
    assert_eq!(el(Basis::H, "1", 2), el(Basis::P, "1", 2));
    let p11 = el(Basis::P, "1,1", 2);
    let p2 = el(Basis::P, "2", 2);
    assert_eq!(el(Basis::S, "1,1", 2), (&p11 - &p2).scale(&half()));
    assert_eq!(el(Basis::H, "2", 2), (&p11 + &p2).scale(&half()));
}

#[test]
fn basis_round_trips() {
    for n in 1..=6 {
        for lambda in partitions_of(n) {
            let f = el(Basis::P, &lambda.to_string(), n);
            for basis in [Basis::M, Basis::H, Basis::E, Basis::S] {
                let coeffs = f.expand_in(basis);
                assert_eq!(SymFun::from_basis(basis, 1, n, &coeffs).unwrap(), f, "{basis} {lambda}");
                let g = el(basis, &lambda.to_string(), n);
                let back: BTreeMap<_, _> = g.expand_in(basis);
                assert_eq!(back.len(), 1);
            }
        }
    }
}

#[test]
fn schur_orthonormality() {
    for n in 1..=5 {
        let parts = partitions_of(n);
        for a in &parts {
            for b in &parts {
                let v = el(Basis::S, &a.to_string(), n).hall_pair(&el(Basis::S, &b.to_string(), n)).unwrap();
                assert_eq!(v, RatFun::from_int((a == b) as i64), "{a} {b}");
                let v = el(Basis::H, &a.to_string(), n).hall_pair(&el(Basis::M, &b.to_string(), n)).unwrap();
                assert_eq!(v, RatFun::from_int((a == b) as i64), "{a} {b}");
            }
        }
    }
}

#[test]
fn schur_monomial_coefficients_count_tableaux() {
    for n in 1..=5 {
        for lambda in partitions_of(n) {
            let coeffs = el(Basis::S, &lambda.to_string(), n).expand_in(Basis::M);
            for mu in partitions_of(n) {
                let want = ssyt(&lambda, mu.parts()).len() as i64;
                let got = coeffs.get(&vec![mu.clone()]).cloned().unwrap_or_else(RatFun::zero);
                assert_eq!(got, RatFun::from_int(want), "s_{lambda} at m_{mu}");
            }
        }
    }
}

#[test]
fn two_alphabet_cauchy_kernel() {
    // Exp(p_1(x) p_1(y)) = Σ_λ s_λ(x) s_λ(y)
    let cap = 4;
    let mut v = GradedSeries::zero(2, cap);
    v.set(1, SymFun::power_sum(&[p("1"), p("1")], cap).unwrap());
    let e = v.pleth_exp().unwrap();
    for n in 1..=cap {
        let mut rhs = SymFun::zero(2, cap);
        for l in partitions_of(n) {
            rhs = &rhs + &SymFun::basis_element(Basis::S, &[l.clone(), l], cap).unwrap();
        }
        assert_eq!(e.term(n).unwrap(), rhs, "degree {n}");
    }
}

fn family_strategy(cap: usize) -> impl Strategy<Value = Vec<(usize, Partition, i64, i32)>> {
    let lambdas: Vec<Partition> = (1..=cap).flat_map(partitions_of).collect();
    prop::collection::vec((0..lambdas.len(), 0..lambdas.len(), -3i64..4, 0i32..3), 1..8).prop_map(move |v| {
        v.into_iter()
            .filter_map(|(i, j, c, e)| {
                let (a, b) = (&lambdas[i], &lambdas[j]);
                (a.size() == b.size()).then(|| (i, b.clone(), c, e))
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exp_log_round_trip(entries in family_strategy(4)) {
        let cap = 4;
        let lambdas: Vec<Partition> = (1..=cap).flat_map(partitions_of).collect();
        let mut v = GradedSeries::zero(1, cap);
        let mut family: BTreeMap<Partition, SymFun> = BTreeMap::new();
        for (i, nu, c, e) in entries {
            let lambda = &lambdas[i];
            let term = SymFun::basis_element(Basis::S, &[nu], cap).unwrap().scale(&(RatFun::from_int(c) + RatFun::monomial(1, e, 0)));
            let n = lambda.size();
            v.set(n, &v.term(n).unwrap() + &term);
            let old = family.remove(lambda).unwrap_or_else(|| SymFun::zero(1, cap));
            family.insert(lambda.clone(), &old + &term);
        }
        let f = v.pleth_exp().unwrap();
        prop_assert_eq!(f.pleth_log().unwrap(), v.clone());
        // the types route on the family indexed by λ
        let mut series = GradedSeries::one(1, cap);
        for n in 1..=cap {
            let t = family.iter().filter(|(l, _)| l.size() == n).fold(SymFun::zero(1, cap), |acc, (_, a)| &acc + a);
            series.set(n, t);
        }
        prop_assert_eq!(log_via_types(&family, 1, cap), series.pleth_log().unwrap());
    }

    #[test]
    fn adams_is_a_ring_map(i in 0usize..5, j in 0usize..5, d in 1usize..3) {
        let cap = 16;
        let ls = partitions_of(4);
        let a = SymFun::basis_element(Basis::S, &[ls[i].clone()], 4).unwrap().scale(&RatFun::var(0));
        let b = SymFun::basis_element(Basis::H, &[ls[j].clone()], 4).unwrap().scale(&RatFun::var(1));
        let a = SymFun::from_basis(Basis::P, 1, cap, &a.expand_in(Basis::P)).unwrap();
        let b = SymFun::from_basis(Basis::P, 1, cap, &b.expand_in(Basis::P)).unwrap();
        let lhs = (&a * &b).adams(d);
        let rhs = &a.adams(d) * &b.adams(d);
        prop_assert!(!lhs.is_zero());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn trivial_family_has_zero_log() {
    let family = BTreeMap::new();
    assert_eq!(log_via_types(&family, 2, 4), GradedSeries::zero(2, 4));
    assert_eq!(GradedSeries::one(2, 4).pleth_log().unwrap(), GradedSeries::zero(2, 4));
}
