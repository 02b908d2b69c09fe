use cometcount::charsums::*;
use cometcount::combinat::{k0, types_of, MultiPartition, Partition, TypeT};
use cometcount::exact::{LaurentPoly2, QT};
use cometcount::kernel::apoly;
use num_traits::Zero;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn mp(s: &str) -> MultiPartition {
    s.parse().unwrap()
}

#[test]
fn pairing_examples() {
    let one = TypeT::single(p("1"));
    assert_eq!(a_pair(&one, &one).unwrap(), LaurentPoly2::one());
    assert_eq!(a_pair(&TypeT::single(p("2")), &TypeT::single(p("1,1"))).unwrap(), LaurentPoly2::one());
    // ⟨p_2, s_2 + q s_11⟩: mismatched degree profiles do not force a zero
    let mixed = a_pair(&TypeT::new(vec![(2, p("1"))]), &TypeT::single(p("1,1"))).unwrap();
    assert_eq!(mixed, LaurentPoly2::parse("1 - q", QT).unwrap());
    assert!(matches!(a_pair(&one, &TypeT::single(p("2"))), Err(CharSumsError::SizeMismatch(1, 2))));
}

#[test]
fn raw_sum_matches_pairing() {
    for n in 1..=4 {
        let types = types_of(n);
        for a in &types {
            for b in &types {
                assert_eq!(a_pair_raw(a, b).unwrap(), a_pair(a, b).unwrap(), "alpha={a} beta={b}");
            }
        }
    }
}

#[test]
fn type_sums_vanish_off_concentrated_types() {
    for n in 1..=4 {
        let mu: Vec<TypeT> = vec![TypeT::semisimple_character(&Partition::row(n)); 2];
        for w in types_of(n) {
            let s = char_type_sums(&mu, &w).unwrap();
            if k0(&w).is_zero() {
                assert!(s.h.is_zero() && s.hhat.is_zero(), "{w}");
            }
        }
    }
    let s = char_type_sums(&[TypeT::single(p("1"))], &TypeT::single(p("1"))).unwrap();
    assert_eq!(s.h, LaurentPoly2::parse("q - 1", QT).unwrap());
}

#[test]
fn multiplicity_examples() {
    for g in 0..4 {
        assert_eq!(multiplicity(g, &mp("1")).unwrap(), LaurentPoly2::unit_monomial(g as i32, 0));
    }
    assert_eq!(multiplicity(0, &mp("1,1;1,1;1,1")).unwrap(), LaurentPoly2::one());
    assert_eq!(multiplicity(1, &mp("1,1")).unwrap(), apoly(1, &mp("1,1")).unwrap().value);
}

#[test]
fn multiplicity_equals_apoly() {
    for g in 0..=2 {
        for n in 1..=3 {
            for k in 1..=3 {
                for mu in MultiPartition::all_sorted(n, k) {
                    assert_eq!(multiplicity(g, &mu).unwrap(), apoly(g, &mu).unwrap().value, "g={g} mu={mu}");
                }
            }
        }
    }
}

#[test]
fn character_sum_route_for_e() {
    for g in 0..=2 {
        for mu in MultiPartition::all_sorted(3, 2) {
            let (a, _) = cometcount::kernel::epoly_via_hmu(g, &mu).unwrap();
            assert_eq!(epoly_via_character_sums(g, &mu).unwrap(), a, "g={g} mu={mu}");
        }
    }
}
