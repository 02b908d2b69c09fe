use cometcount::charsums::{char_type_sums, multiplicity};
use cometcount::combinat::{types_of, MultiPartition, TypeT};
use cometcount::fforacle::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn mp(s: &str) -> MultiPartition {
    s.parse().unwrap()
}

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

/// Generic multiplicative data, moving to larger primes when the field is too small.
fn mult_data(mu: &MultiPartition, q: u64) -> (Fq, EigenData) {
    let mut q = q;
    loop {
        let f = Fq::new(q).unwrap();
        if let Ok(d) = find_generic_mult(mu, &f) {
            return (f, d);
        }
        q = next_prime(q);
    }
}

#[test]
fn group_orders() {
    assert_eq!(gl_order(1, 7), int(6));
    assert_eq!(gl_order(2, 2), int(6));
    assert_eq!(gl_order(2, 3), int(48));
    assert_eq!(gl_elements(&Fq::new(3).unwrap(), 2).len(), 48);
}

proptest! {
    #[test]
    fn field_axioms(pi in 0usize..6, a in 0u64..1000, b in 0u64..1000, c in 0u64..1000) {
        let p = [2u64, 3, 5, 7, 11, 13][pi];
        let f = Fq::new(p).unwrap();
        let (a, b, c) = (a % p, b % p, c % p);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(f.sub(a, b), b), a);
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            prop_assert_eq!(f.exp(f.log(a)), a);
        }
    }
}

#[test]
fn character_table_small() {
    let t = CharTableGL2::new(3).unwrap();
    assert!(t.check());
    let mut degrees: Vec<u64> = t.chars().iter().map(|c| c.degree(3)).collect();
    degrees.sort();
    assert_eq!(degrees, vec![1, 1, 2, 2, 2, 3, 3, 4]);
    assert_eq!(conjugacy_classes(t.field(), 2).len(), 8);
    assert!(CharTableGL2::new(5).unwrap().check());
    // total Plancherel mass
    assert_eq!(count_via_group_fourier(&t, 0, &[]).unwrap(), int(1));
}

#[test]
fn classify_matches_enumeration() {
    let t = CharTableGL2::new(5).unwrap();
    let f = t.field();
    for c in conjugacy_classes(f, 2) {
        let k = t.classify(c.representative());
        assert!(c.members().iter().all(|m| t.classify(m) == k));
        let size = t.classes()[t.class_index(&k)].1;
        assert_eq!(size as usize, c.size());
    }
}

#[test]
fn semisimple_membership() {
    let f = Fq::new(5).unwrap();
    let split = ConjClassFq::semisimple(&f, &[(2, 1), (3, 1)]);
    let central = ConjClassFq::semisimple(&f, &[(4, 2)]);
    assert_eq!(split.size(), 30);
    assert_eq!(central.size(), 1);
    let plain = ConjClassFq::of_matrix(&f, split.representative());
    for m in all_matrices(&f, 2) {
        assert_eq!(split.contains(&f, &m), plain.contains(&f, &m));
    }
}

#[test]
fn generic_search() {
    let f = Fq::new(5).unwrap();
    let d = find_generic_mult(&mp("1;1"), &f).unwrap();
    assert!(is_generic_mult(&mp("1;1"), &d, &f));
    assert_eq!(f.mul(d[0][0], d[1][0]), 1);
    // a central class ζI is generic iff ζ has exact order n
    assert_eq!(find_generic_mult(&mp("2"), &f).unwrap(), vec![vec![4]]);
    assert!(!is_generic_mult(&mp("2"), &vec![vec![1]], &f));
    let mu = mp("1,1;1,1;1,1");
    let d = find_generic_mult(&mu, &f).unwrap();
    assert!(is_generic_mult(&mu, &d, &f));
    assert_eq!(find_generic_mult(&mu, &Fq::new(3).unwrap()), Err(FfError::NotFound));
    assert_eq!(find_generic_mult(&mp("1,1"), &Fq::new(3).unwrap()), Err(FfError::NotFound));
    let d = find_generic_add(&mp("1;1"), &f).unwrap();
    assert_eq!(f.add(d[0][0], d[1][0]), 0);
    assert_eq!(find_generic_add(&mp("2;2"), &f), Err(FfError::DivisibleMu("2;2".into())));
    // every choice of one eigenvalue per orbit sums to zero somewhere in 𝔽_3
    assert_eq!(find_generic_add(&mu, &Fq::new(3).unwrap()), Err(FfError::NotFound));
    let d = find_generic_add(&mu, &f).unwrap();
    assert!(is_generic_add(&mu, &d, &f));
}

#[test]
fn rank_one_counts() {
    let f = Fq::new(3).unwrap();
    let one = ConjClassFq::semisimple(&f, &[(1, 1)]);
    assert_eq!(count_char_points(&f, 1, 1, &[one], DEFAULT_BUDGET).unwrap(), 4);
    let a = ConjClassFq::semisimple(&f, &[(1, 1)]);
    let b = ConjClassFq::semisimple(&f, &[(2, 1)]);
    assert_eq!(count_quiver_points(&f, 1, 0, &[a.clone(), b.clone()], DEFAULT_BUDGET).unwrap(), 1);
    assert_eq!(count_via_add_fourier(&f, 1, 0, &[a, b]).unwrap(), int(1));
    let zero = ConjClassFq::semisimple(&f, &[(0, 1)]);
    assert_eq!(count_quiver_points(&f, 1, 1, std::slice::from_ref(&zero), DEFAULT_BUDGET).unwrap(), 9);
    assert_eq!(count_via_add_fourier(&f, 1, 1, &[zero]).unwrap(), int(9));
    assert_eq!(
        count_char_points(&f, 2, 2, &[], 1000),
        Err(FfError::BudgetExceeded(48 * 48))
    );
}

#[test]
fn group_fourier_matches_direct() {
    let t = CharTableGL2::new(3).unwrap();
    let f = t.field();
    let classes = conjugacy_classes(f, 2);
    let minus = ConjClassFq::semisimple(f, &[(2, 2)]);
    assert_eq!(
        count_via_group_fourier(&t, 1, std::slice::from_ref(&minus)).unwrap(),
        BigInt::from(count_char_points(f, 2, 1, &[minus], DEFAULT_BUDGET).unwrap())
    );
    for g in 0..2 {
        for c in &classes {
            let one = [c.clone()];
            let direct = count_char_points(f, 2, g, &one, DEFAULT_BUDGET).unwrap();
            assert_eq!(count_via_group_fourier(&t, g, &one).unwrap(), BigInt::from(direct));
        }
        for (i, c) in classes.iter().enumerate().step_by(3) {
            let three = [c.clone(), classes[(i + 1) % 8].clone(), classes[(i + 5) % 8].clone()];
            let direct = count_char_points(f, 2, g, &three, DEFAULT_BUDGET).unwrap();
            assert_eq!(count_via_group_fourier(&t, g, &three).unwrap(), BigInt::from(direct));
        }
    }
    assert!(check_commutator_lemma(&t));
}

#[test]
fn additive_fourier_matches_direct() {
    let f = Fq::new(3).unwrap();
    let orbits = adjoint_orbits(&f, 2);
    assert_eq!(orbits.iter().map(|o| o.size()).sum::<usize>(), 81);
    for g in 0..2 {
        for (i, o) in orbits.iter().enumerate().step_by(2) {
            let one = [o.clone()];
            assert_eq!(
                count_via_add_fourier(&f, 2, g, &one).unwrap(),
                BigInt::from(count_quiver_points(&f, 2, g, &one, DEFAULT_BUDGET).unwrap())
            );
            let three = [o.clone(), orbits[(i + 3) % orbits.len()].clone(), orbits[(i + 7) % orbits.len()].clone()];
            assert_eq!(
                count_via_add_fourier(&f, 2, 0, &three).unwrap(),
                BigInt::from(count_quiver_points(&f, 2, 0, &three, DEFAULT_BUDGET).unwrap())
            );
        }
    }
}

#[test]
fn character_sums_over_types_match_table() {
    for (mu, q) in [("2", 3u64), ("1,1", 5), ("2;1,1", 5), ("1,1;1,1;1,1", 5), ("2;2", 5), ("1,1;1,1", 5)] {
        let mu = mp(mu);
        let (f, d) = mult_data(&mu, q);
        let t = CharTableGL2::new(f.q()).unwrap();
        let classes = ConjClassFq::from_eigen_data(&f, &mu, &d);
        let stars: Vec<TypeT> = mu.components().iter().map(TypeT::semisimple_class).collect();
        let daggers: Vec<TypeT> = mu.components().iter().map(TypeT::semisimple_character).collect();
        let chars = generic_characters(&t, &mu).unwrap();
        let q = f.q() as i64;
        for omega in types_of(2) {
            let hhat = char_type_sums(&stars, &omega).unwrap().hhat.eval_int(q);
            let direct = sum_over_characters_of_type(&t, &omega, &classes).unwrap();
            assert_eq!(hhat, BigRational::from_integer(direct), "mu={mu} omega={omega}");
            let h = char_type_sums(&daggers, &omega).unwrap().h.eval_int(q);
            let direct = sum_over_classes_of_type(&t, &omega, &chars).unwrap();
            assert_eq!(h, BigRational::from_integer(direct), "mu={mu} omega={omega}");
        }
    }
}

#[test]
fn multiplicity_matches_table() {
    for mu in ["2", "1,1", "2;1,1", "1,1;1,1;1,1", "1,1;1,1"] {
        let mu = mp(mu);
        for q in [3u64, 5] {
            let (f, _) = mult_data(&mu, q);
            let t = CharTableGL2::new(f.q()).unwrap();
            let chars = generic_characters(&t, &mu).unwrap();
            for g in 0..3 {
                let m = multiplicity(g, &mu).unwrap().eval_int(f.q() as i64);
                let direct = multiplicity_from_table(&t, g, &chars).unwrap();
                assert_eq!(m, BigRational::from_integer(direct), "g={g} mu={mu} q={}", f.q());
            }
        }
    }
}
