//! Power-sum expansions of the classical bases in a single alphabet.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Basis;
use crate::combinat::{partitions_of, sym_char, Partition};

/// Sparse p-expansion: `(ρ, c)` pairs meaning Σ c p_ρ.
pub type PExpansion = Vec<(Partition, BigRational)>;

type Matrix = Vec<Vec<BigRational>>;

thread_local! {
    static EXPANSIONS: RefCell<HashMap<(Basis, Partition), PExpansion>> = RefCell::new(HashMap::new());
    static INVERSES: RefCell<HashMap<(Basis, usize), Matrix>> = RefCell::new(HashMap::new());
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn inv_z(rho: &Partition) -> BigRational {
    BigRational::new(BigInt::one(), rho.z())
}

/// The p-expansion of `basis_λ`.
pub fn p_expansion(basis: Basis, lambda: &Partition) -> PExpansion {
    if let Some(e) = EXPANSIONS.with(|m| m.borrow().get(&(basis, lambda.clone())).cloned()) {
        return e;
    }
    let e = compute(basis, lambda);
    EXPANSIONS.with(|m| m.borrow_mut().insert((basis, lambda.clone()), e.clone()));
    e
}

fn compute(basis: Basis, lambda: &Partition) -> PExpansion {
    let n = lambda.size();
    match basis {
        Basis::P => vec![(lambda.clone(), BigRational::one())],
        Basis::S => partitions_of(n)
            .into_iter()
            .filter_map(|rho| {
                let c = sym_char(lambda, &rho).expect("equal sizes");
                (c != 0).then(|| (rho.clone(), rat(c) * inv_z(&rho)))
            })
            .collect(),
        Basis::H | Basis::E => {
            let mut acc: PExpansion = vec![(Partition::empty(), BigRational::one())];
            for &part in lambda.parts() {
                let factor: PExpansion = partitions_of(part)
                    .into_iter()
                    .map(|rho| {
                        let sign = if basis == Basis::E && (part - rho.len()) % 2 == 1 { -1 } else { 1 };
                        (rho.clone(), rat(sign) * inv_z(&rho))
                    })
                    .collect();
                acc = multiply(&acc, &factor);
            }
            acc
        }
        Basis::M => {
            // m is Hall-dual to h: m_μ = Σ_ρ (H^{-1})_{ρμ} p_ρ / z_ρ
            let parts = partitions_of(n);
            let hinv = inverse(Basis::H, n);
            let j = parts.iter().position(|p| p == lambda).expect("partition of n");
            parts
                .iter()
                .enumerate()
                .filter(|(i, _)| !hinv[*i][j].is_zero())
                .map(|(i, rho)| (rho.clone(), &hinv[i][j] * inv_z(rho)))
                .collect()
        }
    }
}

fn multiply(a: &PExpansion, b: &PExpansion) -> PExpansion {
    let mut out: HashMap<Partition, BigRational> = HashMap::new();
    for (pa, ca) in a {
        for (pb, cb) in b {
            *out.entry(pa.union(pb)).or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    let mut v: PExpansion = out.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by(|x, y| x.0.cmp(&y.0));
    v
}

/// The inverse of the transition matrix `B` with `b_λ = Σ_ρ B_{λρ} p_ρ`,
/// rows and columns indexed by `partitions_of(n)`. Entry `[ρ][λ]` is the
/// coefficient of `b_λ` in `p_ρ`.
pub fn inverse(basis: Basis, n: usize) -> Vec<Vec<BigRational>> {
    if let Some(m) = INVERSES.with(|m| m.borrow().get(&(basis, n)).cloned()) {
        return m;
    }
    let parts = partitions_of(n);
    let index: HashMap<&Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let size = parts.len();
    let mut b = vec![vec![BigRational::zero(); size]; size];
    for (i, lambda) in parts.iter().enumerate() {
        for (rho, c) in p_expansion(basis, lambda) {
            b[i][index[&rho]] = c;
        }
    }
    let inv = invert(b).expect("transition matrices are invertible");
    INVERSES.with(|m| m.borrow_mut().insert((basis, n), inv.clone()));
    inv
}

/// Gauss–Jordan inversion over Q.
pub fn invert(mut a: Vec<Vec<BigRational>>) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut inv: Vec<Vec<BigRational>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect()).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn small_expansions() {
        assert_eq!(p_expansion(Basis::H, &p("1")), vec![(p("1"), r(1, 1))]);
        let mut s11 = p_expansion(Basis::S, &p("1,1"));
        s11.sort();
        assert_eq!(s11, vec![(p("1,1"), r(1, 2)), (p("2"), r(-1, 2))]);
        let mut h2 = p_expansion(Basis::H, &p("2"));
        h2.sort();
        assert_eq!(h2, vec![(p("1,1"), r(1, 2)), (p("2"), r(1, 2))]);
        let mut m2 = p_expansion(Basis::M, &p("2"));
        m2.sort();
        assert_eq!(m2, vec![(p("2"), r(1, 1))]);
        let mut m11 = p_expansion(Basis::M, &p("1,1"));
        m11.sort();
        assert_eq!(m11, vec![(p("1,1"), r(1, 2)), (p("2"), r(-1, 2))]);
    }
}
