//! Graded series Σ_n a_n with a_n of multidegree (n,…,n), and the
//! plethystic Exp/Log on them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::{SymFun, SymFunError};
use crate::combinat::{c0, divisors, mobius, types_of, Partition};
use crate::exact::RatFun;

/// A series truncated at degree `cap`; the grading variable is implicit.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedSeries {
    k: usize,
    cap: usize,
    terms: BTreeMap<usize, SymFun>,
}

fn frac(a: i64, b: i64) -> RatFun {
    RatFun::from_rational(&BigRational::new(BigInt::from(a), BigInt::from(b)))
}

impl GradedSeries {
    pub fn zero(k: usize, cap: usize) -> Self {
        Self { k, cap, terms: BTreeMap::new() }
    }

    pub fn one(k: usize, cap: usize) -> Self {
        let mut s = Self::zero(k, cap);
        s.set(0, SymFun::one(k, cap));
        s
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Sets the degree-`n` term; terms above the cap are ignored.
    pub fn set(&mut self, n: usize, f: SymFun) {
        assert_eq!(f.k(), self.k, "alphabet counts differ");
        if n > self.cap {
            return;
        }
        if f.is_zero() {
            self.terms.remove(&n);
        } else {
            self.terms.insert(n, f);
        }
    }

    /// The degree-`n` term (zero if absent).
    pub fn term(&self, n: usize) -> Result<SymFun, SymFunError> {
        if n > self.cap {
            return Err(SymFunError::DegreeCapExceeded { degree: n, cap: self.cap });
        }
        Ok(self.terms.get(&n).cloned().unwrap_or_else(|| SymFun::zero(self.k, self.cap)))
    }

    pub fn terms(&self) -> &BTreeMap<usize, SymFun> {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (n, f) in &other.terms {
            let t = &out.term(*n).expect("within cap") + f;
            out.set(*n, t);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.k, self.cap.min(other.cap));
        for (a, f) in &self.terms {
            for (b, g) in &other.terms {
                if a + b <= out.cap {
                    let t = &out.term(a + b).expect("within cap") + &(f * g);
                    out.set(a + b, t);
                }
            }
        }
        out
    }

    /// Σ_{d ≥ 1} ψ_d(V)/d.
    fn adams_sum(&self) -> Self {
        let mut out = Self::zero(self.k, self.cap);
        for (m, v) in &self.terms {
            for d in 1..=self.cap / m {
                let t = &out.term(d * m).expect("within cap") + &v.adams(d).scale(&frac(1, d as i64));
                out.set(d * m, t);
            }
        }
        out
    }

    /// Plethystic exponential exp(Σ_d ψ_d(V)/d).
    pub fn pleth_exp(&self) -> Result<Self, SymFunError> {
        if self.terms.contains_key(&0) {
            return Err(SymFunError::NonzeroConstantTerm);
        }
        let l = self.adams_sum();
        // n F_n = Σ_{j=1}^n j L_j F_{n-j}
        let mut f: Vec<SymFun> = vec![SymFun::one(self.k, self.cap)];
        for n in 1..=self.cap {
            let mut acc = SymFun::zero(self.k, self.cap);
            for j in 1..=n {
                if let Some(lj) = l.terms.get(&j) {
                    acc = &acc + &(lj * &f[n - j]).scale(&RatFun::from_int(j as i64));
                }
            }
            f.push(acc.scale(&frac(1, n as i64)));
        }
        let mut out = Self::zero(self.k, self.cap);
        for (n, t) in f.into_iter().enumerate() {
            out.set(n, t);
        }
        Ok(out)
    }

    /// Ordinary logarithm of a series with constant term 1.
    fn ordinary_log(&self) -> Result<Vec<SymFun>, SymFunError> {
        if self.term(0)? != SymFun::one(self.k, self.cap) {
            return Err(SymFunError::ConstantTermNotOne);
        }
        // U_n = F_n − (1/n) Σ_{j<n} j U_j F_{n−j}
        let mut u: Vec<SymFun> = vec![SymFun::zero(self.k, self.cap)];
        for n in 1..=self.cap {
            let mut acc = SymFun::zero(self.k, self.cap);
            for j in 1..n {
                if let Some(f) = self.terms.get(&(n - j)) {
                    acc = &acc + &(&u[j] * f).scale(&RatFun::from_int(j as i64));
                }
            }
            u.push(&self.term(n)? - &acc.scale(&frac(1, n as i64)));
        }
        Ok(u)
    }

    /// Plethystic logarithm: V_n = Σ_{d|n} μ(d)/d · ψ_d(U_{n/d}).
    pub fn pleth_log(&self) -> Result<Self, SymFunError> {
        let u = self.ordinary_log()?;
        let mut out = Self::zero(self.k, self.cap);
        for n in 1..=self.cap {
            let mut acc = SymFun::zero(self.k, self.cap);
            for d in divisors(n) {
                let mu = mobius(d);
                if mu != 0 {
                    acc = &acc + &u[n / d].adams(d).scale(&frac(mu, d as i64));
                }
            }
            out.set(n, acc);
        }
        Ok(out)
    }
}

/// Log(Σ_λ A_λ) as Σ_ω C_ω° A_ω over types ω of size ≤ `cap`, where
/// A_ω = Π_j ψ_{d_j}(A_{ω^j}). `family` maps nonzero partitions to A_λ;
/// A_∅ = 1 is implicit and missing entries are zero.
pub fn log_via_types(family: &BTreeMap<Partition, SymFun>, k: usize, cap: usize) -> GradedSeries {
    let mut out = GradedSeries::zero(k, cap);
    for n in 1..=cap {
        out.set(n, log_term_via_types(family, k, cap, n));
    }
    out
}

/// The degree-`n` term of [`log_via_types`].
pub fn log_term_via_types(family: &BTreeMap<Partition, SymFun>, k: usize, cap: usize, n: usize) -> SymFun {
    let omegas: Vec<_> = types_of(n).into_iter().filter(|t| t.concentrated_degree().is_some()).collect();
    let parts: Vec<SymFun> = omegas
        .par_iter()
        .map(|omega| {
            let mut prod = SymFun::one(k, cap);
            for (d, lambda) in omega.pairs() {
                match family.get(lambda) {
                    Some(a) => prod = &prod * &a.adams(*d),
                    None => return SymFun::zero(k, cap),
                }
            }
            prod.scale(&RatFun::from_rational(&c0(omega)))
        })
        .collect();
    parts.iter().fold(SymFun::zero(k, cap), |acc, f| &acc + f)
}

#[cfg(test)]
mod tests {
    use super::super::Basis;
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn exp_of_p1_is_complete_homogeneous() {
        let cap = 5;
        let mut v = GradedSeries::zero(1, cap);
        v.set(1, SymFun::power_sum(&[p("1")], cap).unwrap());
        let f = v.pleth_exp().unwrap();
        for n in 1..=cap {
            let h = SymFun::basis_element(Basis::H, &[Partition::row(n)], cap).unwrap();
            assert_eq!(f.term(n).unwrap(), h);
        }
        assert_eq!(f.pleth_log().unwrap(), v);
        assert_eq!(GradedSeries::zero(1, 3).pleth_exp().unwrap(), GradedSeries::one(1, 3));
        assert_eq!(GradedSeries::one(1, 3).pleth_log().unwrap(), GradedSeries::zero(1, 3));
    }

    #[test]
    fn log_errors() {
        let mut f = GradedSeries::zero(1, 2);
        f.set(0, SymFun::constant(1, 2, RatFun::from_int(2)));
        assert_eq!(f.pleth_log(), Err(SymFunError::ConstantTermNotOne));
        assert_eq!(f.pleth_exp(), Err(SymFunError::NonzeroConstantTerm));
    }

    #[test]
    fn types_route_matches_mobius_route() {
        let cap = 4;
        let mut family = BTreeMap::new();
        let mut series = GradedSeries::one(1, cap);
        let mut sums: BTreeMap<usize, SymFun> = BTreeMap::new();
        for n in 1..=cap {
            for (i, l) in crate::combinat::partitions_of(n).into_iter().enumerate() {
                let c = RatFun::monomial(1, i as i32, 1) + RatFun::from_int(n as i64);
                let a = SymFun::basis_element(Basis::S, std::slice::from_ref(&l), cap).unwrap().scale(&c);
                let e = sums.entry(n).or_insert_with(|| SymFun::zero(1, cap));
                *e = &*e + &a;
                family.insert(l, a);
            }
        }
        for (n, f) in sums {
            series.set(n, f);
        }
        assert_eq!(log_via_types(&family, 1, cap), series.pleth_log().unwrap());
    }
}
