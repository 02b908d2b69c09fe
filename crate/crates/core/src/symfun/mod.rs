//! Symmetric functions in k alphabets over Q(z, w), truncated in degree and
//! stored in the power-sum basis.

mod expand;
mod series;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use thiserror::Error;

use crate::combinat::Partition;
use crate::exact::RatFun;

pub use expand::{invert, p_expansion};
pub use series::{log_term_via_types, log_via_types, GradedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymFunError {
    #[error("DegreeCapExceeded: degree {degree} above cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("AlphabetMismatch: {0} vs {1} alphabets")]
    AlphabetMismatch(usize, usize),
    #[error("NonzeroConstantTerm: Exp needs a series without constant term")]
    NonzeroConstantTerm,
    #[error("ConstantTermNotOne: Log needs a series with constant term 1")]
    ConstantTermNotOne,
}

/// The classical bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    P,
    M,
    H,
    E,
    S,
}

impl FromStr for Basis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "p" => Ok(Self::P),
            "m" => Ok(Self::M),
            "h" => Ok(Self::H),
            "e" => Ok(Self::E),
            "s" => Ok(Self::S),
            _ => Err(format!("unknown basis {s:?}")),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::P => "p",
            Self::M => "m",
            Self::H => "h",
            Self::E => "e",
            Self::S => "s",
        })
    }
}

/// One partition per alphabet.
pub type Index = Vec<Partition>;

/// Element of Λ(x_1,…,x_k) ⊗ Q(z,w) with every alphabet truncated at degree
/// `cap`. Terms above the cap are dropped and recorded in `truncated`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymFun {
    k: usize,
    cap: usize,
    terms: BTreeMap<Index, RatFun>,
    truncated: bool,
}

impl SymFun {
    pub fn zero(k: usize, cap: usize) -> Self {
        assert!(k >= 1, "at least one alphabet");
        Self { k, cap, terms: BTreeMap::new(), truncated: false }
    }

    pub fn one(k: usize, cap: usize) -> Self {
        Self::constant(k, cap, RatFun::one())
    }

    pub fn constant(k: usize, cap: usize, c: RatFun) -> Self {
        let mut f = Self::zero(k, cap);
        f.add_term(vec![Partition::empty(); k], c);
        f
    }

    /// `p_{λ^1}(x_1) ⋯ p_{λ^k}(x_k)`.
    pub fn power_sum(index: &[Partition], cap: usize) -> Result<Self, SymFunError> {
        Self::basis_element(Basis::P, index, cap)
    }

    /// `b_{λ^1}(x_1) ⋯ b_{λ^k}(x_k)` expanded into power sums.
    pub fn basis_element(basis: Basis, index: &[Partition], cap: usize) -> Result<Self, SymFunError> {
        if let Some(degree) = index.iter().map(Partition::size).find(|&d| d > cap) {
            return Err(SymFunError::DegreeCapExceeded { degree, cap });
        }
        let k = index.len();
        let mut acc: Vec<(Index, BigRational)> = vec![(Vec::new(), BigRational::from_integer(1.into()))];
        for lambda in index {
            let factor = p_expansion(basis, lambda);
            acc = acc
                .iter()
                .flat_map(|(idx, c)| {
                    factor.iter().map(move |(rho, d)| {
                        let mut i = idx.clone();
                        i.push(rho.clone());
                        (i, c * d)
                    })
                })
                .collect();
        }
        let mut f = Self::zero(k, cap);
        for (idx, c) in acc {
            f.add_term(idx, RatFun::from_rational(&c));
        }
        Ok(f)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Power-sum coefficients.
    pub fn terms(&self) -> &BTreeMap<Index, RatFun> {
        &self.terms
    }

    /// The coefficient of a power-sum product.
    pub fn coeff(&self, index: &[Partition]) -> Result<RatFun, SymFunError> {
        if index.len() != self.k {
            return Err(SymFunError::AlphabetMismatch(index.len(), self.k));
        }
        if let Some(degree) = index.iter().map(Partition::size).find(|&d| d > self.cap) {
            return Err(SymFunError::DegreeCapExceeded { degree, cap: self.cap });
        }
        Ok(self.terms.get(index).cloned().unwrap_or_else(RatFun::zero))
    }

    /// Adds `c · p_index`, dropping it (and flagging) if above the cap.
    pub fn add_term(&mut self, index: Index, c: RatFun) {
        assert_eq!(index.len(), self.k, "index length must equal the number of alphabets");
        if c.is_zero() {
            return;
        }
        if index.iter().any(|l| l.size() > self.cap) {
            self.truncated = true;
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.k, other.k, "alphabet counts differ");
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        if c.is_zero() {
            return Self { terms: BTreeMap::new(), ..self.clone() };
        }
        Self { terms: self.terms.iter().map(|(i, v)| (i.clone(), v * c)).collect(), ..self.clone() }
    }

    /// Applies `f` to every coefficient; zero results are dropped.
    pub fn map_coeffs(&self, f: impl Fn(&RatFun) -> RatFun) -> Self {
        let mut out = Self { terms: BTreeMap::new(), ..self.clone() };
        for (i, v) in &self.terms {
            out.add_term(i.clone(), f(v));
        }
        out
    }

    /// Fallible variant of [`Self::map_coeffs`].
    pub fn try_map_coeffs<E>(&self, f: impl Fn(&RatFun) -> Result<RatFun, E>) -> Result<Self, E> {
        let mut out = Self { terms: BTreeMap::new(), ..self.clone() };
        for (i, v) in &self.terms {
            out.add_term(i.clone(), f(v)?);
        }
        Ok(out)
    }

    /// Extended Hall pairing: p-products are orthogonal with weight Π z_{λ^i}.
    pub fn hall_pair(&self, other: &Self) -> Result<RatFun, SymFunError> {
        if self.k != other.k {
            return Err(SymFunError::AlphabetMismatch(self.k, other.k));
        }
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        Ok(small
            .terms
            .iter()
            .filter_map(|(i, a)| {
                large.terms.get(i).map(|b| {
                    let z: num_bigint::BigInt = i.iter().map(Partition::z).product();
                    (a * b).scale_int(&z)
                })
            })
            .sum())
    }

    /// Adams operation ψ_d: p_r ↦ p_{dr} in every alphabet and (z,w) ↦ (z^d,w^d).
    pub fn adams(&self, d: usize) -> Self {
        assert!(d >= 1, "Adams degree must be positive");
        let mut out = Self { terms: BTreeMap::new(), ..self.clone() };
        for (i, v) in &self.terms {
            out.add_term(i.iter().map(|l| l.scaled(d)).collect(), v.dilate(d as u32));
        }
        out
    }

    /// p_r(x_i) ↦ p_r(x_i)/(1 − q^r) with q the first parameter.
    pub fn principal_specialize(&self, alphabet: usize) -> Self {
        assert!(alphabet < self.k, "alphabet index out of range");
        let mut out = Self { terms: BTreeMap::new(), ..self.clone() };
        for (i, v) in &self.terms {
            let factor: RatFun = i[alphabet]
                .parts()
                .iter()
                .map(|&r| (&RatFun::one() - &RatFun::monomial(1, r as i32, 0)).inv().expect("nonzero"))
                .product();
            out.add_term(i.clone(), v * &factor);
        }
        out
    }

    /// Coefficients in the given basis (tensor products over the alphabets).
    pub fn expand_in(&self, basis: Basis) -> BTreeMap<Index, RatFun> {
        let mut out: BTreeMap<Index, RatFun> = BTreeMap::new();
        for (idx, c) in &self.terms {
            // p_ρ = Σ_λ (B^{-1})_{ρλ} b_λ, tensored over alphabets
            let mut acc: Vec<(Index, BigRational)> = vec![(Vec::new(), BigRational::from_integer(1.into()))];
            for rho in idx {
                let n = rho.size();
                let parts = crate::combinat::partitions_of(n);
                let inv = expand::inverse(basis, n);
                let r = parts.iter().position(|p| p == rho).expect("partition of n");
                acc = acc
                    .iter()
                    .flat_map(|(i, a)| {
                        parts.iter().zip(&inv[r]).filter(|(_, v)| !num_traits::Zero::is_zero(*v)).map(move |(l, v)| {
                            let mut j = i.clone();
                            j.push(l.clone());
                            (j, a * v)
                        })
                    })
                    .collect();
            }
            for (i, a) in acc {
                let e = out.entry(i).or_insert_with(RatFun::zero);
                *e = &*e + &c.scale(&a);
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Builds a function from coefficients in the given basis.
    pub fn from_basis(
        basis: Basis,
        k: usize,
        cap: usize,
        coeffs: &BTreeMap<Index, RatFun>,
    ) -> Result<Self, SymFunError> {
        let mut out = Self::zero(k, cap);
        for (idx, c) in coeffs {
            out = &out + &Self::basis_element(basis, idx, cap)?.scale(c);
        }
        Ok(out)
    }

    /// `(|λ^1|,…,|λ^k|)` if all terms share it.
    pub fn multidegree(&self) -> Option<Vec<usize>> {
        let mut it = self.terms.keys().map(|i| i.iter().map(Partition::size).collect::<Vec<_>>());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Terms of total multidegree (n,…,n).
    pub fn homogeneous_part(&self, n: usize) -> Self {
        Self {
            terms: self.terms.iter().filter(|(i, _)| i.iter().all(|l| l.size() == n)).map(|(i, v)| (i.clone(), v.clone())).collect(),
            ..self.clone()
        }
    }
}

#[allow(clippy::suspicious_op_assign_impl, clippy::suspicious_arithmetic_impl)]
impl Add for &SymFun {
    type Output = SymFun;
    fn add(self, o: &SymFun) -> SymFun {
        self.check(o);
        let mut out = self.clone();
        out.truncated |= o.truncated;
        out.cap = out.cap.min(o.cap);
        for (i, v) in &o.terms {
            out.add_term(i.clone(), v.clone());
        }
        out
    }
}

impl Neg for &SymFun {
    type Output = SymFun;
    fn neg(self) -> SymFun {
        SymFun { terms: self.terms.iter().map(|(i, v)| (i.clone(), -v)).collect(), ..self.clone() }
    }
}

impl Sub for &SymFun {
    type Output = SymFun;
    fn sub(self, o: &SymFun) -> SymFun {
        self + &(-o)
    }
}

impl Mul for &SymFun {
    type Output = SymFun;
    fn mul(self, o: &SymFun) -> SymFun {
        self.check(o);
        let cap = self.cap.min(o.cap);
        let mut out = SymFun { k: self.k, cap, terms: BTreeMap::new(), truncated: self.truncated || o.truncated };
        for (i, a) in &self.terms {
            for (j, b) in &o.terms {
                let idx: Index = i.iter().zip(j).map(|(x, y)| x.union(y)).collect();
                out.add_term(idx, a * b);
            }
        }
        out
    }
}

impl fmt::Display for SymFun {
    /// `c*p[2,1|1]` style listing, terms in index order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let items: Vec<String> = self
            .terms
            .iter()
            .map(|(i, v)| {
                let idx: Vec<String> = i.iter().map(|l| l.to_string()).collect();
                format!("({})*p[{}]", v, idx.join("|"))
            })
            .collect();
        f.write_str(&items.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn one(k: usize, basis: Basis, s: &str) -> SymFun {
        let idx: Vec<Partition> = s.split('|').map(p).collect();
        assert_eq!(idx.len(), k);
        SymFun::basis_element(basis, &idx, 6).unwrap()
    }

    #[test]
    fn pairing_examples() {
        let p2 = one(1, Basis::P, "2");
        assert_eq!(p2.hall_pair(&p2).unwrap(), RatFun::from_int(2));
        let h = one(1, Basis::H, "2,1");
        let m = one(1, Basis::M, "2,1");
        assert_eq!(h.hall_pair(&m).unwrap(), RatFun::one());
        let f = one(2, Basis::P, "1|2");
        assert_eq!(f.hall_pair(&f).unwrap(), RatFun::from_int(2));
    }

    #[test]
    fn adams_examples() {
        assert_eq!(one(1, Basis::P, "1").adams(3), one(1, Basis::P, "3"));
        let qp2 = one(1, Basis::P, "2").scale(&RatFun::var(0));
        assert_eq!(qp2.adams(2), one(1, Basis::P, "4").scale(&RatFun::monomial(1, 2, 0)));
        let h2 = one(1, Basis::H, "2").adams(2);
        let expect = &one(1, Basis::P, "2,2") + &one(1, Basis::P, "4");
        assert_eq!(h2, expect.scale(&RatFun::from_rational(&BigRational::new(1.into(), 2.into()))));
    }

    #[test]
    fn truncation_is_flagged() {
        let a = SymFun::basis_element(Basis::P, &[p("2")], 3).unwrap();
        let sq = &a * &a;
        assert!(sq.is_zero() && sq.truncated());
        assert!(matches!(sq.coeff(&[p("4")]), Err(SymFunError::DegreeCapExceeded { .. })));
        assert!(SymFun::basis_element(Basis::P, &[p("4")], 3).is_err());
    }

    #[test]
    fn expand_round_trip() {
        let s21 = one(1, Basis::S, "2,1");
        let coeffs = s21.expand_in(Basis::S);
        assert_eq!(coeffs.len(), 1);
        assert_eq!(SymFun::from_basis(Basis::S, 1, 6, &coeffs).unwrap(), s21);
    }
}
