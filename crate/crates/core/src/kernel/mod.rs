//! ℍ_μ(z,w) and everything read off from it: E-polynomials, pure parts,
//! the (q,t) candidate, Euler characteristics.

mod omega;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::charsums::{epoly_via_character_sums, CharSumsError};
use crate::combinat::{divisor_sigma, divisors, factorial, mobius, MultiPartition, Partition};
use crate::exact::{ExactError, LaurentPoly2, RatFun, ZW};
use crate::polybases::PolyBasesError;
use crate::symfun::{Basis, SymFun, SymFunError};

pub use omega::{log_omega_term, omega_family, omega_series, omega_summand, tensor_power, Mode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("UnsupportedGenusZero: Euler characteristics need g >= 1")]
    UnsupportedGenusZero,
    #[error("DivisibleMu: {0} is divisible")]
    DivisibleMu(MultiPartition),
    #[error("RouteMismatch: {0}")]
    RouteMismatch(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    SymFun(#[from] SymFunError),
    #[error(transparent)]
    PolyBases(#[from] PolyBasesError),
    #[error(transparent)]
    CharSums(#[from] CharSumsError),
}

/// Genus, multipartition and kernel mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelQuery {
    pub g: u32,
    pub mu: MultiPartition,
    pub mode: Mode,
}

impl KernelQuery {
    pub fn new(g: u32, mu: MultiPartition, mode: Mode) -> Self {
        Self { g, mu, mode }
    }

    pub fn full(g: u32, mu: MultiPartition) -> Self {
        Self::new(g, mu, Mode::Full)
    }

    pub fn k(&self) -> usize {
        self.mu.k()
    }

    /// The common size of the components (None if they differ).
    pub fn n(&self) -> Option<usize> {
        self.mu.common_size()
    }
}

/// d_μ = n²(2g−2+k) − Σ_{i,j}(μ^i_j)² + 2, with n the size of the first
/// component. Meaningful only when all components have size n.
pub fn dim_mu(q: &KernelQuery) -> i64 {
    let n = q.mu.components()[0].size() as i64;
    let d = n * n * (2 * q.g as i64 - 2 + q.k() as i64) - q.mu.sum_of_squares() as i64 + 2;
    assert!(q.n().is_none() || d % 2 == 0, "d_mu is even");
    d
}

/// ℍ_μ in the variables of the query mode: (z,w) for full, q for pure
/// (ℍ_μ(0,√q)) and q for epoly (ℍ_μ(√q,1/√q)).
#[derive(Clone, Debug, PartialEq)]
pub struct HmuResult {
    pub value: RatFun,
    pub polynomial: bool,
    pub d_mu: i64,
}

/// (z²−1)(1−w²) ⟨Log Ω, h_μ⟩, specialized according to the mode.
pub fn hmu(q: &KernelQuery) -> Result<HmuResult, KernelError> {
    let d_mu = dim_mu(q);
    let Some(n) = q.n() else {
        return Ok(HmuResult { value: RatFun::zero(), polynomial: true, d_mu });
    };
    let log = log_omega_term(q.g, q.k(), n, q.mode)?;
    let h = SymFun::basis_element(Basis::H, q.mu.components(), n)?;
    let pair = log.hall_pair(&h)?;
    let factor = match q.mode {
        Mode::Full => RatFun::parse("-z^2*w^2 + z^2 + w^2 - 1", ZW)?,
        Mode::Pure => RatFun::from_poly(&LaurentPoly2::from_coeffs(&[-1, 1])),
        Mode::Epoly => RatFun::from_poly(&LaurentPoly2::from_coeffs(&[1, -2, 1]).shift(-1, 0)),
    };
    let value = &pair * &factor;
    let polynomial = value.is_polynomial();
    if !polynomial {
        log::warn!("H_mu for g={} mu={} is not a polynomial; denominator {}", q.g, q.mu, value.denominator().to_text(ZW));
    }
    Ok(HmuResult { value, polynomial, d_mu })
}

fn full_hmu(g: u32, mu: &MultiPartition) -> Result<HmuResult, KernelError> {
    hmu(&KernelQuery::full(g, mu.clone()))
}

/// q^{d/2} ℍ_μ(√q,1/√q) read off the full ℍ_μ(z,w). The second entry uses
/// ℍ_μ(1/√q,√q) instead.
pub fn epoly_via_hmu(g: u32, mu: &MultiPartition) -> Result<(LaurentPoly2, LaurentPoly2), KernelError> {
    let h = full_hmu(g, mu)?;
    let half = (h.d_mu / 2) as i32;
    let a = h.value.substitute_halfpowers([(1, 1), (1, -1)])?.shift(half, 0);
    let b = h.value.substitute_halfpowers([(1, -1), (1, 1)])?.shift(half, 0);
    Ok((a, b))
}

/// q^{d/2} ℍ_μ(√q,1/√q) from the kernel built on principally specialized
/// Schur functions.
pub fn epoly_via_specialized_kernel(g: u32, mu: &MultiPartition) -> Result<LaurentPoly2, KernelError> {
    let h = hmu(&KernelQuery::new(g, mu.clone(), Mode::Epoly))?;
    Ok(h.value.as_polynomial()?.shift((h.d_mu / 2) as i32, 0))
}

/// The E-polynomial, computed from ℍ_μ(z,w) and from the character sums;
/// the two must agree.
pub fn epoly(g: u32, mu: &MultiPartition) -> Result<LaurentPoly2, KernelError> {
    let (a, b) = epoly_via_hmu(g, mu)?;
    if a != b {
        return Err(KernelError::RouteMismatch(format!("H(sqrt q, 1/sqrt q) and H(1/sqrt q, sqrt q) differ for {mu}")));
    }
    let c = epoly_via_character_sums(g, mu)?;
    if a != c {
        return Err(KernelError::RouteMismatch(format!("kernel and character-sum E-polynomials differ for {mu}")));
    }
    Ok(a)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ApolyResult {
    pub value: LaurentPoly2,
    /// Whether μ is indivisible, so that the quiver variety exists.
    pub quiver_interpretation: bool,
}

/// ℍ_μ(0,√q) from the Hall–Littlewood kernel.
pub fn apoly(g: u32, mu: &MultiPartition) -> Result<ApolyResult, KernelError> {
    let h = hmu(&KernelQuery::new(g, mu.clone(), Mode::Pure))?;
    Ok(ApolyResult { value: h.value.as_polynomial()?, quiver_interpretation: mu.is_indivisible() })
}

/// H_c(q,t) = (t√q)^{d_μ} ℍ_μ(−1/√q, t√q), variables (q,t).
pub fn mhp_candidate(g: u32, mu: &MultiPartition) -> Result<LaurentPoly2, KernelError> {
    let h = full_hmu(g, mu)?;
    let d = h.d_mu as i32;
    let sub = h.value.substitute_monomial([(-1, (-1, 0)), (1, (1, 1))])?;
    let f = &sub * &RatFun::monomial(1, d, d);
    Ok(f.halve_exponents(0)?.as_polynomial()?)
}

/// H_c(q,−1) as a polynomial in q.
pub fn at_t_minus_one(p: &LaurentPoly2) -> LaurentPoly2 {
    LaurentPoly2::from_terms(p.terms().map(|((a, b), c)| ((*a, 0), if b % 2 == 0 { c.clone() } else { -c.clone() })))
}

/// Terms q^i t^{2i} of H_c(q,t), with t set to 1.
pub fn pure_part(p: &LaurentPoly2) -> LaurentPoly2 {
    LaurentPoly2::from_terms(p.terms().filter(|((a, b), _)| *b == 2 * a).map(|((a, _), c)| ((*a, 0), c.clone())))
}

/// E(q) = q^d E(1/q).
pub fn check_curious(e: &LaurentPoly2, d: i64) -> bool {
    let d = d as i32;
    let flipped = LaurentPoly2::from_terms(e.terms().map(|((a, b), c)| ((d - a, *b), c.clone())));
    &flipped == e
}

/// ⟨p_{(d^{n/d})}, h_λ⟩ = (n/d)!/Π ρ_j! if λ = dρ, else 0.
pub fn induc_closed_form(d: usize, lambda: &Partition) -> BigInt {
    match lambda.divided(d) {
        Some(rho) => {
            factorial(rho.size()) / rho.parts().iter().map(|&r| factorial(r)).product::<BigInt>()
        }
        None => BigInt::zero(),
    }
}

/// The Euler characteristic of the quotient by the torus action.
pub fn euler_tilde(g: u32, mu: &MultiPartition) -> Result<BigRational, KernelError> {
    if g == 0 {
        return Err(KernelError::UnsupportedGenusZero);
    }
    let Some(n) = mu.common_size() else {
        return Ok(BigRational::zero());
    };
    if g > 1 {
        let row = Partition::row(n);
        if mu.components().iter().all(|c| *c == row) {
            let v = BigInt::from(mobius(n)) * num_traits::pow(BigInt::from(n), 2 * g as usize - 3);
            return Ok(BigRational::from_integer(v));
        }
        return Ok(BigRational::zero());
    }
    let mut sum = BigInt::zero();
    for d in divisors(mu.parts_gcd()) {
        let m = mobius(d);
        if m == 0 {
            continue;
        }
        let prod: BigInt = mu.components().iter().map(|l| induc_closed_form(d, l)).product();
        sum += BigInt::from(divisor_sigma(n / d) as i64 * m) * prod;
    }
    Ok(BigRational::new(sum, BigInt::from(n)))
}

fn binomial_general(a: i64, j: usize) -> BigRational {
    let mut r = BigRational::one();
    for i in 0..j as i64 {
        r *= BigRational::new(BigInt::from(a - i), BigInt::from(i + 1));
    }
    r
}

/// lim_{q→1} E(q)/(q−1)^{2g}; None if E does not vanish to that order.
pub fn euler_limit(e: &LaurentPoly2, g: u32) -> Option<BigRational> {
    let order = 2 * g as usize;
    let taylor = |j: usize| -> BigRational {
        e.terms().map(|((a, _), c)| c * binomial_general(*a as i64, j)).fold(BigRational::zero(), |x, y| x + y)
    };
    if (0..order).any(|j| !taylor(j).is_zero()) {
        return None;
    }
    Some(taylor(order))
}

/// Non-emptiness of the quiver variety: A_μ(q) ≠ 0.
pub fn check_nonempty(g: u32, mu: &MultiPartition) -> Result<bool, KernelError> {
    if !mu.is_indivisible() {
        return Err(KernelError::DivisibleMu(mu.clone()));
    }
    Ok(!apoly(g, mu)?.value.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::QT;

    fn mp(s: &str) -> MultiPartition {
        s.parse().unwrap()
    }

    fn qpoly(s: &str) -> LaurentPoly2 {
        LaurentPoly2::parse(s, QT).unwrap()
    }

    #[test]
    fn dimension() {
        assert_eq!(dim_mu(&KernelQuery::full(0, mp("1,1;1,1;1,1"))), 0);
        assert_eq!(dim_mu(&KernelQuery::full(3, mp("1;1"))), 6);
        assert_eq!(dim_mu(&KernelQuery::full(1, mp("2"))), 2);
    }

    #[test]
    fn rank_one() {
        for g in 0..3 {
            for k in 1..3 {
                let mu = MultiPartition::new(vec![Partition::row(1); k]).unwrap();
                let h = full_hmu(g, &mu).unwrap();
                let expect = RatFun::parse("z - w", ZW).unwrap().pow(2 * g as i32);
                assert_eq!(h.value, expect, "g={g} k={k}");
                assert_eq!(apoly(g, &mu).unwrap().value, qpoly(&format!("q^{g}")));
            }
        }
        assert_eq!(epoly(1, &mp("1")).unwrap(), qpoly("q^2 - 2*q + 1"));
    }

    #[test]
    fn genus_zero_two_points() {
        assert_eq!(full_hmu(0, &mp("1;1")).unwrap().value, RatFun::one());
        assert!(full_hmu(0, &mp("2;2")).unwrap().value.is_zero());
        assert!(full_hmu(0, &mp("2;1,1")).unwrap().value.is_zero());
        assert!(full_hmu(0, &mp("2;1")).unwrap().value.is_zero());
    }

    #[test]
    fn star_quiver() {
        let mu = mp("1,1;1,1;1,1");
        assert_eq!(apoly(0, &mu).unwrap().value, LaurentPoly2::one());
        assert_eq!(epoly(0, &mu).unwrap(), LaurentPoly2::one());
        assert!(check_nonempty(0, &mu).unwrap());
        assert!(!check_nonempty(0, &mp("1,1;1,1")).unwrap());
        assert_eq!(check_nonempty(0, &mp("2;2")), Err(KernelError::DivisibleMu(mp("2;2"))));
        assert!(!apoly(0, &mp("2;2")).unwrap().quiver_interpretation);
    }

    #[test]
    fn candidate_rank_one() {
        let h = mhp_candidate(1, &mp("1")).unwrap();
        assert_eq!(h, LaurentPoly2::parse("q^2*t^4 + 2*q*t^3 + t^2", QT).unwrap());
        assert_eq!(at_t_minus_one(&h), epoly(1, &mp("1")).unwrap());
        assert_eq!(pure_part(&h), qpoly("q^2"));
    }

    #[test]
    fn curious() {
        assert!(check_curious(&qpoly("q^2 - 2*q + 1"), 2));
        assert!(check_curious(&LaurentPoly2::one(), 0));
        assert!(!check_curious(&qpoly("q + 1"), 3));
    }

    #[test]
    fn euler() {
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(euler_tilde(2, &mp("2")).unwrap(), r(-2, 1));
        assert_eq!(euler_tilde(2, &mp("1,1")).unwrap(), r(0, 1));
        assert_eq!(euler_tilde(1, &mp("1,1")).unwrap(), r(3, 1));
        assert_eq!(euler_tilde(0, &mp("1")), Err(KernelError::UnsupportedGenusZero));
        for (g, mu) in [(1, "1,1"), (1, "2"), (2, "2"), (2, "1,1"), (1, "2;1,1")] {
            let m = mp(mu);
            let e = epoly(g, &m).unwrap();
            assert_eq!(euler_limit(&e, g), Some(euler_tilde(g, &m).unwrap()), "g={g} mu={mu}");
        }
    }
}
