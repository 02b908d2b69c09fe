//! Character sums over types: the pairings A(α,ω), the sums 𝐇^μ_ω and
//! 𝐇̂^μ_ω, the multiplicity ⟨Λ⊗R_μ,1⟩ and the E-polynomial assembled from
//! them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use thiserror::Error;

use crate::combinat::{c0, k0, partitions_of, sym_char, CombinatError, MultiPartition, Partition, TypeT};
use crate::exact::{ExactError, LaurentPoly2, RatFun};
use crate::polybases::{dilate_poly, green, hall_littlewood, hook_polynomial, hook_specials, PolyBasesError};
use crate::symfun::{Basis, SymFun, SymFunError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharSumsError {
    #[error("SizeMismatch: sizes {0} and {1} differ")]
    SizeMismatch(usize, usize),
    #[error(transparent)]
    PolyBases(#[from] PolyBasesError),
    #[error(transparent)]
    SymFun(#[from] SymFunError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Combinat(#[from] CombinatError),
}

/// s_α = Π_j ψ_{d_j} s_{α^j}.
pub fn schur_type(alpha: &TypeT, cap: usize) -> Result<SymFun, CharSumsError> {
    let mut f = SymFun::one(1, cap);
    for (d, l) in alpha.pairs() {
        f = &f * &SymFun::basis_element(Basis::S, std::slice::from_ref(l), cap)?.adams(*d);
    }
    Ok(f)
}

/// H̃_ω(x;q) = Π_j ψ_{d_j} H̃_{ω^j}(x;q).
pub fn hall_littlewood_type(omega: &TypeT, cap: usize) -> Result<SymFun, CharSumsError> {
    let mut f = SymFun::one(1, cap);
    for (d, l) in omega.pairs() {
        f = &f * &hall_littlewood(l, cap)?.adams(*d);
    }
    Ok(f)
}

/// A(α,ω) = ⟨s_α, H̃_ω(x;q)⟩.
pub fn a_pair(alpha: &TypeT, omega: &TypeT) -> Result<LaurentPoly2, CharSumsError> {
    let n = alpha.size();
    if omega.size() != n {
        return Err(CharSumsError::SizeMismatch(n, omega.size()));
    }
    let v = schur_type(alpha, n)?.hall_pair(&hall_littlewood_type(omega, n)?)?;
    Ok(v.as_polynomial()?)
}

/// All tuples (τ^1,…,τ^r) with τ^j ⊢ |λ^j| for the pairs of a type.
fn aligned_tuples(t: &TypeT) -> Vec<Vec<Partition>> {
    let mut out: Vec<Vec<Partition>> = vec![Vec::new()];
    for (_, l) in t.pairs() {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                partitions_of(l.size()).into_iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p);
                    v
                })
            })
            .collect();
    }
    out
}

fn bracket_of(t: &TypeT, tuple: &[Partition]) -> Partition {
    let mut parts = Vec::new();
    for ((d, _), p) in t.pairs().iter().zip(tuple) {
        parts.extend(p.parts().iter().map(|x| x * d));
    }
    Partition::new(parts)
}

fn rat(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

/// The double sum Σ_τ z_{[τ]} χ^α_τ/z_τ Σ_{[ν]=[τ]} Q^β_ν(q)/z_ν, with τ and
/// ν running over tuples aligned with the pairs of α and β and
/// z_τ = Π_j z_{τ^j}.
pub fn a_pair_raw(alpha: &TypeT, beta: &TypeT) -> Result<LaurentPoly2, CharSumsError> {
    if alpha.size() != beta.size() {
        return Err(CharSumsError::SizeMismatch(alpha.size(), beta.size()));
    }
    let mut inner: BTreeMap<Partition, LaurentPoly2> = BTreeMap::new();
    for nu in aligned_tuples(beta) {
        let mut term = LaurentPoly2::one();
        let mut z = BigInt::from(1);
        for ((d, b), nj) in beta.pairs().iter().zip(&nu) {
            term = &term * &dilate_poly(&green(nj, b)?, *d);
            z *= nj.z();
        }
        *inner.entry(bracket_of(beta, &nu)).or_insert_with(LaurentPoly2::zero) += &term.scale(&rat(1.into(), z));
    }
    let mut out = LaurentPoly2::zero();
    for tau in aligned_tuples(alpha) {
        let Some(q) = inner.get(&bracket_of(alpha, &tau)) else { continue };
        let mut chi = BigInt::from(1);
        let mut z = BigInt::from(1);
        for ((_, a), tj) in alpha.pairs().iter().zip(&tau) {
            chi *= sym_char(a, tj)?;
            z *= tj.z();
        }
        out += &q.scale(&rat(chi * bracket_of(alpha, &tau).z(), z));
    }
    Ok(out)
}

/// The pair (𝐇^μ_ω, 𝐇̂^μ_ω).
#[derive(Clone, Debug, PartialEq)]
pub struct TypeSums {
    pub h: LaurentPoly2,
    pub hhat: LaurentPoly2,
}

fn sign(e: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(if e.is_multiple_of(2) { 1 } else { -1 }))
}

/// 𝐇^μ_ω = ((q−1)K_ω°/|W(ω)|) Π_i (−1)^{n+f(μ_i)} A(μ_i,ω) and the dual
/// 𝐇̂^μ_ω with (−1)^{n+f(ω)} A(ω,μ_i).
pub fn char_type_sums(mu: &[TypeT], omega: &TypeT) -> Result<TypeSums, CharSumsError> {
    let n = omega.size();
    if let Some(m) = mu.iter().find(|m| m.size() != n) {
        return Err(CharSumsError::SizeMismatch(m.size(), n));
    }
    let k = k0(omega);
    if num_traits::Zero::is_zero(&k) {
        return Ok(TypeSums { h: LaurentPoly2::zero(), hhat: LaurentPoly2::zero() });
    }
    let lead = LaurentPoly2::from_coeffs(&[-1, 1]).scale(&rat(k, omega.worder()));
    let mut h = lead.clone();
    let mut hhat = lead;
    for m in mu {
        h = &h * &a_pair(m, omega)?.scale(&sign(n + m.f()));
        hhat = &hhat * &a_pair(omega, m)?.scale(&sign(n + omega.f()));
    }
    Ok(TypeSums { h, hhat })
}

/// ℋ^g_ω(0,√q) = Π_j ℋ^g_{ω^j}(0,√q)|_{q→q^{d_j}}.
pub fn pure_type(omega: &TypeT, g: u32) -> RatFun {
    omega.pairs().iter().map(|(d, l)| hook_specials(l, g).pure.dilate(*d as u32)).product()
}

/// ⟨Λ⊗R_μ,1⟩ = Σ_ω ℋ^g_ω(0,√q) 𝐇^{μ†}_ω(q).
pub fn multiplicity(g: u32, mu: &MultiPartition) -> Result<LaurentPoly2, CharSumsError> {
    let Some(n) = mu.common_size() else {
        return Ok(LaurentPoly2::zero());
    };
    let daggers: Vec<TypeT> = mu.components().iter().map(TypeT::semisimple_character).collect();
    let omegas: Vec<TypeT> = crate::combinat::types_of(n).into_iter().filter(|w| w.concentrated_degree().is_some()).collect();
    let terms: Vec<RatFun> = omegas
        .par_iter()
        .map(|w| -> Result<RatFun, CharSumsError> {
            let s = char_type_sums(&daggers, w)?;
            Ok(&pure_type(w, g) * &RatFun::from_poly(&s.h))
        })
        .collect::<Result<_, _>>()?;
    Ok(terms.into_iter().sum::<RatFun>().as_polynomial()?)
}

/// E(q) = (q−1)² (−1)^{kn} q^{n(n−1)(2g+k−2)/2}
///   Σ_ω C_ω° (q^{−n(ω)} H_ω(q))^{2g+k−2} Π_i ℋ⁰_{μ^i_*}(0,√q) A(ω, μ^i_*).
pub fn epoly_via_character_sums(g: u32, mu: &MultiPartition) -> Result<LaurentPoly2, CharSumsError> {
    let Some(n) = mu.common_size() else {
        return Ok(LaurentPoly2::zero());
    };
    let k = mu.k();
    let e = 2 * g as i32 + k as i32 - 2;
    let stars: Vec<TypeT> = mu.components().iter().map(TypeT::semisimple_class).collect();
    let star_pure: Vec<RatFun> = stars.iter().map(|s| pure_type(s, 0)).collect();
    let omegas: Vec<TypeT> = crate::combinat::types_of(n).into_iter().filter(|w| w.concentrated_degree().is_some()).collect();
    let terms: Vec<RatFun> = omegas
        .par_iter()
        .map(|w| -> Result<RatFun, CharSumsError> {
            let hook: LaurentPoly2 = w
                .pairs()
                .iter()
                .fold(LaurentPoly2::one(), |acc, (d, l)| &acc * &dilate_poly(&hook_polynomial(l), *d));
            let hook = RatFun::from_poly(&hook.shift(-(w.nstat() as i32), 0));
            let mut t = hook.pow(e).scale(&c0(w));
            for (s, p) in stars.iter().zip(&star_pure) {
                if t.is_zero() {
                    break;
                }
                t = &(&t * p) * &RatFun::from_poly(&a_pair(w, s)?);
            }
            Ok(t)
        })
        .collect::<Result<_, _>>()?;
    let sum: RatFun = terms.into_iter().sum();
    let shift = (n * (n - 1)) as i32 * e / 2;
    let pref = LaurentPoly2::from_coeffs(&[1, -2, 1]).shift(shift, 0).scale(&sign(k * n));
    Ok((&sum * &RatFun::from_poly(&pref)).as_polynomial()?)
}
