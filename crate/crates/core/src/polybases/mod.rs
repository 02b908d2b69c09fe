//! Macdonald, transformed Hall–Littlewood, Kostka–Foulkes and Green
//! polynomials, and the genus-g hook functions.

mod hooks;
mod kostka;
mod macdonald;

use thiserror::Error;

use crate::combinat::{CombinatError, TypeT};
use crate::exact::{ExactError, LaurentPoly2};
use crate::symfun::SymFunError;

pub use hooks::{
    centralizer_order, epoly_from_hook, hook_genus, hook_polynomial, hook_specials, pure_from_hook, HookSpecials,
};
pub use kostka::{
    charge, green, hall_littlewood, hall_littlewood_schur, hall_littlewood_via_p, kostka_charge, kostka_foulkes, ssyt,
};
pub use macdonald::{
    build_table, load_table, macdonald, macdonald_schur, set_cache_dir, store_table, table, table_from_text,
    table_to_text, MacdonaldTable, CACHE_VERSION,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyBasesError {
    #[error("SizeMismatch: sizes {0} and {1} differ")]
    SizeMismatch(usize, usize),
    #[error("Cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Combinat(#[from] CombinatError),
    #[error(transparent)]
    SymFun(#[from] SymFunError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Substitutes q ↦ q^d in a polynomial of the first variable.
pub fn dilate_poly(p: &LaurentPoly2, d: usize) -> LaurentPoly2 {
    LaurentPoly2::from_terms(p.terms().map(|((a, b), c)| ((a * d as i32, *b), c.clone())))
}

/// Q^ω_τ(q) = Π_i Q^{ω^i}_{τ^i}(q^{d_i}) when ω ∼ τ, else 0. Components are
/// matched in the canonical order of the types.
pub fn green_type(tau: &TypeT, omega: &TypeT) -> Result<LaurentPoly2, PolyBasesError> {
    if tau.size() != omega.size() {
        return Err(PolyBasesError::SizeMismatch(tau.size(), omega.size()));
    }
    if !tau.similar(omega) {
        return Ok(LaurentPoly2::zero());
    }
    let mut out = LaurentPoly2::one();
    for ((d, t), (_, w)) in tau.pairs().iter().zip(omega.pairs()) {
        out = &out * &dilate_poly(&green(t, w)?, *d);
    }
    Ok(out)
}

/// K̃_{τω}(q) = Π_i K̃_{τ^i ω^i}(q^{d_i}) when ω ∼ τ, else 0.
pub fn kostka_foulkes_type(tau: &TypeT, omega: &TypeT) -> Result<LaurentPoly2, PolyBasesError> {
    if tau.size() != omega.size() {
        return Err(PolyBasesError::SizeMismatch(tau.size(), omega.size()));
    }
    if !tau.similar(omega) {
        return Ok(LaurentPoly2::zero());
    }
    let mut out = LaurentPoly2::one();
    for ((d, t), (_, w)) in tau.pairs().iter().zip(omega.pairs()) {
        out = &out * &dilate_poly(&kostka_foulkes(t, w)?, *d);
    }
    Ok(out)
}
