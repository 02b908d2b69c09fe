//! Exact computation of E-polynomials of character varieties and
//! A-polynomials of comet-shaped quivers through the genus-g Cauchy kernel,
//! together with brute-force finite-field counting oracles.

pub mod charsums;
pub mod combinat;
pub mod exact;
pub mod fforacle;
pub mod kernel;
pub mod polybases;
pub mod suite;
pub mod symfun;
