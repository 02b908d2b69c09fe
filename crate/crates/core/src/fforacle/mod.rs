//! Finite-field oracles: direct and Fourier-transform point counts for the
//! multiplicative and additive equations, and the GL_2(𝔽_q) character table.

mod classes;
mod cyclo;
mod field;
mod generic;
mod gl2;
mod matrix;

use thiserror::Error;

pub use classes::{
    adjoint_orbits, commutator_counts, conjugacy_classes, count_char_points, count_quiver_points,
    count_via_add_fourier, gl_order, AdjOrbitFq, ConjClassFq, DEFAULT_BUDGET,
};
pub use cyclo::{cyclotomic_poly, Cyclo};
pub use field::{is_prime, next_prime, Fq, Fq2};
pub use generic::{
    find_generic_add, find_generic_cyclic, find_generic_mult, is_generic_add, is_generic_cyclic, is_generic_mult,
    EigenData,
};
pub use gl2::{
    check_commutator_lemma, count_via_group_fourier, generic_characters, multiplicity_from_table,
    sum_over_characters_of_type, sum_over_classes_of_type, CharTableGL2, Gl2Char, Gl2Class,
};
pub use matrix::{all_matrices, gl_elements, FqMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FfError {
    #[error("NotFound: no generic data over this field")]
    NotFound,
    #[error("DivisibleMu: {0} is divisible")]
    DivisibleMu(String),
    #[error("BudgetExceeded: {0} operations requested")]
    BudgetExceeded(u128),
    #[error("NonIntegerResult: a character sum did not collapse to an integer")]
    NonIntegerResult,
    #[error("UnsupportedField: q = {0} (primes up to 251 only; odd for GL_2 tables)")]
    UnsupportedField(u64),
    #[error("Unsupported: {0}")]
    Unsupported(String),
}
