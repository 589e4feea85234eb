//! Symmetric functions over alphabets of monomials: complete, elementary
//! and Schur functions, the symmetrizing operator `pi_omega`, the Lagrange
//! operator and the Cauchy kernel.

mod alphabet;
mod functions;
mod partition;
mod symmetrizer;

pub use alphabet::Alphabet;
pub use functions::{
    cauchy_factors, cauchy_kernel, complete_h, complete_table, elementary_e, elementary_table,
    jacobi_trudi, schur, schur_bialternant, schur_jt, vandermonde,
};
pub use partition::Partition;
pub use symmetrizer::{is_symmetric, lagrange_op, pi_omega, signed_permutations};

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymfunError {
    #[error("vector of length {got} used with an alphabet of {expected} letters")]
    LengthMismatch { expected: usize, got: usize },
    #[error("alphabet letters must be pairwise distinct")]
    RepeatedGenerators,
    #[error("alphabet letter `{0}` is not a plain variable")]
    NotAVariable(String),
    #[error("{0:?} is not a partition (parts must be positive and weakly decreasing)")]
    NotAPartition(Vec<usize>),
    #[error(
        "monomial `{monomial}` has {variable}^{exponent}, below the bound {bound} \
         where symmetrization yields a Schur function"
    )]
    PreconditionViolated {
        monomial: String,
        variable: String,
        exponent: i64,
        bound: i64,
    },
    #[error("input is not symmetric in all letters but the first")]
    NotSymmetric,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
