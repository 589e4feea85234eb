//! Exact evaluation of MacMahon's Omega operator on
//! `lambda^k / prod(1 - x*lambda) prod(1 - y/lambda)`.
//!
//! Three independent evaluators live in [`omega`]: a truncated-series
//! oracle, a closed form built from Schur functions, and a Lagrange
//! interpolation sum. They rest on the symmetric-function toolkit in
//! [`symfun`], which in turn computes in the exact Laurent-polynomial
//! ring of [`algebra`].

pub mod algebra;
pub mod omega;
pub mod symfun;

pub use algebra::{AlgebraError, FactoredRational, Monomial, Polynomial, Var};
