//! Exact sparse Laurent-polynomial arithmetic over the integers.

mod json;
mod matrix;
mod monomial;
mod polynomial;
mod rational;
mod text;
mod var;

pub use matrix::{det, det_integer};
pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use rational::{render_denominator, series_inverse, Factor, FactoredRational};
pub use var::Var;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not square ({rows} rows, a row of length {cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("cannot substitute a non-unit for `{0}`, which occurs with a negative exponent")]
    NonInvertibleSubstitution(String),
    #[error("`{0}` has no power-series inverse (constant term must be +-1)")]
    NotSeriesInvertible(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}
