//! Evaluators for `Omega_>= lambda^k / prod(1 - x lambda) prod(1 - y / lambda)`
//! and the machinery that checks them against each other.

mod check;
mod closed_form;
mod lagrange;
mod problem;
mod series;

pub use check::{
    compare_results, cross_check, Comparison, CrossCheckReport, NumeratorTerms, Timings,
};
pub use closed_form::{closed_form_partitions, closed_form_term, omega_closed_form};
pub use lagrange::omega_lagrange;
pub use problem::{Method, OmegaProblem, OmegaResult, Padded};
pub use series::omega_series_oracle;

use crate::algebra::AlgebraError;
use crate::symfun::SymfunError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OmegaError {
    #[error("the alphabet X must have at least one letter")]
    EmptyX,
    #[error("k = {k} must be smaller than n = {n}; pad X with letters specialized to 0 first")]
    KTooLarge { k: u32, n: usize },
    #[error(
        "{comparison}: coefficient of `{monomial}` is {left} on the left but {right} on the right"
    )]
    MethodDisagreement {
        comparison: String,
        monomial: String,
        left: String,
        right: String,
    },
    #[error(transparent)]
    Symfun(#[from] SymfunError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Evaluates `p` with `method`, padding `X` with `pad` extra letters that
/// are sent to 0 afterwards. `max_degree` is only used by the series oracle.
pub fn evaluate(
    p: &OmegaProblem,
    method: Method,
    pad: usize,
    max_degree: u32,
) -> Result<OmegaResult, OmegaError> {
    let padded = p.zero_pad(pad);
    let out = match method {
        Method::Series => omega_series_oracle(&padded.problem, max_degree),
        Method::Schur => omega_closed_form(&padded.problem)?,
        Method::Lagrange => omega_lagrange(&padded.problem)?,
    };
    Ok(padded.specialize(&out)?)
}
