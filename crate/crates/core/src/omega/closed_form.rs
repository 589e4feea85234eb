use crate::algebra::{FactoredRational, Polynomial};
use crate::symfun::{cauchy_factors, jacobi_trudi, Partition};

use super::{Method, OmegaError, OmegaProblem, OmegaResult};

/// Partitions indexing the numerator sum: at most `n - 1` rows and parts at
/// most `m + 1`, weights ascending, lexicographic within a weight.
///
/// Outside this box every term vanishes: `S_mu'(B)` is zero once
/// `mu_1 > |B| = m + 1`, and the sum comes from a Cauchy expansion over the
/// `n - 1` letters of `X \ x1`.
pub fn closed_form_partitions(p: &OmegaProblem) -> Vec<Partition> {
    Partition::in_box(p.n() - 1, p.m() + 1)
}

/// One summand `(-1)^|mu| S_mu'(1 + Y) S_(-k, mu)(X)` of the numerator.
///
/// Defined for any partition; the determinants simply grow when `mu` does
/// not fit the alphabets, which is how vanishing outside the enumeration
/// box can be observed.
pub fn closed_form_term(p: &OmegaProblem, mu: &Partition) -> Polynomial {
    let b = p.y().one_plus();
    let conj = mu.conjugate();
    let b_part = jacobi_trudi(&conj.to_vector(conj.len().max(b.len())), &b);
    if b_part.is_zero() {
        return b_part;
    }
    let rest = mu.len().max(p.n() - 1);
    let mut v = Vec::with_capacity(rest + 1);
    v.push(-(p.k() as i64));
    v.extend(mu.to_vector(rest));
    let x_part = jacobi_trudi(&v, p.x());
    let t = &b_part * &x_part;
    if mu.weight() % 2 == 1 {
        -t
    } else {
        t
    }
}

/// Omega through Schur functions:
///
/// ```text
///   sum_mu (-1)^|mu| S_mu'(B) S_(-k, mu)(X)
///   ---------------------------------------      B = 1 + Y,
///              prod_{x, b} (1 - x b)
/// ```
///
/// valid for `k < n`. Letters of `X` that are not distinct variables are
/// handled by computing over fresh variables and substituting afterwards,
/// since Schur values are stable under specialization.
pub fn omega_closed_form(p: &OmegaProblem) -> Result<OmegaResult, OmegaError> {
    if p.k() as usize >= p.n() {
        return Err(OmegaError::KTooLarge { k: p.k(), n: p.n() });
    }
    if p.x().distinct_variables().is_err() {
        let (generic, bindings) = p.generic_x();
        let out = omega_closed_form(&generic)?;
        return Ok(OmegaResult {
            value: out.value.try_map(|q| q.substitute(&bindings))?,
            ..out
        });
    }
    let numerator: Polynomial = closed_form_partitions(p)
        .iter()
        .map(|mu| closed_form_term(p, mu))
        .sum();
    let factors = cauchy_factors(p.x(), &p.y().one_plus());
    Ok(OmegaResult {
        value: FactoredRational::new(numerator, factors.into_iter().map(|f| (f, 1)))?,
        method: Method::Schur,
        truncation: None,
    })
}
