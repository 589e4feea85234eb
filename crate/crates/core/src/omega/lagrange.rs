use crate::algebra::{FactoredRational, Polynomial};
use crate::symfun::{cauchy_factors, vandermonde};

use super::{Method, OmegaError, OmegaProblem, OmegaResult};

/// Omega through Lagrange interpolation:
///
/// ```text
///   sum_i  x_i^(n-1-k) / ( (1 - x_i) B(x_i) prod_{j != i} (x_i - x_j) ),
///   B(t) = prod_j (1 - y_j t).
/// ```
///
/// The `n` terms are put over `Vandermonde(X) * prod (1 - x_i) B(x_i)`; the
/// Vandermonde then divides the combined numerator exactly, leaving the same
/// denominator factors as the Schur form. `X` must consist of distinct
/// variables: coinciding letters would need derivative terms.
pub fn omega_lagrange(p: &OmegaProblem) -> Result<OmegaResult, OmegaError> {
    let n = p.n();
    if p.k() as usize >= n {
        return Err(OmegaError::KTooLarge { k: p.k(), n });
    }
    p.x().distinct_variables()?;
    let b = p.y().one_plus();
    let x: Vec<Polynomial> = p.x().letter_polynomials().collect();
    // per-letter block (1 - x_i) * B(x_i)
    let blocks: Vec<Polynomial> = p
        .x()
        .letters()
        .iter()
        .map(|letter| {
            b.letters()
                .iter()
                .map(|bl| Polynomial::one() - Polynomial::from(letter.mul(bl)))
                .product()
        })
        .collect();
    let delta = vandermonde(p.x());
    let exponent = (n - 1 - p.k() as usize) as i64;
    let mut numerator = Polynomial::zero();
    for i in 0..n {
        let r: Polynomial = (0..n).filter(|&j| j != i).map(|j| &x[i] - &x[j]).product();
        let others: Polynomial = (0..n)
            .filter(|&j| j != i)
            .map(|j| blocks[j].clone())
            .product();
        let power = Polynomial::from(p.x().letters()[i].pow(exponent));
        let term = &(&power * &others) * &delta.exact_div(&r)?;
        numerator += &term;
    }
    let numerator = numerator.exact_div(&delta)?;
    let factors = cauchy_factors(p.x(), &b);
    Ok(OmegaResult {
        value: FactoredRational::new(numerator, factors.into_iter().map(|f| (f, 1)))?,
        method: Method::Lagrange,
        truncation: None,
    })
}
