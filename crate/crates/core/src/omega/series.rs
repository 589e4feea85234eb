use crate::algebra::{FactoredRational, Polynomial};
use crate::symfun::complete_table;

use super::{Method, OmegaProblem, OmegaResult};

/// Truncated-series oracle for the Omega operator.
///
/// Expanding the rational function gives
/// `sum_{i,j >= 0} S^i(X) S^j(Y) lambda^(i - j + k)`; Omega keeps the terms
/// with `i - j + k >= 0`. `S^i(X) S^j(Y)` has degree `i + j` in the letters,
/// so only `i + j <= max_degree` survives the truncation and the finite
/// sum is exact up to that degree.
pub fn omega_series_oracle(p: &OmegaProblem, max_degree: u32) -> OmegaResult {
    let d = max_degree as usize;
    let hx = complete_table(p.x(), d);
    let hy = complete_table(p.y(), d);
    let k = p.k() as usize;
    let mut sum = Polynomial::zero();
    for (i, hi) in hx.iter().enumerate() {
        for (j, hj) in hy.iter().enumerate().take(d - i + 1) {
            if j <= i + k {
                sum += &(hi * hj);
            }
        }
    }
    OmegaResult {
        value: FactoredRational::polynomial(sum),
        method: Method::Series,
        truncation: Some(max_degree),
    }
}
