use std::collections::BTreeMap;

use crate::algebra::{FactoredRational, Monomial, Polynomial, Var};

use super::{vandermonde, Alphabet, SymfunError};

/// All permutations of `0..n` paired with their signs (+1 / -1).
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    permute(&mut cur, 0, 1, &mut out);
    out
}

fn permute(cur: &mut Vec<usize>, start: usize, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
    if start + 1 >= cur.len() {
        out.push((cur.clone(), sign));
        return;
    }
    for i in start..cur.len() {
        cur.swap(start, i);
        permute(cur, start + 1, if i == start { sign } else { -sign }, out);
        cur.swap(start, i);
    }
}

/// Renaming that sends `vars[i]` to `vars[perm[i]]`.
fn permutation_map(vars: &[Var], perm: &[usize]) -> BTreeMap<Var, Var> {
    vars.iter()
        .zip(perm)
        .filter(|(v, &j)| **v != vars[j])
        .map(|(v, &j)| (*v, vars[j]))
        .collect()
}

fn transposition(vars: &[Var], i: usize, j: usize) -> BTreeMap<Var, Var> {
    let mut perm: Vec<usize> = (0..vars.len()).collect();
    perm.swap(i, j);
    permutation_map(vars, &perm)
}

/// Symmetrizing operator
/// `pi_omega f = sum_sigma sigma( f * x1^(n-1) * ... * xn^0 / Vandermonde )`.
///
/// Computed as the antisymmetrization of `f * x1^(n-1)...xn^0` followed by
/// exact division by the Vandermonde. The letters of `a` must be distinct
/// variables; other variables in `f` are treated as scalars. Each monomial
/// of `f` must satisfy `exp(x_i) >= i - n` (1-based `i`), the region where
/// the result is a generalized Schur function; inputs outside it are
/// rejected rather than extrapolated.
pub fn pi_omega(f: &Polynomial, a: &Alphabet) -> Result<Polynomial, SymfunError> {
    let vars = a.distinct_variables()?;
    let n = vars.len();
    for (m, _) in f.terms() {
        for (i, v) in vars.iter().enumerate() {
            let bound = i as i64 + 1 - n as i64;
            let e = m.exponent(v);
            if e < bound {
                return Err(SymfunError::PreconditionViolated {
                    monomial: m.to_string(),
                    variable: v.name().to_string(),
                    exponent: e,
                    bound,
                });
            }
        }
    }
    if n <= 1 {
        return Ok(f.clone());
    }
    let staircase = Monomial::from_exponents(
        vars.iter()
            .enumerate()
            .map(|(i, v)| (*v, (n - 1 - i) as i64)),
    );
    let shifted = f.mul_monomial(&staircase);
    let mut alternant = Polynomial::zero();
    for (perm, sign) in signed_permutations(n) {
        let moved = shifted.rename(&permutation_map(&vars, &perm));
        if sign > 0 {
            alternant += &moved;
        } else {
            alternant -= &moved;
        }
    }
    Ok(alternant.exact_div(&vandermonde(a))?)
}

/// True when `f` is unchanged by every transposition of `a`'s letters
/// `i, i+1` with `from <= i`.
fn invariant_from(f: &Polynomial, vars: &[Var], from: usize) -> bool {
    (from..vars.len().saturating_sub(1)).all(|i| f.rename(&transposition(vars, i, i + 1)) == *f)
}

/// Is `p` symmetric in all letters of `a` (which must be variables)?
pub fn is_symmetric(p: &Polynomial, a: &Alphabet) -> Result<bool, SymfunError> {
    let vars = a.distinct_variables()?;
    Ok(invariant_from(p, &vars, 0))
}

/// Lagrange operator
/// `L_A f = sum_{x in A} f(x, A \ x) / prod_{x' != x} (x - x')`
/// for `f` symmetric in all letters but the first.
///
/// The terms are put over the common denominator `prod_{i<j}(x_i - x_j)`;
/// linear factors that divide the combined numerator are cancelled, so a
/// polynomial result comes back with no denominator factors.
pub fn lagrange_op(f: &Polynomial, a: &Alphabet) -> Result<FactoredRational, SymfunError> {
    let vars = a.distinct_variables()?;
    let n = vars.len();
    if !invariant_from(f, &vars, 1) {
        return Err(SymfunError::NotSymmetric);
    }
    let letters: Vec<Polynomial> = a.letter_polynomials().collect();
    let delta = vandermonde(a);
    let mut numerator = Polynomial::zero();
    for i in 0..n {
        let fi = if i == 0 {
            f.clone()
        } else {
            f.rename(&transposition(&vars, 0, i))
        };
        let r: Polynomial = (0..n)
            .filter(|&j| j != i)
            .map(|j| &letters[i] - &letters[j])
            .product();
        let cofactor = delta.exact_div(&r)?;
        numerator += &(&fi * &cofactor);
    }
    let mut factors = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            factors.push((&letters[i] - &letters[j], 1));
        }
    }
    Ok(FactoredRational::new(numerator, factors)?.cancel())
}
