use crate::algebra::{det, Polynomial};

use super::{Alphabet, Partition, SymfunError};

/// `[S^0(A), S^1(A), ..., S^max(A)]`.
///
/// Built one letter at a time: adding a letter `a` to `A` turns `S^j(A)`
/// into `sum_t a^t S^(j-t)(A)`, evaluated as `S^j(A) + a * S^(j-1)(A + a)`.
pub fn complete_table(a: &Alphabet, max: usize) -> Vec<Polynomial> {
    let mut table = vec![Polynomial::zero(); max + 1];
    table[0] = Polynomial::one();
    for letter in a.letters() {
        for j in 1..=max {
            let shifted = table[j - 1].mul_monomial(letter);
            table[j] += &shifted;
        }
    }
    table
}

/// Complete symmetric function `S^j(A)`; zero for negative `j`.
pub fn complete_h(j: i64, a: &Alphabet) -> Polynomial {
    if j < 0 {
        return Polynomial::zero();
    }
    complete_table(a, j as usize).pop().expect("nonempty table")
}

/// `[e_0(A), ..., e_|A|(A)]`.
pub fn elementary_table(a: &Alphabet) -> Vec<Polynomial> {
    let mut table = vec![Polynomial::zero(); a.len() + 1];
    table[0] = Polynomial::one();
    for (count, letter) in a.letters().iter().enumerate() {
        for i in (1..=count + 1).rev() {
            let shifted = table[i - 1].mul_monomial(letter);
            table[i] += &shifted;
        }
    }
    table
}

/// Elementary symmetric function `e_i(A)`; zero outside `0..=|A|`.
pub fn elementary_e(i: i64, a: &Alphabet) -> Polynomial {
    if i < 0 || i as usize > a.len() {
        return Polynomial::zero();
    }
    elementary_table(a).swap_remove(i as usize)
}

/// Jacobi-Trudi determinant `det(S^(v_i - i + j)(A))` of size `v.len()`,
/// for an arbitrary integer vector `v`.
///
/// For a partition this is the Schur function; for other vectors it is
/// zero or a signed Schur function. The vector length need not match the
/// alphabet size.
pub fn jacobi_trudi(v: &[i64], a: &Alphabet) -> Polynomial {
    let n = v.len() as i64;
    let top = v.iter().map(|&x| x + n - 1).max().unwrap_or(0).max(0) as usize;
    let h = complete_table(a, top);
    let entry = |idx: i64| -> Polynomial {
        if idx < 0 {
            Polynomial::zero()
        } else {
            h[idx as usize].clone()
        }
    };
    let rows: Vec<Vec<Polynomial>> = v
        .iter()
        .enumerate()
        .map(|(i, &vi)| {
            (0..v.len())
                .map(|j| entry(vi - i as i64 + j as i64))
                .collect()
        })
        .collect();
    det(&rows).expect("square by construction")
}

/// Generalized Schur function `S_v(A)`: the Jacobi-Trudi determinant with
/// `v.len() == |A|`.
pub fn schur_jt(v: &[i64], a: &Alphabet) -> Result<Polynomial, SymfunError> {
    if v.len() != a.len() {
        return Err(SymfunError::LengthMismatch {
            expected: a.len(),
            got: v.len(),
        });
    }
    Ok(jacobi_trudi(v, a))
}

/// Schur function of a partition, padding it with zeros up to `|A|`.
pub fn schur(mu: &Partition, a: &Alphabet) -> Result<Polynomial, SymfunError> {
    if mu.len() > a.len() {
        return Ok(Polynomial::zero());
    }
    schur_jt(&mu.to_vector(a.len()), a)
}

/// `prod_{i<j} (a_i - a_j)`.
pub fn vandermonde(a: &Alphabet) -> Polynomial {
    let letters: Vec<Polynomial> = a.letter_polynomials().collect();
    let mut out = Polynomial::one();
    for i in 0..letters.len() {
        for j in i + 1..letters.len() {
            out = &out * &(&letters[i] - &letters[j]);
        }
    }
    out
}

/// Schur function as a ratio of alternants,
/// `det(a_i^(mu_j + n - j)) / prod_{i<j}(a_i - a_j)`.
pub fn schur_bialternant(mu: &Partition, a: &Alphabet) -> Result<Polynomial, SymfunError> {
    let n = a.len();
    if mu.len() > n {
        return Err(SymfunError::LengthMismatch {
            expected: n,
            got: mu.len(),
        });
    }
    if !a.has_distinct_letters() {
        return Err(SymfunError::RepeatedGenerators);
    }
    let v = mu.to_vector(n);
    let rows: Vec<Vec<Polynomial>> = a
        .letters()
        .iter()
        .map(|letter| {
            (0..n)
                .map(|j| Polynomial::from(letter.pow(v[j] + (n - 1 - j) as i64)))
                .collect()
        })
        .collect();
    let alternant = det(&rows)?;
    Ok(alternant.exact_div(&vandermonde(a))?)
}

/// Cauchy kernel `R(1, AB) = prod_{a in A, b in B} (1 - a b)`.
pub fn cauchy_kernel(a: &Alphabet, b: &Alphabet) -> Polynomial {
    let mut out = Polynomial::one();
    for x in a.letters() {
        for y in b.letters() {
            out = &out * &(Polynomial::one() - Polynomial::from(x.mul(y)));
        }
    }
    out
}

/// The factors `1 - a b` of the Cauchy kernel, in `A`-major order.
pub fn cauchy_factors(a: &Alphabet, b: &Alphabet) -> Vec<Polynomial> {
    a.letters()
        .iter()
        .flat_map(|x| {
            b.letters()
                .iter()
                .map(move |y| Polynomial::one() - Polynomial::from(x.mul(y)))
        })
        .collect()
}
