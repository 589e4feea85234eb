use num_bigint::BigInt;
use num_traits::Zero;

use super::{AlgebraError, Polynomial};

/// Exact determinant of a square polynomial matrix given as rows.
///
/// Laplace expansion along rows, memoized on the set of columns already
/// used: `minors[mask]` is the determinant of the leading `|mask|` rows
/// restricted to the columns in `mask`. This costs `O(2^n * n)` polynomial
/// products and never divides.
pub fn det(rows: &[Vec<Polynomial>]) -> Result<Polynomial, AlgebraError> {
    let n = rows.len();
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(AlgebraError::NonSquare {
            rows: n,
            cols: bad.len(),
        });
    }
    if n == 0 {
        return Ok(Polynomial::one());
    }
    assert!(n < 24, "determinant of size {n} is out of range");

    let full = (1usize << n) - 1;
    let mut minors: Vec<Polynomial> = vec![Polynomial::zero(); 1 << n];
    minors[0] = Polynomial::one();
    // Process masks in increasing popcount so every minor is complete
    // before it is extended.
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for mask in 0..=full {
        by_size[mask.count_ones() as usize].push(mask);
    }
    let minus_one = BigInt::from(-1);
    for (row, masks) in by_size.iter().take(n).enumerate() {
        for &mask in masks {
            if minors[mask].is_zero() {
                continue;
            }
            let minor = std::mem::take(&mut minors[mask]);
            for (col, entry) in rows[row].iter().enumerate() {
                if mask & (1 << col) != 0 || entry.is_zero() {
                    continue;
                }
                let above = (mask >> col).count_ones();
                let mut t = entry * &minor;
                if above % 2 == 1 {
                    t = t.scale(&minus_one);
                }
                minors[mask | (1 << col)] += &t;
            }
        }
    }
    Ok(std::mem::take(&mut minors[full]))
}

/// Determinant of an integer matrix, same algorithm.
pub fn det_integer(rows: &[Vec<i64>]) -> Result<BigInt, AlgebraError> {
    let poly: Vec<Vec<Polynomial>> = rows
        .iter()
        .map(|r| r.iter().map(|&c| Polynomial::constant(c)).collect())
        .collect();
    Ok(det(&poly)?.as_constant().unwrap_or_else(BigInt::zero))
}
