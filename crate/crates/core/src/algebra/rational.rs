use std::fmt;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{AlgebraError, Polynomial};

/// A denominator factor with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub factor: Polynomial,
    pub multiplicity: u32,
}

/// An expanded numerator over a product of (unexpanded) denominator factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredRational {
    numerator: Polynomial,
    denominator_factors: Vec<Factor>,
}

impl FactoredRational {
    pub fn new<I>(numerator: Polynomial, factors: I) -> Result<FactoredRational, AlgebraError>
    where
        I: IntoIterator<Item = (Polynomial, u32)>,
    {
        let mut out = FactoredRational::polynomial(numerator);
        for (f, mult) in factors {
            out.push_factor(f, mult)?;
        }
        Ok(out)
    }

    pub fn polynomial(p: Polynomial) -> FactoredRational {
        FactoredRational {
            numerator: p,
            denominator_factors: Vec::new(),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator_factors(&self) -> &[Factor] {
        &self.denominator_factors
    }

    /// Appends `f^mult`, merging with an identical existing factor. Constant
    /// unit factors fold into the numerator.
    pub fn push_factor(&mut self, f: Polynomial, mult: u32) -> Result<(), AlgebraError> {
        if f.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if mult == 0 {
            return Ok(());
        }
        if let Some(c) = f.as_constant() {
            if c.abs().is_one() {
                if c.is_negative() && mult % 2 == 1 {
                    self.numerator = -&self.numerator;
                }
                return Ok(());
            }
        }
        match self.denominator_factors.iter_mut().find(|d| d.factor == f) {
            Some(d) => d.multiplicity += mult,
            None => self.denominator_factors.push(Factor {
                factor: f,
                multiplicity: mult,
            }),
        }
        Ok(())
    }

    /// Expanded product of all denominator factors.
    pub fn denominator(&self) -> Polynomial {
        self.denominator_factors
            .iter()
            .map(|d| d.factor.pow(d.multiplicity))
            .product()
    }

    /// True when both sides denote the same rational function.
    pub fn semantically_equal(&self, other: &FactoredRational) -> bool {
        self.cross_difference(other).is_zero()
    }

    /// `self.num * other.den - other.num * self.den`; zero iff equal.
    pub fn cross_difference(&self, other: &FactoredRational) -> Polynomial {
        let (lhs, rhs) = self.cross_multiplied(other);
        lhs - rhs
    }

    /// `(self.num * other.den, other.num * self.den)` after dropping the
    /// denominator factors the two sides share, which does not change
    /// whether they are equal.
    pub fn cross_multiplied(&self, other: &FactoredRational) -> (Polynomial, Polynomial) {
        let mut mine = self.denominator_factors.clone();
        let mut theirs = other.denominator_factors.clone();
        for d in mine.iter_mut() {
            if let Some(e) = theirs.iter_mut().find(|e| e.factor == d.factor) {
                let common = d.multiplicity.min(e.multiplicity);
                d.multiplicity -= common;
                e.multiplicity -= common;
            }
        }
        let expand = |fs: &[Factor]| -> Polynomial {
            fs.iter()
                .filter(|d| d.multiplicity > 0)
                .map(|d| d.factor.pow(d.multiplicity))
                .product()
        };
        (
            &self.numerator * &expand(&theirs),
            &other.numerator * &expand(&mine),
        )
    }

    /// Removes denominator factor occurrences that divide the numerator
    /// exactly. No factorization is attempted.
    pub fn cancel(&self) -> FactoredRational {
        let mut numerator = self.numerator.clone();
        let mut kept = Vec::new();
        for d in &self.denominator_factors {
            let mut left = d.multiplicity;
            while left > 0 {
                match numerator.exact_div(&d.factor) {
                    Ok(q) => {
                        numerator = q;
                        left -= 1;
                    }
                    Err(_) => break,
                }
            }
            if left > 0 {
                kept.push(Factor {
                    factor: d.factor.clone(),
                    multiplicity: left,
                });
            }
        }
        FactoredRational {
            numerator,
            denominator_factors: kept,
        }
    }

    /// Applies `f` to the numerator and every factor, dropping factors that
    /// become units.
    pub fn try_map<F>(&self, mut f: F) -> Result<FactoredRational, AlgebraError>
    where
        F: FnMut(&Polynomial) -> Result<Polynomial, AlgebraError>,
    {
        let mut out = FactoredRational::polynomial(f(&self.numerator)?);
        for d in &self.denominator_factors {
            out.push_factor(f(&d.factor)?, d.multiplicity)?;
        }
        Ok(out)
    }

    /// Power-series expansion up to total degree `max_degree`.
    ///
    /// Every denominator factor must have constant term ±1 and no terms of
    /// nonpositive degree other than that constant, so that its inverse is a
    /// power series in the positive-degree part.
    pub fn series_expansion(&self, max_degree: i64) -> Result<Polynomial, AlgebraError> {
        let mut acc = self.numerator.truncate(max_degree);
        for d in &self.denominator_factors {
            let inv = series_inverse(&d.factor, max_degree)?;
            for _ in 0..d.multiplicity {
                acc = acc.mul_truncated(&inv, max_degree);
            }
        }
        Ok(acc)
    }
}

/// `1/f` truncated at `max_degree`, for `f = c + g` with `c = ±1` and every
/// term of `g` of positive total degree.
pub fn series_inverse(f: &Polynomial, max_degree: i64) -> Result<Polynomial, AlgebraError> {
    let constant = f.coefficient(&super::Monomial::one());
    let rest = f - &Polynomial::constant(constant.clone());
    if !constant.abs().is_one() || rest.min_total_degree().is_some_and(|d| d <= 0) {
        return Err(AlgebraError::NotSeriesInvertible(f.to_string()));
    }
    // 1/(c + g) = c * sum_t (-c g)^t  since c^2 = 1
    let step = rest.scale(&-&constant);
    let mut out = Polynomial::one();
    let mut power = Polynomial::one();
    for _ in 0..max_degree.max(0) {
        power = power.mul_truncated(&step, max_degree);
        if power.is_zero() {
            break;
        }
        out += &power;
    }
    Ok(out.scale(&constant))
}

impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator_factors.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        write!(f, "({}) / ", self.numerator)?;
        write!(f, "{}", render_denominator(&self.denominator_factors))
    }
}

/// `(f1)*(f2)^2*...`, or `1` when there are no factors.
pub fn render_denominator(factors: &[Factor]) -> String {
    if factors.is_empty() {
        return "1".to_string();
    }
    factors
        .iter()
        .map(|d| {
            if d.multiplicity == 1 {
                format!("({})", d.factor)
            } else {
                format!("({})^{}", d.factor, d.multiplicity)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl From<Polynomial> for FactoredRational {
    fn from(p: Polynomial) -> FactoredRational {
        FactoredRational::polynomial(p)
    }
}
