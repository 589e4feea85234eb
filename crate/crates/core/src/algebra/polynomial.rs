use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Monomial, Var};

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
///
/// The term map never holds a zero coefficient, so structural equality is
/// equality of polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Polynomial {
        Polynomial::term(c, Monomial::one())
    }

    pub fn var(name: &str) -> Polynomial {
        Polynomial::from(Monomial::var(Var::new(name)))
    }

    pub fn term<C: Into<BigInt>>(c: C, m: Monomial) -> Polynomial {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms<I>(terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The coefficient when the polynomial is a constant (0 included).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// The single term if this polynomial is a monomial times a coefficient.
    pub fn as_term(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Largest term under graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn max_total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn min_total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::total_degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.min_total_degree() == self.max_total_degree()
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.variables().cloned())
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn contains_var(&self, v: &Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) != 0)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Keeps only the terms of total degree at most `max_degree`.
    pub fn truncate(&self, max_degree: i64) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product with every term of total degree above `max_degree` discarded.
    pub fn mul_truncated(&self, other: &Polynomial, max_degree: i64) -> Polynomial {
        let mut out: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        let Some(other_min) = other.min_total_degree() else {
            return Polynomial::zero();
        };
        for (ma, ca) in &self.terms {
            if ma.total_degree() + other_min > max_degree {
                continue;
            }
            for (mb, cb) in &other.terms {
                if ma.total_degree() + mb.total_degree() > max_degree {
                    continue;
                }
                *out.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Polynomial { terms: out }
    }

    /// Quotient `q` with `q * divisor == self`, in the Laurent ring.
    ///
    /// Both operands are first stripped of their monomial content, which
    /// reduces the problem to exact division of ordinary polynomials where
    /// the graded-lex division algorithm terminates.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial, AlgebraError> {
        if divisor.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        if let Some((m, c)) = divisor.as_term() {
            return self.div_by_term(m, c);
        }
        let num_content = self.monomial_content();
        let den_content = divisor.monomial_content();
        let num = self.mul_monomial(&num_content.inverse());
        let den = divisor.mul_monomial(&den_content.inverse());
        let (lead_m, lead_c) = den.leading_term().expect("nonzero divisor");
        let (lead_m, lead_c) = (lead_m.clone(), lead_c.clone());

        let mut rem = num;
        let mut quotient = Polynomial::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            if !rm.is_divisible_by(&lead_m) {
                return Err(AlgebraError::NotDivisible);
            }
            let (q, r) = rc.div_rem(&lead_c);
            if !r.is_zero() {
                return Err(AlgebraError::NotDivisible);
            }
            let qm = rm.div(&lead_m);
            rem -= &den.mul_monomial(&qm).scale(&q);
            quotient.add_term(qm, q);
        }
        Ok(quotient.mul_monomial(&num_content.div(&den_content)))
    }

    fn div_by_term(&self, m: &Monomial, c: &BigInt) -> Result<Polynomial, AlgebraError> {
        let inv = m.inverse();
        let mut terms = BTreeMap::new();
        for (t, k) in &self.terms {
            let (q, r) = k.div_rem(c);
            if !r.is_zero() {
                return Err(AlgebraError::NotDivisible);
            }
            terms.insert(t.mul(&inv), q);
        }
        Ok(Polynomial { terms })
    }

    /// The largest monomial dividing every term (exponentwise minimum).
    pub fn monomial_content(&self) -> Monomial {
        let mut iter = self.terms.keys();
        let Some(first) = iter.next() else {
            return Monomial::one();
        };
        iter.fold(first.clone(), |acc, m| acc.gcd_with(m))
    }

    /// Simultaneous substitution of polynomials for variables.
    ///
    /// A variable occurring with a negative exponent may only be replaced by
    /// a unit, i.e. a single monomial with coefficient ±1.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<Var, Polynomial>,
    ) -> Result<Polynomial, AlgebraError> {
        let mut powers: BTreeMap<(Var, i64), Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = Polynomial::constant(c.clone());
            for (v, e) in m.exponents() {
                let Some(value) = bindings.get(v) else {
                    kept.push((*v, *e));
                    continue;
                };
                let power = match powers.entry((*v, *e)) {
                    std::collections::btree_map::Entry::Occupied(hit) => hit.into_mut(),
                    std::collections::btree_map::Entry::Vacant(slot) => {
                        let p = if *e >= 0 {
                            value.pow(*e as u32)
                        } else {
                            value
                                .unit_inverse()
                                .ok_or_else(|| {
                                    AlgebraError::NonInvertibleSubstitution(v.name().to_string())
                                })?
                                .pow(e.unsigned_abs() as u32)
                        };
                        slot.insert(p)
                    }
                };
                factor = &factor * &*power;
                if factor.is_zero() {
                    break;
                }
            }
            out += &factor.mul_monomial(&Monomial::from_exponents(kept));
        }
        Ok(out)
    }

    /// Inverse when the polynomial is `±m` for a monomial `m`.
    pub fn unit_inverse(&self) -> Option<Polynomial> {
        let (m, c) = self.as_term()?;
        if c.abs().is_one() {
            Some(Polynomial::term(c.clone(), m.inverse()))
        } else {
            None
        }
    }

    /// Shorthand for substituting a single variable.
    pub fn substitute_var(&self, v: &Var, value: &Polynomial) -> Result<Polynomial, AlgebraError> {
        let mut b = BTreeMap::new();
        b.insert(*v, value.clone());
        self.substitute(&b)
    }

    /// Renames variables (e.g. to apply a permutation of an alphabet).
    pub fn rename(&self, map: &BTreeMap<Var, Var>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.rename(map), c.clone());
        }
        out
    }

    /// Coefficients of `v^lo, v^(lo+1), ..., v^hi`, each free of `v`.
    pub fn laurent_coefficients(&self, v: &Var, lo: i64, hi: i64) -> Vec<Polynomial> {
        assert!(lo <= hi, "empty exponent window");
        let mut out = vec![Polynomial::zero(); (hi - lo + 1) as usize];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            if (lo..=hi).contains(&e) {
                out[(e - lo) as usize].add_term(rest, c.clone());
            }
        }
        out
    }

    /// Smallest and largest exponent of `v` over all terms.
    pub fn degree_range(&self, v: &Var) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(|m| m.exponent(v));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Evaluates at an integer point; unbound variables must not occur.
    pub fn eval_integer(&self, point: &BTreeMap<Var, BigInt>) -> Option<BigInt> {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.exponents() {
                let x = point.get(v)?;
                if *e < 0 {
                    return None;
                }
                t *= num_traits::pow(x.clone(), *e as usize);
            }
            total += t;
        }
        Some(total)
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Polynomial {
        Polynomial::term(1, m)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Polynomial {
        Polynomial::constant(c)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        let mut sorted: Vec<(Monomial, BigInt)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        sorted.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Polynomial {
            terms: sorted.into_iter().collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text: terms in descending graded-lex order with explicit
    /// coefficients, e.g. `-1*x1^2*y + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, false) => write!(f, "{mag}")?,
                (0, true) => write!(f, "-{mag}")?,
                (_, false) => write!(f, " + {mag}")?,
                (_, true) => write!(f, " - {mag}")?,
            }
            if !m.is_one() {
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
