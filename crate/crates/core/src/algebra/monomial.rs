use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::Var;

/// A Laurent monomial: a product of variables raised to (possibly negative)
/// integer powers.
///
/// Exponents are stored sparsely, sorted by variable, with no zero entries.
/// Monomials are ordered graded-lexicographically: total degree first, then
/// the exponent of the smallest variable, and so on.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(Var, i64)>,
    degree: i64,
}

impl Monomial {
    /// The empty product.
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Var) -> Monomial {
        Monomial::power(v, 1)
    }

    pub fn power(v: Var, exp: i64) -> Monomial {
        if exp == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: vec![(v, exp)],
            degree: exp,
        }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs, merging
    /// repeated variables.
    pub fn from_exponents<I>(pairs: I) -> Monomial
    where
        I: IntoIterator<Item = (Var, i64)>,
    {
        let mut map: BTreeMap<Var, i64> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial::from_sorted(map.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    fn from_sorted(exps: Vec<(Var, i64)>) -> Monomial {
        let degree = exps.iter().map(|(_, e)| e).sum();
        Monomial { exps, degree }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> i64 {
        self.degree
    }

    pub fn exponent(&self, v: &Var) -> i64 {
        self.exps
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    /// `(variable, exponent)` pairs in variable order.
    pub fn exponents(&self) -> &[(Var, i64)] {
        &self.exps
    }

    pub fn variables(&self) -> impl Iterator<Item = &Var> {
        self.exps.iter().map(|(v, _)| v)
    }

    /// The single variable `v` if this monomial is exactly `v^1`.
    pub fn as_var(&self) -> Option<&Var> {
        match self.exps.as_slice() {
            [(v, 1)] => Some(v),
            _ => None,
        }
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.exps.iter().any(|&(_, e)| e < 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, ea) = &self.exps[i];
            let (b, eb) = &other.exps[j];
            match a.cmp(b) {
                Ordering::Less => {
                    out.push((*a, *ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((*b, *eb));
                    j += 1;
                }
                Ordering::Equal => {
                    if ea + eb != 0 {
                        out.push((*a, ea + eb));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial {
            exps: out,
            degree: self.degree + other.degree,
        }
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|(v, e)| (*v, -e)).collect(),
            degree: -self.degree,
        }
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inverse())
    }

    pub fn pow(&self, n: i64) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|(v, e)| (*v, e * n)).collect(),
            degree: self.degree * n,
        }
    }

    /// True when every exponent of `other` is at most the matching exponent
    /// of `self`, i.e. `self / other` has no negative exponent.
    pub fn is_divisible_by(&self, other: &Monomial) -> bool {
        other.exps.iter().all(|(v, e)| self.exponent(v) >= *e)
    }

    /// Componentwise minimum of exponents (missing entries count as 0).
    pub fn gcd_with(&self, other: &Monomial) -> Monomial {
        let mut pairs = Vec::new();
        for (v, e) in &self.exps {
            let m = (*e).min(other.exponent(v));
            if m != 0 {
                pairs.push((*v, m));
            }
        }
        for (v, e) in &other.exps {
            if self.exponent(v) == 0 && *e < 0 {
                pairs.push((*v, *e));
            }
        }
        Monomial::from_exponents(pairs)
    }

    /// The monomial with `v` removed, together with the exponent `v` had.
    pub fn split_off(&self, v: &Var) -> (i64, Monomial) {
        match self.exps.binary_search_by(|(w, _)| w.cmp(v)) {
            Ok(i) => {
                let mut exps = self.exps.clone();
                let (_, e) = exps.remove(i);
                (e, Monomial::from_sorted(exps))
            }
            Err(_) => (0, self.clone()),
        }
    }

    /// Applies a variable renaming; unmapped variables are left alone.
    pub fn rename(&self, map: &BTreeMap<Var, Var>) -> Monomial {
        Monomial::from_exponents(
            self.exps
                .iter()
                .map(|(v, e)| (*map.get(v).unwrap_or(v), *e)),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| lex_cmp(&self.exps, &other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn lex_cmp(a: &[(Var, i64)], b: &[(Var, i64)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some((_, ea)), None) => return ea.cmp(&0),
            (None, Some((_, eb))) => return 0.cmp(eb),
            (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                Ordering::Less => return ea.cmp(&0),
                Ordering::Greater => return 0.cmp(eb),
                Ordering::Equal => {
                    if ea != eb {
                        return ea.cmp(eb);
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

impl fmt::Display for Monomial {
    /// `x1^2*y`, or `1` for the empty product.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (idx, (v, e)) in self.exps.iter().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
