use std::fmt;
use std::ops::Add;

use crate::algebra::{Monomial, Polynomial, Var};

use super::SymfunError;

/// An ordered list of letters, each a monomial. Repetitions are allowed and
/// the constant monomial `1` is a valid letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Alphabet {
    letters: Vec<Monomial>,
}

impl Alphabet {
    pub fn new(letters: Vec<Monomial>) -> Alphabet {
        Alphabet { letters }
    }

    pub fn empty() -> Alphabet {
        Alphabet::default()
    }

    /// Letters that are the named variables.
    pub fn from_vars(names: &[&str]) -> Alphabet {
        Alphabet::new(names.iter().map(|n| Monomial::var(Var::new(n))).collect())
    }

    /// `prefix1, ..., prefix<n>`.
    pub fn indexed(prefix: &str, n: usize) -> Alphabet {
        Alphabet::new(
            (1..=n)
                .map(|i| Monomial::var(Var::new(&format!("{prefix}{i}"))))
                .collect(),
        )
    }

    /// `{1} + self`.
    pub fn one_plus(&self) -> Alphabet {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(Monomial::one());
        letters.extend(self.letters.iter().cloned());
        Alphabet { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Monomial] {
        &self.letters
    }

    pub fn letter_polynomials(&self) -> impl Iterator<Item = Polynomial> + '_ {
        self.letters.iter().cloned().map(Polynomial::from)
    }

    pub fn has_distinct_letters(&self) -> bool {
        self.letters
            .iter()
            .enumerate()
            .all(|(i, a)| self.letters[i + 1..].iter().all(|b| a != b))
    }

    /// The letters as variables, if every letter is a plain variable and no
    /// variable repeats.
    pub fn distinct_variables(&self) -> Result<Vec<Var>, SymfunError> {
        if !self.has_distinct_letters() {
            return Err(SymfunError::RepeatedGenerators);
        }
        self.letters
            .iter()
            .map(|m| {
                m.as_var()
                    .cloned()
                    .ok_or_else(|| SymfunError::NotAVariable(m.to_string()))
            })
            .collect()
    }

    /// Every variable occurring in some letter.
    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self
            .letters
            .iter()
            .flat_map(|m| m.variables().cloned())
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }
}

impl Add for &Alphabet {
    type Output = Alphabet;
    fn add(self, rhs: &Alphabet) -> Alphabet {
        let mut letters = self.letters.clone();
        letters.extend(rhs.letters.iter().cloned());
        Alphabet { letters }
    }
}

impl Add for Alphabet {
    type Output = Alphabet;
    fn add(self, rhs: Alphabet) -> Alphabet {
        &self + &rhs
    }
}

impl FromIterator<Monomial> for Alphabet {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Alphabet {
        Alphabet::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}
