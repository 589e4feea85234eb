use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraError, FactoredRational, Monomial, Polynomial, Var};
use crate::symfun::Alphabet;

use super::OmegaError;

/// `lambda^k / prod_{x in X}(1 - x lambda) prod_{y in Y}(1 - y / lambda)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaProblem {
    k: u32,
    x: Alphabet,
    y: Alphabet,
}

impl OmegaProblem {
    pub fn new(k: u32, x: Alphabet, y: Alphabet) -> Result<OmegaProblem, OmegaError> {
        if x.is_empty() {
            return Err(OmegaError::EmptyX);
        }
        Ok(OmegaProblem { k, x, y })
    }

    /// Problem over `x1..xn` and `y1..ym` (or a bare `y` when `m == 1`).
    pub fn standard(n: usize, m: usize, k: u32) -> Result<OmegaProblem, OmegaError> {
        let y = if m == 1 {
            Alphabet::from_vars(&["y"])
        } else {
            Alphabet::indexed("y", m)
        };
        OmegaProblem::new(k, Alphabet::indexed("x", n), y)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn x(&self) -> &Alphabet {
        &self.x
    }

    pub fn y(&self) -> &Alphabet {
        &self.y
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn m(&self) -> usize {
        self.y.len()
    }

    /// Every variable occurring in a letter of `X` or `Y`.
    pub fn variables(&self) -> BTreeSet<Var> {
        self.x
            .variables()
            .into_iter()
            .chain(self.y.variables())
            .collect()
    }

    /// Appends `r` fresh letters to `X`. Evaluating the padded problem and
    /// then sending the new letters to 0 (see [`Padded::specialize`])
    /// recovers the value of `self`; this is how `k >= n` is handled.
    pub fn zero_pad(&self, r: usize) -> Padded {
        let mut taken: BTreeSet<Var> = self.variables();
        let padding: Vec<Var> = (0..r).map(|_| fresh_var("pad", &mut taken)).collect();
        let mut letters = self.x.letters().to_vec();
        letters.extend(padding.iter().cloned().map(Monomial::var));
        Padded {
            problem: OmegaProblem {
                k: self.k,
                x: Alphabet::new(letters),
                y: self.y.clone(),
            },
            padding,
        }
    }

    /// Smallest padding that makes `k < n`.
    pub fn padding_needed(&self) -> usize {
        (self.k as usize + 1).saturating_sub(self.n())
    }

    /// The same problem with every `X` letter replaced by a fresh variable,
    /// plus the bindings that map the fresh variables back.
    pub(crate) fn generic_x(&self) -> (OmegaProblem, BTreeMap<Var, Polynomial>) {
        let mut taken = self.variables();
        let mut bindings = BTreeMap::new();
        let mut letters = Vec::with_capacity(self.n());
        for letter in self.x.letters() {
            let v = fresh_var("x", &mut taken);
            bindings.insert(v, Polynomial::from(letter.clone()));
            letters.push(Monomial::var(v));
        }
        let generic = OmegaProblem {
            k: self.k,
            x: Alphabet::new(letters),
            y: self.y.clone(),
        };
        (generic, bindings)
    }
}

impl fmt::Display for OmegaProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}, X={}, Y={}", self.k, self.x, self.y)
    }
}

/// A padded problem together with its padding variables.
#[derive(Clone, Debug)]
pub struct Padded {
    pub problem: OmegaProblem,
    pub padding: Vec<Var>,
}

impl Padded {
    /// Sends every padding variable to 0 in a result of the padded problem.
    pub fn specialize(&self, result: &OmegaResult) -> Result<OmegaResult, AlgebraError> {
        let zeros: BTreeMap<Var, Polynomial> = self
            .padding
            .iter()
            .map(|v| (*v, Polynomial::zero()))
            .collect();
        Ok(OmegaResult {
            value: result.value.try_map(|p| p.substitute(&zeros))?,
            method: result.method,
            truncation: result.truncation,
        })
    }
}

fn fresh_var(prefix: &str, taken: &mut BTreeSet<Var>) -> Var {
    let v = (1..)
        .map(|i| Var::new(&format!("_{prefix}{i}")))
        .find(|v| !taken.contains(v))
        .expect("unbounded supply of names");
    taken.insert(v);
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Series,
    Schur,
    Lagrange,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Series => "series",
            Method::Schur => "schur",
            Method::Lagrange => "lagrange",
        })
    }
}

/// The value of an Omega elimination and how it was obtained.
///
/// Series results have no denominator and record the total-degree cutoff
/// in `truncation`; closed-form results are exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaResult {
    #[serde(flatten)]
    pub value: FactoredRational,
    pub method: Method,
    pub truncation: Option<u32>,
}
