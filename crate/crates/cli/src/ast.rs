use std::fmt;

use omega_core::omega::{OmegaError, OmegaProblem};
use omega_core::symfun::Alphabet;
use omega_core::{Monomial, Var};

/// Which side of the elimination a denominator factor belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    /// `1 - letter * lambda`
    Plus,
    /// `1 - letter / lambda`
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LambdaFactor {
    pub letter: Monomial,
    pub sign: Sign,
}

/// `omega(lambda^k / prod (1 - letter * lambda^(+-1)))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OmegaExpressionAST {
    pub k: u32,
    pub lambda_name: Var,
    pub factors: Vec<LambdaFactor>,
}

impl OmegaExpressionAST {
    pub fn x_letters(&self) -> Vec<Monomial> {
        self.letters(Sign::Plus)
    }

    pub fn y_letters(&self) -> Vec<Monomial> {
        self.letters(Sign::Minus)
    }

    fn letters(&self, sign: Sign) -> Vec<Monomial> {
        self.factors
            .iter()
            .filter(|f| f.sign == sign)
            .map(|f| f.letter.clone())
            .collect()
    }

    /// The problem in factor order: `X` from the `1 - x lambda` factors,
    /// `Y` from the `1 - y / lambda` ones.
    pub fn to_problem(&self) -> Result<OmegaProblem, OmegaError> {
        OmegaProblem::new(
            self.k,
            Alphabet::new(self.x_letters()),
            Alphabet::new(self.y_letters()),
        )
    }
}

impl fmt::Display for OmegaExpressionAST {
    /// Renders in the input grammar, e.g.
    /// `omega(lambda / ((1-x1*lambda)*(1-y/lambda)))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lambda = &self.lambda_name;
        f.write_str("omega(")?;
        match self.k {
            0 => f.write_str("1")?,
            1 => write!(f, "{lambda}")?,
            k => write!(f, "{lambda}^{k}")?,
        }
        f.write_str(" / (")?;
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            match factor.sign {
                Sign::Plus => write!(f, "(1-{}*{lambda})", factor.letter)?,
                Sign::Minus => write!(f, "(1-{}/{lambda})", factor.letter)?,
            }
        }
        f.write_str("))")
    }
}
