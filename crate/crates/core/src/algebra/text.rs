//! Parser for the polynomial text format.
//!
//! Accepts the canonical rendering produced by `Display` as well as the
//! usual shorthand: implicit unit coefficients, parentheses, and integer
//! powers of parenthesized sums.
//!
//! ```text
//! sum    := ["+" | "-"] term { ("+" | "-") term }
//! term   := factor { "*" factor }
//! factor := INT | VAR ["^" ["-"] INT] | "(" sum ")" ["^" INT]
//! ```

use std::str::FromStr;

use num_bigint::BigInt;

use super::{AlgebraError, Monomial, Polynomial, Var};

impl FromStr for Polynomial {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Polynomial, AlgebraError> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let out = p.sum()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse {
            offset: self.pos,
            message: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Polynomial, AlgebraError> {
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            self.eat(b'+');
        }
        let mut acc = Polynomial::zero();
        loop {
            let t = self.term()?;
            if negate {
                acc -= &t;
            } else {
                acc += &t;
            }
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, AlgebraError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, AlgebraError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                if self.eat(b'^') {
                    let e = self.integer()?;
                    let e =
                        u32::try_from(e).map_err(|_| self.error("expected a nonnegative power"))?;
                    return Ok(inner.pow(e));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(Polynomial::constant(
                    digits.parse::<BigInt>().expect("digits"),
                ))
            }
            Some(c) if is_ident_start(c) => {
                let name = Var::new(self.ident());
                let exp = if self.eat(b'^') {
                    let neg = self.eat(b'-');
                    let e = self.integer()?;
                    if neg {
                        -e
                    } else {
                        e
                    }
                } else {
                    1
                };
                Ok(Polynomial::from(Monomial::power(name, exp)))
            }
            _ => Err(self.error("expected an integer, a variable or '('")),
        }
    }

    fn ident(&mut self) -> &str {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|&c| is_ident_char(c)) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii")
    }

    fn integer(&mut self) -> Result<i64, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| self.error("exponent out of range"))
    }
}

fn is_ident_start(c: u8) -> bool {
    c.is_ascii_alphabetic() || c == b'_'
}

fn is_ident_char(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_'
}
