//! Recursive-descent parser for Omega expressions.
//!
//! ```text
//! expr    := "omega" "(" num "/" denom ")"
//! num     := "1" | LVAR [ "^" INT ]
//! denom   := group { "*" group }
//! group   := "(" factor ")" | "(" denom ")"
//! factor  := "1" "-" atom { "*" atom } [ "/" LVAR ]
//! atom    := VAR [ "^" [ "-" ] INT ]
//! ```
//!
//! The numerator names lambda; with a numerator of `1` it defaults to
//! `lambda`. Each factor must contain lambda to the power +1 or -1 in
//! total, so `1-y/lambda` and `1-y*lambda^-1` parse to the same factor.

use std::fmt;

use omega_core::{Monomial, Var};

use crate::ast::{LambdaFactor, OmegaExpressionAST, Sign};

pub const SUPPORTED_SHAPE: &str =
    "omega(lambda^k / ((1-x1*lambda)*...*(1-y1/lambda)*...)) with k >= 0";

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("parse error at line {line}, column {column}: expected {}, found {found}", expected.join(" or "))]
    Parse {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("unsupported expression at line {line}, column {column}: {message}; supported shape is {SUPPORTED_SHAPE}")]
    Structure {
        line: usize,
        column: usize,
        message: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    LParen,
    RParen,
    Star,
    Slash,
    Caret,
    Minus,
    Other(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(s) => write!(f, "`{s}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Other(c) => write!(f, "`{c}`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

fn lex(src: &str) -> Vec<(Tok, Pos)> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    s.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            column += s.len();
            Tok::Ident(s)
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    s.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            column += s.len();
            Tok::Int(s)
        } else {
            chars.next();
            column += 1;
            match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '-' => Tok::Minus,
                other => Tok::Other(other),
            }
        };
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column }));
    out
}

/// Parses `src`, naming lambda `default_lambda` when the numerator is `1`.
pub fn parse_expression_with(
    src: &str,
    default_lambda: &str,
) -> Result<OmegaExpressionAST, ExprError> {
    let mut p = Parser {
        toks: lex(src),
        at: 0,
        lambda: Var::new(default_lambda),
    };
    p.expr()
}

/// Parses `src` with the default lambda name `lambda`.
pub fn parse_expression(src: &str) -> Result<OmegaExpressionAST, ExprError> {
    parse_expression_with(src, "lambda")
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    lambda: Var,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> ExprError {
        let pos = self.pos();
        ExprError::Parse {
            line: pos.line,
            column: pos.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().to_string(),
        }
    }

    fn structure(pos: Pos, message: impl Into<String>) -> ExprError {
        ExprError::Structure {
            line: pos.line,
            column: pos.column,
            message: message.into(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), ExprError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&[name]))
        }
    }

    fn ident(&mut self) -> Result<(String, Pos), ExprError> {
        let pos = self.pos();
        match self.peek() {
            Tok::Ident(_) => match self.bump() {
                Tok::Ident(s) => Ok((s, pos)),
                _ => unreachable!(),
            },
            _ => Err(self.unexpected(&["variable"])),
        }
    }

    fn int(&mut self) -> Result<(i64, Pos), ExprError> {
        let pos = self.pos();
        match self.peek() {
            Tok::Int(_) => match self.bump() {
                Tok::Int(s) => s
                    .parse::<i64>()
                    .map(|v| (v, pos))
                    .map_err(|_| Parser::structure(pos, format!("integer {s} is out of range"))),
                _ => unreachable!(),
            },
            _ => Err(self.unexpected(&["integer"])),
        }
    }

    fn signed_int(&mut self) -> Result<(i64, Pos), ExprError> {
        let pos = self.pos();
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        let (v, _) = self.int()?;
        Ok((if negative { -v } else { v }, pos))
    }

    fn expr(&mut self) -> Result<OmegaExpressionAST, ExprError> {
        match self.peek() {
            Tok::Ident(s) if s == "omega" => {
                self.bump();
            }
            _ => return Err(self.unexpected(&["`omega`"])),
        }
        self.expect(Tok::LParen, "`(`")?;
        let k = self.numerator()?;
        self.expect(Tok::Slash, "`/`")?;
        let mut factors = Vec::new();
        self.denominator(&mut factors)?;
        self.expect(Tok::RParen, "`)`")?;
        if *self.peek() != Tok::End {
            return Err(self.unexpected(&["end of input"]));
        }
        Ok(OmegaExpressionAST {
            k,
            lambda_name: self.lambda,
            factors,
        })
    }

    fn numerator(&mut self) -> Result<u32, ExprError> {
        match self.peek().clone() {
            Tok::Int(s) if s == "1" => {
                self.bump();
                Ok(0)
            }
            Tok::Ident(_) => {
                let (name, _) = self.ident()?;
                self.lambda = Var::new(&name);
                if *self.peek() != Tok::Caret {
                    return Ok(1);
                }
                self.bump();
                let (k, pos) = self.signed_int()?;
                u32::try_from(k).map_err(|_| {
                    Parser::structure(
                        pos,
                        format!("numerator {name}^{k} must be a nonnegative power"),
                    )
                })
            }
            _ => Err(self.unexpected(&["`1`", "variable"])),
        }
    }

    fn denominator(&mut self, out: &mut Vec<LambdaFactor>) -> Result<(), ExprError> {
        self.group(out)?;
        while *self.peek() == Tok::Star {
            self.bump();
            self.group(out)?;
        }
        Ok(())
    }

    fn group(&mut self, out: &mut Vec<LambdaFactor>) -> Result<(), ExprError> {
        self.expect(Tok::LParen, "`(`")?;
        match self.peek() {
            Tok::LParen => self.denominator(out)?,
            Tok::Int(s) if s == "1" => out.push(self.factor()?),
            _ => return Err(self.unexpected(&["`(`", "`1`"])),
        }
        self.expect(Tok::RParen, "`)`")
    }

    fn factor(&mut self) -> Result<LambdaFactor, ExprError> {
        let start = self.pos();
        self.bump();
        self.expect(Tok::Minus, "`-`")?;
        let mut atoms = vec![self.atom()?];
        while *self.peek() == Tok::Star {
            self.bump();
            atoms.push(self.atom()?);
        }
        let mut lambda_exp: i64 = atoms
            .iter()
            .filter(|(v, _)| *v == self.lambda)
            .map(|(_, e)| e)
            .sum();
        if *self.peek() == Tok::Slash {
            self.bump();
            let (name, pos) = self.ident()?;
            if Var::new(&name) != self.lambda {
                return Err(Parser::structure(
                    pos,
                    format!("can only divide by {}, not by {name}", self.lambda),
                ));
            }
            lambda_exp -= 1;
        }
        let letter = Monomial::from_exponents(atoms.into_iter().filter(|(v, _)| *v != self.lambda));
        if lambda_exp != 1 && lambda_exp != -1 {
            let shown = if lambda_exp == 0 {
                format!("factor 1-{letter} does not contain {}", self.lambda)
            } else {
                format!("factor has {}^{lambda_exp}", self.lambda)
            };
            return Err(Parser::structure(start, shown));
        }
        if letter.is_one() {
            return Err(Parser::structure(
                start,
                format!("factor needs a letter besides {}", self.lambda),
            ));
        }
        let sign = if lambda_exp == 1 {
            Sign::Plus
        } else {
            Sign::Minus
        };
        Ok(LambdaFactor { letter, sign })
    }

    fn atom(&mut self) -> Result<(Var, i64), ExprError> {
        let (name, _) = self.ident()?;
        let exp = if *self.peek() == Tok::Caret {
            self.bump();
            self.signed_int()?.0
        } else {
            1
        };
        Ok((Var::new(&name), exp))
    }
}
