//! Polynomial expression parser.
//!
//! Grammar: sums and differences of terms; a term is a product of factors
//! with `*` optional between them; a factor is an integer or rational
//! literal `int['/'uint]`, an indexed variable like `z1`, or a
//! parenthesized expression, each optionally raised to a nonnegative
//! integer power with `^`. Parenthesized products are expanded exactly.

use crate::error::CliError;
use assocform_core::multipoly::{Exponent, Poly};
use assocform_core::scalars::Rat;
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

/// Largest accepted `^` exponent; inputs are desk-scale forms.
const MAX_POWER: u32 = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Expression tree produced by the parser.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Num(Rat),
    Var { letter: char, index: u32 },
    Neg(Box<ExprAst>),
    Sum(Vec<ExprAst>),
    Prod(Vec<ExprAst>),
    Pow(Box<ExprAst>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(char, u32),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        msg: msg.into(),
    })
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Int(n)));
            }
            'z' | 'w' => {
                let start = i;
                i += 1;
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if digits_start == i {
                    return err(start, format!("variable '{c}' needs an index, like {c}1"));
                }
                let index: u32 = text[digits_start..i]
                    .parse()
                    .map_err(|_| ParseError {
                        pos: digits_start,
                        msg: "variable index too large".into(),
                    })?;
                out.push((start, Tok::Var(c, index)));
            }
            other => return err(i, format!("unexpected character '{other}'")),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut parts = Vec::new();
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.next();
                true
            }
            Some(Tok::Plus) => {
                self.next();
                false
            }
            _ => false,
        };
        loop {
            let term = self.term()?;
            parts.push(if negate {
                ExprAst::Neg(Box::new(term))
            } else {
                term
            });
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    negate = false;
                }
                Some(Tok::Minus) => {
                    self.next();
                    negate = true;
                }
                _ => break,
            }
        }
        Ok(if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            ExprAst::Sum(parts)
        })
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    factors.push(self.factor()?);
                }
                // implicit multiplication by adjacency
                Some(Tok::Int(_)) | Some(Tok::Var(..)) | Some(Tok::LParen) => {
                    factors.push(self.factor()?);
                }
                _ => break,
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            ExprAst::Prod(factors)
        })
    }

    fn factor(&mut self) -> Result<ExprAst, ParseError> {
        let pos = self.here();
        let base = match self.next() {
            Some(Tok::Minus) => return Ok(ExprAst::Neg(Box::new(self.factor()?))),
            Some(Tok::Int(n)) => {
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.next();
                    let dpos = self.here();
                    match self.next() {
                        Some(Tok::Int(d)) => {
                            if d.is_zero() {
                                return err(dpos, "zero denominator");
                            }
                            ExprAst::Num(Rat::from_ratio(n, d).expect("nonzero denominator"))
                        }
                        _ => return err(dpos, "expected a positive integer denominator"),
                    }
                } else {
                    ExprAst::Num(Rat::from_bigint(n))
                }
            }
            Some(Tok::Var(letter, index)) => ExprAst::Var { letter, index },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => inner,
                    _ => return err(self.here(), "expected ')'"),
                }
            }
            Some(other) => return err(pos, format!("unexpected token {other:?}")),
            None => return err(pos, "unexpected end of input"),
        };
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.next();
            let epos = self.here();
            match self.next() {
                Some(Tok::Int(e)) => {
                    let e: u32 = num_traits::ToPrimitive::to_u32(&e)
                        .filter(|&e| e <= MAX_POWER)
                        .ok_or(ParseError {
                            pos: epos,
                            msg: format!("exponent larger than {MAX_POWER}"),
                        })?;
                    return Ok(ExprAst::Pow(Box::new(base), e));
                }
                Some(Tok::Minus) => return err(epos, "negative exponents are not allowed"),
                _ => return err(epos, "expected a nonnegative integer exponent"),
            }
        }
        Ok(base)
    }
}

/// Parses an expression into its tree form without fixing the variable
/// letter or count.
pub fn parse_expr(text: &str) -> Result<ExprAst, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return err(0, "empty input");
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let ast = p.expr()?;
    if p.pos != p.toks.len() {
        return err(p.here(), "trailing input");
    }
    Ok(ast)
}

fn eval(ast: &ExprAst, n: usize, letter: char) -> Result<Poly<Rat>, ParseError> {
    match ast {
        ExprAst::Num(c) => Ok(Poly::constant(n, c.clone())),
        ExprAst::Var { letter: l, index } => {
            if *l != letter {
                return err(0, format!("expected '{letter}' variables, found '{l}{index}'"));
            }
            if *index == 0 || *index as usize > n {
                return err(0, format!("variable index {index} out of range 1..={n}"));
            }
            let mut e = vec![0u32; n];
            e[*index as usize - 1] = 1;
            Ok(Poly::monomial(n, Exponent::new(e), Rat::one()).expect("valid monomial"))
        }
        ExprAst::Neg(inner) => Ok(-&eval(inner, n, letter)?),
        ExprAst::Sum(parts) => {
            let mut acc = Poly::zero(n);
            for part in parts {
                acc = &acc + &eval(part, n, letter)?;
            }
            Ok(acc)
        }
        ExprAst::Prod(parts) => {
            let mut acc = Poly::constant(n, Rat::one());
            for part in parts {
                acc = &acc * &eval(part, n, letter)?;
            }
            Ok(acc)
        }
        ExprAst::Pow(base, e) => Ok(eval(base, n, letter)?.pow(*e)),
    }
}

/// Parses a polynomial in variables `z1..zn`, expanding products exactly.
pub fn parse_poly(text: &str, n: usize) -> Result<Poly<Rat>, ParseError> {
    if n < 2 {
        return err(0, "need at least two variables");
    }
    eval(&parse_expr(text)?, n, 'z')
}

/// Parses a dual-space polynomial in variables `w1..wn`.
pub fn parse_dual(text: &str, n: usize) -> Result<Poly<Rat>, ParseError> {
    if n < 2 {
        return err(0, "need at least two variables");
    }
    eval(&parse_expr(text)?, n, 'w')
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u32]) -> Exponent {
        Exponent::from_slice(v)
    }

    #[test]
    fn spec_examples() {
        let p = parse_poly("z1^3 + z2^3", 2).unwrap();
        assert_eq!(
            p,
            Poly::from_terms(2, [(e(&[3, 0]), Rat::one()), (e(&[0, 3]), Rat::one())]).unwrap()
        );
        let p = parse_poly("1/2*z1*z2^2 - z1^3", 2).unwrap();
        assert_eq!(
            p,
            Poly::from_terms(
                2,
                [(e(&[1, 2]), Rat::new(1, 2)), (e(&[3, 0]), Rat::from_int(-1))]
            )
            .unwrap()
        );
        let p = parse_poly("(z1+z2)^3", 2).unwrap();
        assert_eq!(
            p,
            Poly::from_terms(
                2,
                [
                    (e(&[3, 0]), Rat::one()),
                    (e(&[2, 1]), Rat::from_int(3)),
                    (e(&[1, 2]), Rat::from_int(3)),
                    (e(&[0, 3]), Rat::one()),
                ]
            )
            .unwrap()
        );
    }

    #[test]
    fn implicit_multiplication_and_signs() {
        assert_eq!(
            parse_poly("2z1z2", 2).unwrap(),
            Poly::monomial(2, e(&[1, 1]), Rat::from_int(2)).unwrap()
        );
        assert_eq!(
            parse_poly("-z1^2", 2).unwrap(),
            Poly::monomial(2, e(&[2, 0]), Rat::from_int(-1)).unwrap()
        );
        assert_eq!(parse_poly("0", 2).unwrap(), Poly::zero(2));
        assert_eq!(
            parse_poly("3(z1 - z2)(z1 + z2)", 2).unwrap(),
            Poly::from_terms(
                2,
                [(e(&[2, 0]), Rat::from_int(3)), (e(&[0, 2]), Rat::from_int(-3))]
            )
            .unwrap()
        );
    }

    #[test]
    fn error_positions() {
        assert!(parse_poly("z1 +", 2).is_err());
        assert!(parse_poly("z3", 2).is_err());
        assert!(parse_poly("z0", 2).is_err());
        assert!(parse_poly("z1^-2", 2).is_err());
        assert!(parse_poly("z1^(1/2)", 2).is_err());
        assert!(parse_poly("1/0", 2).is_err());
        assert!(parse_poly("z", 2).is_err());
        assert!(parse_poly("x1", 2).is_err());
        assert!(parse_poly("w1", 2).is_err());
        assert!(parse_poly("", 2).is_err());
        assert!(parse_poly("z1 & z2", 2).is_err());
        let err = parse_poly("z1 + #", 2).unwrap_err();
        assert_eq!(err.pos, 5);
    }

    #[test]
    fn dual_letter() {
        assert_eq!(
            parse_dual("w1*w2", 2).unwrap(),
            Poly::monomial(2, e(&[1, 1]), Rat::one()).unwrap()
        );
        assert!(parse_dual("z1", 2).is_err());
    }
}
