//! Parser for polynomial expressions in `x` and `λ`.
//!
//! Grammar (whitespace ignored, juxtaposition multiplies):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' | 'λ' | 'l' | 'lambda' | '(' expr ')'
//! ```
//!
//! Division is only by nonzero constants. The Unicode minus `−` is accepted.

use std::str::FromStr;

use num_bigint::BigInt;

use super::poly::BiPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    X,
    Lambda,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        let tok = match c {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((i, Tok::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            'x' => Tok::X,
            'λ' => Tok::Lambda,
            'l' => {
                // `l` or `lambda`
                let rest = &src[i..];
                if rest.starts_with("lambda") {
                    for _ in 0.."lambda".len() - 1 {
                        chars.next();
                    }
                }
                Tok::Lambda
            }
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(Error::Parse {
                    offset: i,
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        chars.next();
        out.push((i, tok));
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

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let at = self.offset();
                    let divisor = self.unary()?;
                    match divisor.as_constant() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()?),
                        _ => {
                            return Err(Error::Parse {
                                offset: at,
                                message: "divisor must be a nonzero constant".into(),
                            })
                        }
                    }
                }
                Some(Tok::Int(_) | Tok::X | Tok::Lambda | Tok::LParen) => {
                    acc = &acc * &self.unary()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<BiPoly> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<BiPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            match self.bump() {
                Some(Tok::Int(n)) => match u32::try_from(n) {
                    Ok(e) => return Ok(base.pow(e)),
                    Err(_) => {
                        self.pos -= 1;
                        return self.err("exponent too large");
                    }
                },
                _ => {
                    self.pos -= 1;
                    return self.err("expected integer exponent");
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BiPoly> {
        match self.bump() {
            Some(Tok::Int(n)) => Ok(BiPoly::constant(Rational::integer(n))),
            Some(Tok::X) => Ok(BiPoly::x()),
            Some(Tok::Lambda) => Ok(BiPoly::lambda()),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    self.pos -= 1;
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            _ => {
                self.pos -= 1;
                self.err("expected a number, x, λ or '('")
            }
        }
    }
}

impl FromStr for BiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<BiPoly> {
        let toks = tokenize(s)?;
        let mut parser = Parser {
            toks,
            pos: 0,
            end: s.len(),
        };
        let p = parser.expr()?;
        if parser.pos < parser.toks.len() {
            return parser.err("trailing input");
        }
        Ok(p)
    }
}
