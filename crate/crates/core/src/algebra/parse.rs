//! Polynomial expressions such as `-3*t^2`, `(a+b)^2` or `x/2 - 5/3*y`.
//!
//! Grammar:
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary | '/' integer)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | identifier | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::{FreeGCAlgebra, Polynomial};
use crate::error::{Error, Result};
use crate::linalg::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Token)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((col, Token::Int(digits.parse().expect("ascii digits"))));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((col, Token::Ident(chars[start..i].iter().collect())));
            continue;
        }
        let tok = match c {
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            _ => return Err(Error::Parse { column: col, message: format!("unexpected character `{c}`") }),
        };
        out.push((col, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    algebra: &'a FreeGCAlgebra,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map(|(c, _)| *c).unwrap_or(self.len + 1)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { column: self.column(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Token::Int(d)) if d != BigInt::from(0) => {
                            self.pos += 1;
                            acc = acc.scale(&Rational::new(BigInt::from(1), d));
                        }
                        Some(Token::Int(_)) => return self.err("division by zero"),
                        _ => return self.err("expected integer denominator after `/`"),
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Token::Int(n)) => {
                    self.pos += 1;
                    let e: u32 = match u32::try_from(n) {
                        Ok(e) if e <= 1000 => e,
                        _ => return self.err("exponent too large"),
                    };
                    Ok(base.pow(e))
                }
                _ => self.err("expected integer exponent after `^`"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                let mut q = Rational::from_integer(n);
                if let Some(Token::Slash) = self.peek() {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Token::Int(d)) if d != BigInt::from(0) => {
                            self.pos += 1;
                            q /= Rational::from_integer(d);
                        }
                        Some(Token::Int(_)) => return self.err("division by zero"),
                        _ => return self.err("expected integer denominator after `/`"),
                    }
                }
                Ok(Polynomial::constant(self.algebra, q))
            }
            Some(Token::Ident(name)) => {
                let col = self.column();
                self.pos += 1;
                Polynomial::named(self.algebra, &name).map_err(|_| Error::Parse {
                    column: col,
                    message: format!("unknown generator `{name}`"),
                })
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Token::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of expression"),
        }
    }
}

/// Parses an expression into a polynomial over `algebra`.
pub fn parse_polynomial(algebra: &FreeGCAlgebra, s: &str) -> Result<Polynomial> {
    let tokens = tokenize(s)?;
    let mut p = Parser { algebra, tokens, pos: 0, len: s.chars().count() };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    fn alg() -> FreeGCAlgebra {
        FreeGCAlgebra::from_pairs(&[("t", 2), ("a", 2), ("b", 2), ("x_1", 4)]).unwrap()
    }

    #[test]
    fn parses_negative_scaled_power() {
        let a = alg();
        let p = parse_polynomial(&a, "-3*t^2").unwrap();
        assert_eq!(p.to_string(), "-3*t^2");
    }

    #[test]
    fn parses_rational_coefficients() {
        let a = alg();
        let p = parse_polynomial(&a, "5/3*x_1 - x_1").unwrap();
        assert_eq!(p, Polynomial::named(&a, "x_1").unwrap().scale(&ratio(2, 3)));
    }

    #[test]
    fn parenthesised_power() {
        let a = alg();
        let p = parse_polynomial(&a, "(a+b)^2").unwrap();
        assert_eq!(p.to_string(), "a^2 + 2*a*b + b^2");
    }

    #[test]
    fn reports_unknown_generator_with_column() {
        let a = alg();
        let err = parse_polynomial(&a, "t + q").unwrap_err();
        assert_eq!(err, Error::Parse { column: 5, message: "unknown generator `q`".into() });
    }

    #[test]
    fn rejects_garbage() {
        let a = alg();
        assert!(parse_polynomial(&a, "t +").is_err());
        assert!(parse_polynomial(&a, "t $ 2").is_err());
        assert!(parse_polynomial(&a, "(t").is_err());
        assert!(parse_polynomial(&a, "t t").is_err());
        assert!(parse_polynomial(&a, "1/0").is_err());
    }
}
