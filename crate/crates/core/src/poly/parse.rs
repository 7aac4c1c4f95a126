//! Recursive-descent parser for the polynomial input language.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := int ('/' nat)? | identifier | '(' expr ')'
//! ```
//!
//! Identifiers must be declared ring variables. Over a cyclotomic field the
//! identifier `z` denotes the primitive root of unity `zeta_m`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::polynomial::{PolyRing, Polynomial};
use crate::error::{Error, Result};

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

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Token::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    position: start,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    ring: &'a Arc<PolyRing>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut negate = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if negate { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(Token::Plus) => negate = false,
                Some(Token::Minus) => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            let e = match self.peek() {
                Some(Token::Int(n)) => match u32::try_from(n.clone()) {
                    Ok(e) => e,
                    Err(_) => return self.syntax("exponent too large"),
                },
                _ => return self.syntax("expected a natural exponent"),
            };
            self.pos += 1;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let field = self.ring.field().clone();
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                let mut den = BigInt::from(1);
                if let Some(Token::Slash) = self.peek() {
                    self.pos += 1;
                    match self.peek() {
                        Some(Token::Int(d)) => den = d.clone(),
                        _ => return self.syntax("expected a natural denominator"),
                    }
                    self.pos += 1;
                }
                if den.is_zero() {
                    return Err(Error::BadCoefficient(format!("{n}/0")));
                }
                let q = BigRational::new(n.clone(), den.clone());
                let c = field
                    .embed_rational(&q)
                    .map_err(|e| Error::BadCoefficient(format!("{n}/{den}: {e}")))?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                if let Some(i) = self.ring.variable_index(&name) {
                    return Ok(Polynomial::var(self.ring, i));
                }
                if name == "z" {
                    if let Some(zeta) = field.zeta_power(1) {
                        return Ok(Polynomial::constant(self.ring, zeta));
                    }
                }
                Err(Error::UnknownVariable(name))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Token::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.syntax("expected `)`"),
                }
            }
            Some(_) => self.syntax("expected a number, variable or `(`"),
            None => self.syntax("unexpected end of input"),
        }
    }
}

/// Parses `text` into a polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        ring,
    };
    let p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return parser.syntax("trailing input");
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;
    use crate::poly::{Monomial, MonomialOrder};

    fn ring4() -> Arc<PolyRing> {
        PolyRing::new(["x", "y", "z", "w"], Field::Rational, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn example_hypersurfaces() {
        let r = ring4();
        let f = parse_polynomial("x*y - z*w", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.to_string(), "x*y - z*w");
        let r3 = PolyRing::new(["x", "y", "z"], Field::Rational, MonomialOrder::Grevlex).unwrap();
        let g = parse_polynomial("x^2 - y*z", &r3).unwrap();
        assert_eq!(g.terms()[0].0, Monomial::from_exponents(vec![2, 0, 0]).unwrap());
        assert_eq!(g.to_string(), "x^2 - y*z");
    }

    #[test]
    fn zero_and_constants() {
        let r = ring4();
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
        assert!(parse_polynomial(" x - x ", &r).unwrap().is_zero());
        assert_eq!(parse_polynomial("-3/6", &r).unwrap().to_string(), "-1/2");
    }

    #[test]
    fn errors() {
        let r = ring4();
        assert!(matches!(
            parse_polynomial("x + q", &r),
            Err(Error::UnknownVariable(v)) if v == "q"
        ));
        assert!(matches!(
            parse_polynomial("x + * y", &r),
            Err(Error::Syntax { position: 4, .. })
        ));
        assert!(matches!(parse_polynomial("x $ y", &r), Err(Error::Syntax { position: 2, .. })));
        assert!(matches!(parse_polynomial("1/0*x", &r), Err(Error::BadCoefficient(_))));
        let r3 = PolyRing::new(["x"], Field::prime(3).unwrap(), MonomialOrder::Grevlex).unwrap();
        assert!(matches!(parse_polynomial("1/3*x", &r3), Err(Error::BadCoefficient(_))));
        assert!(matches!(parse_polynomial("(x", &r), Err(Error::Syntax { .. })));
    }

    #[test]
    fn cyclotomic_literals() {
        let r = PolyRing::new(["x", "y"], Field::cyclotomic(3).unwrap(), MonomialOrder::Grevlex)
            .unwrap();
        let p = parse_polynomial("(z + z^2)*x", &r).unwrap();
        assert_eq!(p, parse_polynomial("-x", &r).unwrap());
    }
}
