//! Canonical text form of polynomials.
//!
//! Printing walks the terms in canonical order and writes `C*v1^e1*v2^e2`
//! joined by ` + ` / ` - `; a unit coefficient is omitted unless the
//! monomial is `1`. Parsing accepts any whitespace and any term order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::rational::{format_rational, ExactRational};
use super::variable::VariableId;
use super::PolyError;

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if m.is_one() {
                f.write_str(&format_rational(&magnitude))?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&magnitude))?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser::new(s).parse()
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    error: Option<PolyError>,
}

fn parse_error(position: usize, message: impl Into<String>) -> PolyError {
    PolyError::Parse {
        position,
        message: message.into(),
    }
}

fn tokenize(s: &str) -> Result<Vec<(usize, Token)>, PolyError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i];
        let start = i;
        match ch {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Token::Plus)),
            b'-' => out.push((start, Token::Minus)),
            b'*' => out.push((start, Token::Star)),
            b'/' => out.push((start, Token::Slash)),
            b'^' => out.push((start, Token::Caret)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[start..i].parse().expect("digits");
                out.push((start, Token::Number(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((start, Token::Ident(s[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(parse_error(
                    start,
                    format!("unexpected character '{}'", &s[start..].chars().next().unwrap()),
                ))
            }
        }
        i += 1;
    }
    Ok(out)
}

impl Parser {
    fn new(s: &str) -> Self {
        match tokenize(s) {
            Ok(tokens) => Self {
                tokens,
                pos: 0,
                error: None,
            },
            Err(e) => Self {
                tokens: Vec::new(),
                pos: 0,
                error: Some(e),
            },
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or_else(|| self.tokens.last().map(|(p, _)| p + 1).unwrap_or(0))
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn parse(mut self) -> Result<Polynomial, PolyError> {
        if let Some(e) = self.error.take() {
            return Err(e);
        }
        if self.tokens.is_empty() {
            return Err(parse_error(0, "empty input"));
        }
        let mut terms = Vec::new();
        let mut first = true;
        while self.pos < self.tokens.len() {
            let negative = match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Err(parse_error(self.offset(), "expected '+' or '-'")),
            };
            first = false;
            let (m, c) = self.term()?;
            terms.push((m, if negative { -c } else { c }));
        }
        Ok(Polynomial::from_terms(terms))
    }

    fn term(&mut self) -> Result<(Monomial, ExactRational), PolyError> {
        let mut coeff = ExactRational::one();
        let mut powers = Vec::new();
        loop {
            match self.next() {
                Some(Token::Number(n)) => {
                    let value = if self.peek() == Some(&Token::Slash) {
                        self.pos += 1;
                        let at = self.offset();
                        match self.next() {
                            Some(Token::Number(d)) if !d.is_zero() => ExactRational::new(n, d),
                            Some(Token::Number(_)) => return Err(parse_error(at, "zero denominator")),
                            _ => return Err(parse_error(at, "expected denominator")),
                        }
                    } else {
                        ExactRational::from_integer(n)
                    };
                    coeff *= value;
                }
                Some(Token::Ident(name)) => {
                    let at = self.offset().saturating_sub(1);
                    let v = VariableId::parse(&name)
                        .ok_or_else(|| parse_error(at, format!("unknown variable '{name}'")))?;
                    let mut e = 1u32;
                    if self.peek() == Some(&Token::Caret) {
                        self.pos += 1;
                        let at = self.offset();
                        match self.next() {
                            Some(Token::Number(n)) => {
                                e = u32::try_from(n)
                                    .map_err(|_| parse_error(at, "exponent too large"))?;
                            }
                            _ => return Err(parse_error(at, "expected exponent")),
                        }
                    }
                    powers.push((v, e));
                }
                _ => {
                    self.pos = self.pos.saturating_sub(1);
                    return Err(parse_error(self.offset(), "expected number or variable"));
                }
            }
            if self.peek() == Some(&Token::Star) {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::from_powers(powers), coeff))
    }
}
