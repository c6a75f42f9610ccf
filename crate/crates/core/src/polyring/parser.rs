//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nonneg-int)?
//! base     := rational | ident | '(' expr ')'
//! rational := int ('/' posint)?
//! ident    := letter (letter | digit | '_')*
//! ```
//!
//! Whitespace is insignificant and implicit multiplication is rejected.
//! A single leading sign is accepted on every `expr` so that printed
//! polynomials with a negative leading coefficient parse back.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Poly, Rational, Ring, DEFAULT_MAX_DEGREE};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
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
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].parse().expect("digits")), start));
                continue;
            }
            a if a.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            other => {
                let found = text[start..].chars().next().unwrap_or(other);
                return Err(Error::Syntax {
                    position: start,
                    expected: "a number, identifier, operator or parenthesis".into(),
                    found: format!("`{found}`"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ring: &'a Ring,
    max_degree: u32,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            expected: expected.into(),
            found: self.peek().describe(),
        })
    }

    fn guard(&self, p: &Poly) -> Result<()> {
        p.check_degree(self.max_degree)
    }

    fn expr(&mut self) -> Result<Poly> {
        let negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc += self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc -= self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.factor()?;
            acc = acc.checked_mul(&rhs, self.max_degree)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let exp = match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                n
            }
            _ => return self.fail("a non-negative integer exponent"),
        };
        let exp: u32 = match u32::try_from(&exp) {
            Ok(e) => e,
            Err(_) => {
                return Err(Error::DegreeTooHigh {
                    degree: u32::MAX,
                    max: self.max_degree,
                })
            }
        };
        if let Some(d) = base.total_degree() {
            let total = d.saturating_mul(exp);
            if total > self.max_degree {
                return Err(Error::DegreeTooHigh {
                    degree: total,
                    max: self.max_degree,
                });
            }
        }
        let p = base.pow(exp);
        self.guard(&p)?;
        Ok(p)
    }

    fn base(&mut self) -> Result<Poly> {
        match self.peek().clone() {
            Tok::Int(num) => {
                self.bump();
                let mut value = Rational::from_integer(num);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.peek().clone() {
                        Tok::Int(den) if !den.is_zero() => {
                            self.bump();
                            value /= Rational::from_integer(den);
                        }
                        _ => return self.fail("a positive integer denominator"),
                    }
                }
                Ok(Poly::constant(self.ring, value))
            }
            Tok::Ident(name) => {
                let position = self.offset();
                self.bump();
                match self.ring.index_of(&name) {
                    Some(idx) => Ok(Poly::var(self.ring, idx)),
                    None => Err(Error::UnknownVariable { name, position }),
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.fail("`)`");
                }
                self.bump();
                Ok(inner)
            }
            _ => self.fail("a number, identifier or `(`"),
        }
    }
}

/// Parse `text` into a polynomial over `ring` with the default degree cap.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Poly> {
    parse_poly_with(text, ring, DEFAULT_MAX_DEGREE)
}

pub fn parse_poly_with(text: &str, ring: &Ring, max_degree: u32) -> Result<Poly> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        ring,
        max_degree,
    };
    let result = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail("an operator or end of input");
    }
    Ok(result)
}
