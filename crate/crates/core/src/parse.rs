//! Text grammar for field elements and polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' | 'Z' | 'X' | 'Y' | 't' | '(' expr ')'
//! ```
//!
//! `x` (alias `Z`) is the main variable; `X`, `Y` are the variables of the base
//! field and `t` generates a non-prime `F_q`. Division is only allowed by
//! base-field elements.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::valued_field::{FieldElement, ValuedField};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(char),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token::Int(digits.parse().expect("ascii digits")));
        } else if "xZXYt".contains(c) {
            if i + 1 < chars.len() && chars[i + 1].is_alphanumeric() {
                return Err(Error::Parse(format!(
                    "unknown identifier at {:?}",
                    &text[i..]
                )));
            }
            out.push(Token::Ident(c));
            i += 1;
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!(
                "unexpected character {c:?} in {text:?}"
            )));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    field: &'a ValuedField,
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat_op(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat_op('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat_op('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat_op('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat_op('/') {
                let divisor = self.unary()?;
                if divisor.degree().unwrap_or(0) > 0 {
                    return Err(Error::Parse(
                        "division by a polynomial in the main variable".into(),
                    ));
                }
                acc = acc
                    .div_scalar(&divisor.coeff(0))
                    .map_err(|_| Error::Parse("division by zero".into()))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.eat_op('-') {
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if !self.eat_op('^') {
            return Ok(base);
        }
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                let e = u32::try_from(&n)
                    .ok()
                    .filter(|&e| e <= 4096)
                    .ok_or_else(|| Error::Parse(format!("exponent {n} out of range")))?;
                Ok(base.pow(e))
            }
            _ => Err(Error::Parse(
                "expected a non-negative integer exponent".into(),
            )),
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        let token = self
            .peek()
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        let k = self.field;
        match token {
            Token::Int(n) => Ok(Poly::constant(k.from_bigint(&n))),
            Token::Ident('x') | Token::Ident('Z') => Ok(Poly::x(k)),
            Token::Ident('X') => Ok(Poly::constant(k.var_x()?)),
            Token::Ident('Y') => Ok(Poly::constant(k.var_y()?)),
            Token::Ident('t') => Ok(Poly::constant(k.generator_t()?)),
            Token::Op('(') => {
                let inner = self.expr()?;
                if !self.eat_op(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(inner)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses a polynomial in the main variable over `field`.
pub fn parse_poly(field: &ValuedField, text: &str) -> Result<Poly> {
    let mut parser = Parser {
        field,
        tokens: tokenize(text)?,
        pos: 0,
    };
    if parser.tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!("trailing input in {text:?}")));
    }
    Ok(poly)
}

/// Parses an element of the base field.
pub fn parse_field_element(field: &ValuedField, text: &str) -> Result<FieldElement> {
    let poly = parse_poly(field, text)?;
    if poly.degree().unwrap_or(0) > 0 {
        return Err(Error::Parse(format!(
            "{text:?} involves the main variable; expected a field element"
        )));
    }
    Ok(poly.coeff(0))
}
