//! Parser for the canonical polynomial text form.
//!
//! Grammar (whitespace-insensitive):
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := uint ('/' uint)? | ident | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_traits::One;

use super::{Coeff, Polynomial, RingRef};
use crate::{Error, Result};

pub fn parse_polynomial(ring: &RingRef, text: &str) -> Result<Polynomial> {
    let mut p = Parser { ring, bytes: text.as_bytes(), pos: 0 };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    ring: &'a RingRef,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut neg = false;
        if self.peek() == Some(b'-') {
            self.bump();
            neg = true;
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                b'-' => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.bump();
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.uint()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let mut coeff = Coeff::new(num, BigInt::one());
                if self.peek() == Some(b'/') {
                    self.bump();
                    let den = self.uint()?;
                    if den == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    coeff = Coeff::new(coeff.numer().clone(), den);
                }
                Ok(Polynomial::constant(self.ring, coeff))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.ident();
                Polynomial::var_named(self.ring, &name)
            }
            Some(_) => Err(self.err("expected a number, variable or `(`")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() {
            let c = self.bytes[self.pos];
            if c.is_ascii_alphanumeric() || c == b'_' || c == b'\'' {
                self.pos += 1;
            } else {
                break;
            }
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        s.parse::<BigInt>().map_err(|_| self.err("bad number"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::PolyRing;

    #[test]
    fn round_trip() {
        let r = PolyRing::new(vec!["x", "y"]).unwrap();
        for s in ["x^2 - 3/2*y + 1", "x*y", "0", "-x", "2"] {
            let p = parse_polynomial(&r, s).unwrap();
            assert_eq!(p.to_string(), s);
        }
    }

    #[test]
    fn double_star_is_an_error() {
        let r = PolyRing::new(vec!["x"]).unwrap();
        let e = parse_polynomial(&r, "x**").unwrap_err();
        match e {
            Error::Parse { pos, .. } => assert_eq!(pos, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_variable() {
        let r = PolyRing::new(vec!["x"]).unwrap();
        assert!(matches!(parse_polynomial(&r, "z"), Err(Error::UnknownVariable(_))));
    }
}
