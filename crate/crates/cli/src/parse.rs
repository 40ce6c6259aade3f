//! Polynomial input grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' digits)?
//! atom   := digits ('/' digits)? | 'z' | '(' expr ')'
//! ```
//!
//! Multiplication must be written out, and `-z^2` means `-(z^2)`.

use multispec_core::{Poly, Rational};
use num_bigint::BigInt;
use thiserror::Error;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {pos}: {msg}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub msg: String,
}

pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty input"));
    }
    let out = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(&format!("unexpected '{}'", p.peek_char())));
    }
    Ok(out)
}

/// Parses `p` or `p/q` with optional sign.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let poly = parse_poly(text)?;
    if !poly.is_constant() {
        return Err(ParseError {
            pos: 0,
            msg: "expected a rational constant".into(),
        });
    }
    Ok(poly.coeff(0))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ParseError {
        ParseError {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek_char(&self) -> char {
        std::str::from_utf8(&self.src[self.pos..])
            .ok()
            .and_then(|s| s.chars().next())
            .unwrap_or('?')
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        if self.peek() == Some(b'-') {
            return Err(self.error("negative exponent"));
        }
        let start = self.pos;
        let Some(digits) = self.digits().map(str::to_owned) else {
            return Err(self.error("expected exponent"));
        };
        let e: u32 = digits
            .parse()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or(ParseError {
                pos: start,
                msg: format!("exponent larger than {MAX_EXPONENT}"),
            })?;
        Ok(base.pow(e))
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.digits().map(|d| d.parse().expect("ascii digits"))
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'0'..=b'9') => {
                let num = self.integer().expect("starts with a digit");
                let save = self.pos;
                if self.eat(b'/') {
                    self.skip_ws();
                    let den_pos = self.pos;
                    let den = self.integer().ok_or_else(|| self.error("expected denominator"))?;
                    if den == BigInt::from(0) {
                        return Err(ParseError {
                            pos: den_pos,
                            msg: "zero denominator".into(),
                        });
                    }
                    return Ok(Poly::constant(Rational::new(num, den)));
                }
                self.pos = save;
                Ok(Poly::constant(Rational::from_integer(num)))
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(Poly::z())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                Err(self.error(&format!("unknown variable '{}', only z is allowed", self.peek_char())))
            }
            Some(_) => Err(self.error(&format!("unexpected '{}'", self.peek_char()))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
