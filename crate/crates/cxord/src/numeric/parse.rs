//! Text grammar for scalars, shared by the CLI and the measure file format.
//!
//! Accepted forms: integer `-3`, rational `5/18`, decimal `0.25`, radical
//! `r0 + c*sqrt(d)` with rational `r0`, `c` and positive integer `d`, and
//! signed sums thereof, e.g. `-1 - 1*sqrt(5) + 2*sqrt(2)`.

use super::radical::Rad;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError {
    pub input: String,
    pub reason: String,
}

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse scalar `{}`: {}", self.input, self.reason)
    }
}

impl std::error::Error for ParseScalarError {}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn eat(&mut self, expected: u8) -> bool {
        if self.peek() == Some(expected) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            Some(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(word.as_bytes()) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }
}

fn err(input: &str, reason: impl Into<String>) -> ParseScalarError {
    ParseScalarError {
        input: input.to_string(),
        reason: reason.into(),
    }
}

/// Unsigned numeric literal: digits, digits.digits or digits/digits.
fn parse_unsigned_rational(lx: &mut Lexer, input: &str) -> Result<BigRational, ParseScalarError> {
    let int_part = lx
        .digits()
        .ok_or_else(|| err(input, "expected a number"))?;
    let mut value = BigRational::from_integer(int_part.parse::<BigInt>().unwrap());
    if lx.eat(b'.') {
        let frac = lx
            .digits()
            .ok_or_else(|| err(input, "expected digits after decimal point"))?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        value += BigRational::new(frac.parse::<BigInt>().unwrap(), scale);
    } else if lx.eat(b'/') {
        let den = lx
            .digits()
            .ok_or_else(|| err(input, "expected denominator"))?;
        let den: BigInt = den.parse().unwrap();
        if den.is_zero() {
            return Err(err(input, "zero denominator"));
        }
        value /= BigRational::from_integer(den);
    }
    Ok(value)
}

/// One signed term: rational, `c*sqrt(d)` or bare `sqrt(d)`.
fn parse_term(lx: &mut Lexer, input: &str, negative: bool) -> Result<Rad, ParseScalarError> {
    let value = if lx.keyword("sqrt") {
        parse_sqrt(lx, input, BigRational::one())?
    } else {
        let coeff = parse_unsigned_rational(lx, input)?;
        if lx.eat(b'*') {
            if !lx.keyword("sqrt") {
                return Err(err(input, "expected sqrt(...) after `*`"));
            }
            parse_sqrt(lx, input, coeff)?
        } else {
            Rad::from_rational(coeff)
        }
    };
    Ok(if negative { -value } else { value })
}

fn parse_sqrt(lx: &mut Lexer, input: &str, coeff: BigRational) -> Result<Rad, ParseScalarError> {
    if !lx.eat(b'(') {
        return Err(err(input, "expected `(` after sqrt"));
    }
    let d = lx
        .digits()
        .ok_or_else(|| err(input, "expected integer radicand"))?;
    let d: u64 = d
        .parse()
        .map_err(|_| err(input, "radicand out of range"))?;
    if d == 0 {
        return Err(err(input, "radicand must be positive"));
    }
    if !lx.eat(b')') {
        return Err(err(input, "expected `)` after radicand"));
    }
    Ok(Rad::radical(coeff, d))
}

/// Parse the full scalar grammar into an exact [`Rad`] value.
pub fn parse_scalar(input: &str) -> Result<Rad, ParseScalarError> {
    let mut lx = Lexer::new(input);
    if lx.peek().is_none() {
        return Err(err(input, "empty input"));
    }
    let mut negative = false;
    match lx.peek() {
        Some(b'-') => {
            lx.bump();
            negative = true;
        }
        Some(b'+') => {
            lx.bump();
        }
        _ => {}
    }
    let mut acc = parse_term(&mut lx, input, negative)?;
    loop {
        match lx.peek() {
            Some(b'+') => {
                lx.bump();
                acc = acc + parse_term(&mut lx, input, false)?;
            }
            Some(b'-') => {
                lx.bump();
                acc = acc + parse_term(&mut lx, input, true)?;
            }
            Some(other) => {
                return Err(err(input, format!("unexpected character `{}`", other as char)))
            }
            None => break,
        }
    }
    Ok(acc)
}
