//! Text syntax for cyclotomic values.
//!
//! ```text
//! expr := ['-'] term { ('+' | '-') term }
//! term := integer [ '*' root ] | root
//! root := 'E(' integer ')' [ '^' integer ]
//! ```
//!
//! Whitespace is ignored. Exponents may carry a leading minus sign.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use super::Cyclotomic;
use crate::arith;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cyclotomic syntax error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Cursor { chars, pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            offset: self.offset(),
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn digits(&mut self) -> Result<String, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        Ok(self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect())
    }

    fn small_int(&mut self, signed: bool) -> Result<i64, ParseError> {
        let negative = signed && self.eat('-');
        let at = self.offset();
        let text = self.digits()?;
        let v: i64 = text.parse().map_err(|_| ParseError {
            offset: at,
            message: "integer out of range".into(),
        })?;
        Ok(if negative { -v } else { v })
    }

    /// Parses `E(n)[^e]`, returning `(n, e)`.
    fn root(&mut self) -> Result<(u64, i64), ParseError> {
        self.expect('E')?;
        self.expect('(')?;
        let at = self.offset();
        let n = self.small_int(false)?;
        if n == 0 {
            return Err(ParseError {
                offset: at,
                message: "E(0) is undefined".into(),
            });
        }
        self.expect(')')?;
        let e = if self.eat('^') {
            self.small_int(true)?
        } else {
            1
        };
        Ok((n as u64, e))
    }

    /// A term as `(coefficient, optional root)`.
    fn term(&mut self) -> Result<(BigInt, Option<(u64, i64)>), ParseError> {
        match self.peek() {
            Some('E') => Ok((BigInt::one(), Some(self.root()?))),
            Some(c) if c.is_ascii_digit() => {
                let at = self.offset();
                let coeff: BigInt = self.digits()?.parse().map_err(|_| ParseError {
                    offset: at,
                    message: "bad integer".into(),
                })?;
                if self.eat('*') {
                    Ok((coeff, Some(self.root()?)))
                } else {
                    Ok((coeff, None))
                }
            }
            _ => Err(self.error("expected an integer or E(n)")),
        }
    }
}

pub(super) fn parse(src: &str) -> Result<Cyclotomic, ParseError> {
    let mut cur = Cursor::new(src);
    let mut raw: Vec<(BigInt, Option<(u64, i64)>)> = Vec::new();
    let mut negative = cur.eat('-');
    loop {
        let (c, root) = cur.term()?;
        raw.push((if negative { -c } else { c }, root));
        match cur.peek() {
            None => break,
            Some('+') => negative = false,
            Some('-') => negative = true,
            Some(_) => return Err(cur.error("expected '+' or '-'")),
        }
        cur.pos += 1;
    }
    let n = raw
        .iter()
        .filter_map(|(_, r)| r.map(|(n, _)| n))
        .fold(1u64, arith::lcm);
    let terms: Vec<(i64, BigInt)> = raw
        .into_iter()
        .map(|(c, root)| match root {
            Some((m, e)) => (e.rem_euclid(m as i64) * (n / m) as i64, c),
            None => (0, c),
        })
        .collect();
    Ok(Cyclotomic::make(n, &terms).expect("conductor is positive"))
}

impl FromStr for Cyclotomic {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
