//! Reader for polynomial literals such as `127*k1^3 - 2304*k1*k2`.
//!
//! Accepts integers, `p/q` rational constants, variables of a given table,
//! `+ - * /`, parentheses and `^` with a nonnegative integer exponent.
//! Division is only allowed by a nonzero constant.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::GradedPoly;
use super::rational::Rational;
use super::table::VariableTable;
use crate::error::{Error, Result};

pub fn parse_poly(src: &str, table: &Arc<VariableTable>) -> Result<GradedPoly> {
    let mut p = Reader {
        src: src.as_bytes(),
        pos: 0,
        table,
    };
    let out = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

struct Reader<'a> {
    src: &'a [u8],
    pos: usize,
    table: &'a Arc<VariableTable>,
}

impl Reader<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
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

    fn sum(&mut self) -> Result<GradedPoly> {
        let mut acc = self.product()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.product()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<GradedPoly> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let at = self.pos;
            let rhs = self.unary()?;
            if c == b'*' {
                acc = &acc * &rhs;
            } else {
                match rhs.as_constant() {
                    Some(k) if !k.is_zero() => acc = acc.scale(&k.recip()),
                    _ => {
                        return Err(Error::Parse {
                            pos: at,
                            msg: "division by a non-constant or zero".into(),
                        })
                    }
                }
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<GradedPoly> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<GradedPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.uint()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<GradedPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                Ok(GradedPoly::constant(self.table, Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                GradedPoly::var(self.table, name).map_err(|_| Error::Parse {
                    pos: start,
                    msg: format!("unknown variable `{name}`"),
                })
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }
}
