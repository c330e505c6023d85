//! Text parser for Laurent polynomial expressions.
//!
//! Grammar:
//!   expr  := ['-'] term (('+'|'-') term)*
//!   term  := coeff ('*'? var ('^' int)?)? | var ('^' int)?
//!   coeff := int ('/' posint)?
//!   var   in {c, q, b}

use num_traits::One;

use crate::error::KernelError;
use crate::laurent::{LaurentPoly, RingTag, Var};
use crate::rational::{rat_int, ExactRational};

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner {
            bytes: s.as_bytes(),
            pos: 0,
        }
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
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn err(&self, msg: impl Into<String>) -> KernelError {
        KernelError::Parse(msg.into(), self.pos)
    }

    fn integer(&mut self) -> Result<i64, KernelError> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.err("expected integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn variable(&mut self) -> Result<Var, KernelError> {
        match self.bump() {
            Some(b'c') => Ok(Var::C),
            Some(b'q') => Ok(Var::Q),
            Some(b'b') => Ok(Var::B),
            _ => Err(self.err("expected variable c, q or b")),
        }
    }

    /// One term: (exponent, coefficient, variable if any).
    fn term(&mut self) -> Result<(i64, ExactRational, Option<Var>), KernelError> {
        let mut coeff = rat_int(1);
        let mut saw_coeff = false;
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.peek() == Some(b'/') {
                    self.bump();
                    let d = self.integer()?;
                    if d <= 0 {
                        return Err(self.err("denominator must be positive"));
                    }
                    d
                } else {
                    1
                };
                coeff = ExactRational::new(num.into(), den.into());
                saw_coeff = true;
            }
            _ => {}
        }
        let var_next = matches!(self.peek(), Some(b'c' | b'q' | b'b'));
        if saw_coeff && self.peek() == Some(b'*') {
            self.bump();
        } else if saw_coeff && !var_next {
            return Ok((0, coeff, None));
        }
        let var = self.variable()?;
        let exp = if self.peek() == Some(b'^') {
            self.bump();
            self.integer()?
        } else {
            1
        };
        Ok((exp, coeff, Some(var)))
    }
}

/// Parses an expression into normal form. Mixed variables are rejected;
/// the ring tag is Integral when every coefficient is an integer.
pub fn parse_laurent(text: &str) -> Result<LaurentPoly, KernelError> {
    let mut sc = Scanner::new(text);
    let mut terms: Vec<(i64, ExactRational)> = Vec::new();
    let mut var: Option<Var> = None;

    let mut sign = 1i64;
    if sc.peek() == Some(b'-') {
        sc.bump();
        sign = -1;
    }
    loop {
        let (exp, coeff, v) = sc.term()?;
        if let Some(v) = v {
            match var {
                None => var = Some(v),
                Some(prev) if prev != v => {
                    return Err(KernelError::VariableMismatch(prev, v));
                }
                _ => {}
            }
        }
        terms.push((exp, coeff * rat_int(sign)));
        match sc.peek() {
            None => break,
            Some(b'+') => {
                sc.bump();
                sign = 1;
            }
            Some(b'-') => {
                sc.bump();
                sign = -1;
            }
            Some(ch) => {
                return Err(sc.err(format!("unexpected character `{}`", ch as char)));
            }
        }
    }

    let var = var.unwrap_or(Var::C);
    let tag = if terms.iter().all(|(_, c)| c.denom().is_one()) {
        RingTag::Integral
    } else {
        RingTag::Rational
    };
    LaurentPoly::from_terms(var, tag, terms)
}
