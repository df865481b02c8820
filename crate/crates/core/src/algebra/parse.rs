//! Text format for polynomials.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' nat)?
//! atom   := integer | variable | '(' poly ')'
//! ```
//!
//! Whitespace is insignificant and integers are reduced mod p. A run of
//! letters that is not a declared variable is split into declared variable
//! names when that is unambiguous from the left (`xy` reads as `x*y`).

use std::fmt::Write as _;

use super::field::Coeff;
use super::monomial::Monomial;
use super::poly::{PolyRing, Polynomial};
use crate::error::{Error, Result};

pub fn parse_polynomial(text: &str, ring: &PolyRing) -> Result<Polynomial> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty input"));
    }
    let f = p.poly()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(&format!("unexpected character `{}`", p.src[p.pos] as char)));
    }
    Ok(f)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a PolyRing,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
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

    fn poly(&mut self) -> Result<Polynomial> {
        let ring = self.ring;
        let mut acc = Polynomial::zero();
        let mut sign_neg = false;
        match self.peek() {
            Some(b'+') => self.pos += 1,
            Some(b'-') => {
                self.pos += 1;
                sign_neg = true;
            }
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = if sign_neg { ring.sub(&acc, &t) } else { ring.add(&acc, &t) };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign_neg = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign_neg = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.ring.mul(&acc, &f);
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'_' || c == b'(' => {
                    let f = self.factor()?;
                    acc = self.ring.mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            if self.peek() == Some(b'-') {
                return Err(self.error("negative exponent"));
            }
            let e = self.natural()?;
            let e = u32::try_from(e).map_err(|_| self.error("exponent too large"))?;
            return Ok(self.ring.pow(&base, e));
        }
        Ok(base)
    }

    fn natural(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let mut v: u64 = 0;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add((self.src[self.pos] - b'0') as u64))
                .ok_or_else(|| self.error("integer literal too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a non-negative integer"));
        }
        Ok(v)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.poly()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.natural()?;
                let c = self.ring.field().from_u64(v);
                Ok(self.ring.constant(c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let word = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                self.word_to_monomial(word, start)
            }
            Some(c) => Err(self.error(&format!("unexpected character `{}`", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn word_to_monomial(&self, word: &str, start: usize) -> Result<Polynomial> {
        let ring = self.ring;
        if let Some(i) = ring.var_index(word) {
            return Ok(ring.var(i));
        }
        // greedy longest-match split into declared names
        let mut rest = word;
        let mut acc = ring.one();
        while !rest.is_empty() {
            let best = ring
                .var_names()
                .iter()
                .enumerate()
                .filter(|(_, v)| rest.starts_with(v.as_str()))
                .max_by_key(|(_, v)| v.len());
            match best {
                Some((i, v)) => {
                    acc = ring.mul(&acc, &ring.var(i));
                    rest = &rest[v.len()..];
                }
                None => {
                    return Err(Error::Parse { pos: start, msg: format!("unknown variable `{word}`") });
                }
            }
        }
        Ok(acc)
    }
}

pub fn format_monomial(m: &Monomial, ring: &PolyRing) -> String {
    let mut s = String::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(&ring.var_names()[i]);
        if e > 1 {
            let _ = write!(s, "^{e}");
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

/// Canonical text form; `parse_polynomial` inverts it.
pub fn format_polynomial(f: &Polynomial, ring: &PolyRing) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (idx, (m, c)) in f.terms().iter().enumerate() {
        let sc = ring.field().to_signed(*c as Coeff);
        let neg = sc < 0;
        let mag = sc.unsigned_abs();
        if idx == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            let _ = write!(s, "{mag}");
        } else if mag == 1 {
            s.push_str(&format_monomial(m, ring));
        } else {
            let _ = write!(s, "{mag}*{}", format_monomial(m, ring));
        }
    }
    s
}
