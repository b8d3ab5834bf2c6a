//! Canonical text form: terms in decreasing monomial order, variables as `x[vertex,j]`,
//! coefficients as `p` or `p/q`.

use super::monomial::{Monomial, Var};
use super::polynomial::{Polynomial, Rat};
use crate::error::{bail, Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::fmt;

fn vertex_name(names: &[String], v: u16) -> String {
    names.get(v as usize).cloned().unwrap_or_else(|| (v + 1).to_string())
}

fn write_monomial(out: &mut String, m: &Monomial, names: &[String]) {
    for (i, &(v, e)) in m.pairs().iter().enumerate() {
        if i > 0 {
            out.push('*');
        }
        out.push_str(&format!("x[{},{}]", vertex_name(names, v.vertex), v.index));
        if e > 1 {
            out.push_str(&format!("^{}", e));
        }
    }
}

fn rat_text(c: &Rat) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl Polynomial {
    /// Canonical text with the given vertex names (vertex `k` falls back to `k+1`).
    pub fn to_text(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if m.is_one() {
                out.push_str(&rat_text(&a));
            } else {
                if !a.is_one() {
                    out.push_str(&rat_text(&a));
                    out.push('*');
                }
                write_monomial(&mut out, m, names);
            }
        }
        out
    }

    /// Parses sums, products, integer powers, parentheses, rationals `p/q`
    /// and variables `x[vertex,j]`.
    pub fn parse(s: &str, names: &[String]) -> Result<Polynomial> {
        let mut p = Parser { s: s.as_bytes(), pos: 0, names };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            bail!(Parse, "trailing input at byte {} in {:?}", p.pos, s);
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&[]))
    }
}

impl std::str::FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Polynomial> {
        Polynomial::parse(s, &[])
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            bail!(Parse, "expected '{}' at byte {}", b as char, self.pos)
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            let t = self.term()?;
            if sign < 0 {
                acc = &acc - &t;
            } else {
                acc = &acc + &t;
            }
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| Error::Parse("exponent out of range".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            bail!(Parse, "expected an integer at byte {}", start);
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(txt.parse().unwrap())
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'x') => {
                self.pos += 1;
                self.expect(b'[')?;
                self.skip_ws();
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos] != b',' && self.s[self.pos] != b']' {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap().trim().to_string();
                self.expect(b',')?;
                let j = self.integer()?;
                self.expect(b']')?;
                let vertex = match self.names.iter().position(|n| *n == name) {
                    Some(v) => v,
                    None if self.names.is_empty() => match name.parse::<usize>() {
                        Ok(k) if k >= 1 => k - 1,
                        _ => bail!(Parse, "unknown vertex {:?}", name),
                    },
                    None => bail!(Parse, "unknown vertex {:?}", name),
                };
                let j: usize = j.try_into().map_err(|_| Error::Parse("index out of range".into()))?;
                if j == 0 || j > u16::MAX as usize || vertex > u16::MAX as usize {
                    bail!(Parse, "variable index out of range in x[{},{}]", name, j);
                }
                Ok(Polynomial::var(Var::new(vertex, j)))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let mut q = Rat::from_integer(n);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d == BigInt::from(0) {
                        bail!(Parse, "zero denominator");
                    }
                    q /= Rat::from_integer(d);
                }
                Ok(Polynomial::constant(q))
            }
            _ => bail!(Parse, "unexpected input at byte {}", self.pos),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_in_decreasing_order() {
        let p = Polynomial::parse("x[1,2] - x[1,1]", &[]).unwrap();
        assert_eq!(p.to_string(), "x[1,2] - x[1,1]");
        let q = Polynomial::parse("-(x[1,1]+x[1,2])^2 + 3/2", &[]).unwrap();
        assert_eq!(q.to_string(), "-x[1,2]^2 - 2*x[1,1]*x[1,2] - x[1,1]^2 + 3/2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::int(-1).to_string(), "-1");
    }

    #[test]
    fn named_vertices_round_trip() {
        let names = vec!["i1".to_string(), "i2".to_string()];
        let p = Polynomial::parse("x[i2,1]*x[i1,3]^2 - 7/3*x[i1,1]", &names).unwrap();
        let t = p.to_text(&names);
        assert_eq!(Polynomial::parse(&t, &names).unwrap(), p);
        assert!(Polynomial::parse("x[i9,1]", &names).is_err());
    }

    #[test]
    fn rejects_garbage() {
        for s in ["x[1,0]", "1/0", "x[1,1", "2 3", "+"] {
            assert!(Polynomial::parse(s, &[]).is_err(), "{}", s);
        }
    }
}
