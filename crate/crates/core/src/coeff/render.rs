//! Canonical text form for coefficients, and a parser that reads it back.
//!
//! Grammar: sums of terms `c*q^i*t^j`, with optional parenthesised quotient
//! `(num)/(den)`. Exponents may be negative. Rational coefficients are written
//! `a/b`.

use std::fmt;

use num_traits::{One, Signed};

use super::{CoeffError, QTPolynomial, QTRational, Rational};

#[derive(Clone, Copy, Debug)]
pub(crate) struct Monomial {
    pub q: i64,
    pub t: i64,
}

impl Monomial {
    pub fn q(e: i64) -> Self {
        Self { q: e, t: 0 }
    }

    fn is_one(&self) -> bool {
        self.q == 0 && self.t == 0
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: &str, e: i64, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        f.write_str("*")?;
    }
    *first = false;
    if e == 1 {
        f.write_str(var)
    } else {
        write!(f, "{var}^{e}")
    }
}

pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Rational, Monomial)>,
) -> fmt::Result {
    let mut any = false;
    for (c, m) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        match (any, neg) {
            (false, true) => f.write_str("-")?,
            (true, true) => f.write_str(" - ")?,
            (true, false) => f.write_str(" + ")?,
            (false, false) => {}
        }
        any = true;
        let mut first = true;
        if !abs.is_one() || m.is_one() {
            write!(f, "{abs}")?;
            first = false;
        }
        write_power(f, "q", m.q, &mut first)?;
        write_power(f, "t", m.t, &mut first)?;
    }
    if !any {
        f.write_str("0")?;
    }
    Ok(())
}

pub(crate) fn write_qt_terms(f: &mut fmt::Formatter<'_>, p: &QTPolynomial) -> fmt::Result {
    write_terms(f, p.terms().map(|(&(q, t), c)| (c, Monomial { q, t })))
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> CoeffError {
        CoeffError::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<num_bigint::BigInt, CoeffError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("bad integer"))
    }

    fn exponent(&mut self) -> Result<i64, CoeffError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let neg = self.eat(b'-');
        let v: i64 = self
            .integer()?
            .try_into()
            .map_err(|_| self.err("exponent overflow"))?;
        Ok(if neg { -v } else { v })
    }

    // factor := number ['/' number] | 'q' [^e] | 't' [^e] | '(' expr ')'
    fn factor(&mut self) -> Result<QTRational, CoeffError> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                let e = self.exponent()?;
                Ok(QTRational::from_poly(QTPolynomial::monomial(Rational::one(), e, 0)))
            }
            Some(b't') => {
                self.pos += 1;
                let e = self.exponent()?;
                Ok(QTRational::from_poly(QTPolynomial::monomial(Rational::one(), 0, e)))
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(QTRational::from_rational(&Rational::from_integer(n)))
            }
            _ => Err(self.err("unexpected input")),
        }
    }

    fn term(&mut self) -> Result<QTRational, CoeffError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.factor()?);
            } else if self.eat(b'/') {
                acc = acc.try_div(&self.factor()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn expr(&mut self) -> Result<QTRational, CoeffError> {
        let mut acc = if self.eat(b'-') {
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }
}

pub fn parse_qt(s: &str) -> Result<QTRational, CoeffError> {
    let mut p = Parser {
        s: s.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

impl std::str::FromStr for QTRational {
    type Err = CoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_qt(s)
    }
}

impl std::str::FromStr for QTPolynomial {
    type Err = CoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let r = parse_qt(s)?;
        r.as_polynomial()
            .cloned()
            .ok_or_else(|| CoeffError::Parse(format!("not a Laurent polynomial: {s}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn render_parse_roundtrip() {
        for s in [
            "1 + q + 2*q^2*t",
            "-1/2*t^-1 + q^3",
            "0",
            "(1 + q)/(1 - t)",
            "-q*t^2",
        ] {
            let v: QTRational = s.parse().unwrap();
            let back: QTRational = v.to_string().parse().unwrap();
            assert_eq!(v, back, "{s}");
        }
        let v: QTRational = "1 + q + 2*q^2*t".parse().unwrap();
        assert_eq!(v.to_string(), "1 + q + 2*q^2*t");
    }

    #[test]
    fn parse_errors() {
        assert!(parse_qt("1 +").is_err());
        assert!(parse_qt("x").is_err());
        assert!(parse_qt("1/(1-1)").is_err());
        assert!("1/(1-q)".parse::<QTPolynomial>().is_err());
        assert!(Rational::zero().is_zero());
    }
}
