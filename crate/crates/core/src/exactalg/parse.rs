//! Parser for the textual form of rational expressions.
//!
//! Accepts integers, the alphabet variables, `+ - * / ^` and parentheses;
//! exponents are (possibly negative) integer literals.

use num_bigint::BigInt;

use super::error::AlgError;
use super::expr::RationalExpr;
use super::mono::Var;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> AlgError {
        AlgError::Parse(format!("{msg} at offset {}", self.pos))
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt, AlgError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn expr(&mut self) -> Result<RationalExpr, AlgError> {
        let mut acc = self.term()?;
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

    fn term(&mut self) -> Result<RationalExpr, AlgError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat(b'/') {
                acc = acc.try_div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RationalExpr, AlgError> {
        if self.eat(b'-') {
            Ok(self.unary()?.neg())
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<RationalExpr, AlgError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let e: i64 = self
            .digits()?
            .try_into()
            .map_err(|_| self.err("exponent too large"))?;
        base.try_powi(if neg { -e } else { e })
    }

    fn atom(&mut self) -> Result<RationalExpr, AlgError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(RationalExpr::from_bigint(&self.digits()?)),
            Some(c) => match Var::from_char(c as char) {
                Some(v) => {
                    self.pos += 1;
                    Ok(RationalExpr::var(v))
                }
                None => Err(self.err("unexpected character")),
            },
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<RationalExpr, AlgError> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["(1 - 2*t^2 + t^4)/(1 - t^3)", "a^2*c*t^3", "-3/2", "(t + t^2)/(1 - t)", "t^2/(3*a)"] {
            let e = parse_expr(s).unwrap();
            let back = parse_expr(&e.to_string()).unwrap();
            assert_eq!(e, back, "{s}");
            assert_eq!(e.to_string(), back.to_string());
        }
    }

    #[test]
    fn errors() {
        assert!(parse_expr("1/(t-t)").is_err());
        assert!(parse_expr("x + 1").is_err());
        assert!(parse_expr("(1 + t").is_err());
    }

    #[test]
    fn negative_powers() {
        let e = parse_expr("t^-2 * t^3").unwrap();
        assert_eq!(e, RationalExpr::var(Var::T));
    }
}
