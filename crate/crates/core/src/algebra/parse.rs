//! Reader for transcribed displays such as
//! `2*mu*gamma^4 - (4*mu^2 - 1)*gamma^3`.
//!
//! Grammar: sums and differences of products and quotients of powers of
//! atoms; atoms are nonnegative integers, variable names (see [`Var::name`])
//! or parenthesized expressions. Multiplication is always explicit.

use num_bigint::BigInt;

use super::{MPoly, RationalExpr, Rational, Var};
use crate::{Error, Result};

pub fn parse_expr(src: &str) -> Result<RationalExpr> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

/// Parses a display that must be a polynomial.
pub fn parse_poly(src: &str) -> Result<MPoly> {
    let e = parse_expr(src)?;
    if !e.is_polynomial() {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("expected a polynomial, got a quotient with denominator {}", e.den()),
        });
    }
    Ok(e.num().clone())
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalExpr> {
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

    fn term(&mut self) -> Result<RationalExpr> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let rhs = self.unary()?;
                acc = acc.checked_div(&rhs).map_err(|_| Error::Parse {
                    pos: at,
                    msg: "division by zero".into(),
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RationalExpr> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalExpr> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("validated digits"))
    }

    fn atom(&mut self) -> Result<RationalExpr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RationalExpr::constant(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Var::from_name(name)
                    .map(RationalExpr::from)
                    .ok_or_else(|| Error::Parse {
                        pos: start,
                        msg: format!("unknown variable '{name}'"),
                    })
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let p = parse_poly("-beta^2 + 2*gamma*mu - (mu - 1)^2").unwrap();
        let b = MPoly::var(Var::Beta);
        let g = MPoly::var(Var::Gamma);
        let m = MPoly::var(Var::Mu);
        let expected = -b.pow(2) + MPoly::int(2) * g * m.clone() - (m - MPoly::one()).pow(2);
        assert_eq!(p, expected);
    }

    #[test]
    fn quotients() {
        let e = parse_expr("beta/(mu - gamma) + 1/2").unwrap();
        assert!(!e.is_polynomial());
        assert_eq!(parse_poly("6/4*beta").unwrap().to_string(), "(3/2)*beta");
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse_expr("beta +"), Err(Error::Parse { .. })));
        assert!(matches!(parse_expr("b^2"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_expr("(beta"), Err(Error::Parse { .. })));
        assert!(matches!(parse_expr("beta gamma"), Err(Error::Parse { .. })));
        assert!(matches!(parse_expr("1/(mu - mu)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("1/mu"), Err(Error::Parse { .. })));
    }
}
