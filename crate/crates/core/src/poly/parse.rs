//! Expression grammar for polynomials.
//!
//! ```text
//! sum   := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | power
//! power := atom ('^' INT)?
//! atom  := INT ('/' INT)? | 'x' INT | 'xt' INT | 'p' INT | '(' sum ')'
//! ```
//!
//! Variable indices are 1-based. Whitespace is ignored between tokens.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::Poly;
use super::rational::Rational;
use super::var::Var;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected character `{found}` at position {pos}")]
    UnexpectedChar { pos: usize, found: char },
    #[error("unexpected end of input at position {pos}")]
    UnexpectedEnd { pos: usize },
    #[error("expected {expected} at position {pos}")]
    Expected { pos: usize, expected: &'static str },
    #[error("variable `{name}` at position {pos} is out of range (limit {limit})")]
    IndexOutOfRange { pos: usize, name: String, limit: usize },
    #[error("exponent at position {pos} must be a non-negative integer literal")]
    BadExponent { pos: usize },
    #[error("zero denominator at position {pos}")]
    ZeroDenominator { pos: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::UnexpectedChar { pos, .. }
            | ParseError::UnexpectedEnd { pos }
            | ParseError::Expected { pos, .. }
            | ParseError::IndexOutOfRange { pos, .. }
            | ParseError::BadExponent { pos }
            | ParseError::ZeroDenominator { pos } => *pos,
        }
    }
}

/// Parses `src` as a polynomial in `x1..xD`, `xt1..xtD` and `p1..p{params}`.
pub fn parse_expr(src: &str, dim: usize, params: usize) -> Result<Poly, ParseError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, dim, params };
    let out = p.sum()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(out),
        Some(c) => Err(ParseError::UnexpectedChar { pos: p.pos, found: c as char }),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    dim: usize,
    params: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
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

    fn sum(&mut self) -> Result<Poly, ParseError> {
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
        self.power()
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let pos = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(ParseError::BadExponent { pos });
            }
            let exp: u32 = digits.parse().map_err(|_| ParseError::BadExponent { pos })?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        let pos = self.pos;
        let Some(c) = self.peek() else {
            return Err(ParseError::UnexpectedEnd { pos });
        };
        match c {
            b'0'..=b'9' => {
                let num: BigInt = self.digits().parse().expect("digit run");
                let save = self.pos;
                self.skip_ws();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let dpos = self.pos;
                    let d = self.digits();
                    if d.is_empty() {
                        return Err(ParseError::Expected { pos: dpos, expected: "denominator" });
                    }
                    let den: BigInt = d.parse().expect("digit run");
                    if den.is_zero() {
                        return Err(ParseError::ZeroDenominator { pos: dpos });
                    }
                    Ok(Poly::constant(Rational::from_big(num, den)))
                } else {
                    self.pos = save;
                    Ok(Poly::constant(Rational::from_big(num, BigInt::from(1))))
                }
            }
            b'x' | b'p' => {
                self.pos += 1;
                let (name, limit, make): (&str, usize, fn(usize) -> Var) = if c == b'p' {
                    ("p", self.params, Var::param)
                } else if self.peek() == Some(b't') {
                    self.pos += 1;
                    ("xt", self.dim, Var::xt)
                } else {
                    ("x", self.dim, Var::x)
                };
                let d = self.digits();
                if d.is_empty() {
                    return Err(ParseError::Expected { pos: self.pos, expected: "variable index" });
                }
                let idx: usize = d.parse().unwrap_or(usize::MAX);
                if idx == 0 || idx > limit {
                    return Err(ParseError::IndexOutOfRange { pos, name: format!("{name}{d}"), limit });
                }
                Ok(Poly::var(make(idx - 1)))
            }
            b'(' => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(b')') {
                    self.skip_ws();
                    return Err(ParseError::Expected { pos: self.pos, expected: "`)`" });
                }
                Ok(inner)
            }
            _ => Err(ParseError::UnexpectedChar { pos, found: self.src[pos..].iter().map(|&b| b as char).next().unwrap_or('?') }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        parse_expr(s, 3, 2).unwrap()
    }

    #[test]
    fn precedence() {
        assert_eq!(p("1 + 2*3"), Poly::int(7));
        assert_eq!(p("-2^2"), Poly::int(-4));
        assert_eq!(p("(1+1)^3"), Poly::int(8));
        assert_eq!(p("2 - 3 - 4"), Poly::int(-5));
        assert_eq!(p("1/2 + 1/3"), Poly::constant(Rational::new(5, 6)));
    }

    #[test]
    fn variables() {
        assert_eq!(p("x1"), Poly::var(Var::x(0)));
        assert_eq!(p("xt3"), Poly::var(Var::xt(2)));
        assert_eq!(p("p2"), Poly::var(Var::param(1)));
        assert_eq!(p("(x1 + xt2)^2").num_terms(), 3);
    }

    #[test]
    fn errors_carry_position() {
        let e = parse_expr("x1 + x4", 3, 0).unwrap_err();
        assert!(matches!(e, ParseError::IndexOutOfRange { pos: 5, .. }));
        assert!(matches!(parse_expr("x1^-1", 1, 0).unwrap_err(), ParseError::BadExponent { pos: 3 }));
        assert!(matches!(parse_expr("x1^x1", 1, 0).unwrap_err(), ParseError::BadExponent { .. }));
        assert!(matches!(parse_expr("(x1", 1, 0).unwrap_err(), ParseError::Expected { pos: 3, .. }));
        assert!(matches!(parse_expr("x1 $", 1, 0).unwrap_err(), ParseError::UnexpectedChar { pos: 3, found: '$' }));
        assert!(matches!(parse_expr("", 1, 0).unwrap_err(), ParseError::UnexpectedEnd { pos: 0 }));
        assert!(matches!(parse_expr("x0", 1, 0).unwrap_err(), ParseError::IndexOutOfRange { .. }));
        assert!(matches!(parse_expr("1/0", 1, 0).unwrap_err(), ParseError::ZeroDenominator { .. }));
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "-x1", "1/2*x1*xt2 - 3/4", "(x1 - xt1)^3 + p1*x2", "-7/3*p1^2*xt3"] {
            let a = p(s);
            let b = p(&a.to_string());
            assert_eq!(a, b, "{s} -> {a}");
        }
    }
}
