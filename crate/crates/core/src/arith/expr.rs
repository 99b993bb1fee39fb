//! Parser for exact scalar expressions such as `(1+z)/2 - 3*z^2*alpha^2`.
//!
//! Grammar (juxtaposition means multiplication, so `2z` and `3(1+w)` work):
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/')? unary)*
//! unary   := ('-' | '+') unary | power
//! power   := atom ('^' '-'? integer)?
//! atom    := integer | identifier | '(' sum ')'
//! ```
//!
//! The root identifier denotes ζₙ; every other identifier is a parameter.
//! Division and negative exponents are only allowed on constants.

use num_bigint::BigInt;

use super::{ArithError, CycNumber, ParamPoly, Rational};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ArithError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let v: BigInt = s[start..i].parse().expect("digits");
            out.push((start, Tok::Int(v)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(s[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(ArithError::Parse {
                pos: i,
                msg: format!("unexpected character `{}`", s[i..].chars().next().unwrap()),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    order: u32,
    root: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ArithError> {
        Err(ArithError::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<ParamPoly, ArithError> {
        let mut acc = self.product()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.product()?;
            } else if self.eat('-') {
                acc = &acc - &self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_) | Tok::Ident(_) | Tok::Op('(')))
    }

    fn product(&mut self) -> Result<ParamPoly, ArithError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = &acc * &ParamPoly::constant(invert_constant(&d)?);
            } else if self.starts_atom() {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<ParamPoly, ArithError> {
        if self.eat('-') {
            Ok(-&self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<ParamPoly, ArithError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let e: u32 = match self.peek() {
            Some(Tok::Int(v)) => match u32::try_from(v) {
                Ok(e) => e,
                Err(_) => return self.err("exponent too large"),
            },
            _ => return self.err("expected integer exponent"),
        };
        self.pos += 1;
        if negative {
            let inv = invert_constant(&base)?;
            Ok(ParamPoly::constant(inv.pow(e as i64)?))
        } else {
            Ok(base.pow(e))
        }
    }

    fn atom(&mut self) -> Result<ParamPoly, ArithError> {
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(ParamPoly::constant(CycNumber::from_rational(
                    self.order,
                    Rational::from_integer(v),
                )))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if name == self.root {
                    Ok(ParamPoly::constant(CycNumber::zeta_pow(self.order, 1)))
                } else {
                    Ok(ParamPoly::var(self.order, &name))
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            _ => self.err("expected a number, identifier or `(`"),
        }
    }
}

fn invert_constant(p: &ParamPoly) -> Result<CycNumber, ArithError> {
    p.constant_value().ok_or(ArithError::NonConstantDivisor)?.inv()
}

/// Parses an expression over Q(ζₙ) with `z` denoting ζₙ.
pub fn parse_expr(text: &str, order: u32) -> Result<ParamPoly, ArithError> {
    parse_expr_with_root(text, order, "z")
}

/// Parses an expression with a caller-chosen name for ζₙ.
pub fn parse_expr_with_root(text: &str, order: u32, root: &str) -> Result<ParamPoly, ArithError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        order,
        root,
    };
    let out = p.sum()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn constants() {
        let half_one_plus_z = parse_expr("(1+z)/2", 4).unwrap();
        let expected = CycNumber::from_coords(4, vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(half_one_plus_z, ParamPoly::constant(expected));
        assert_eq!(parse_expr("z^4", 4).unwrap(), ParamPoly::one(4));
        assert_eq!(parse_expr("z^-1", 3).unwrap(), parse_expr("-1 - z", 3).unwrap());
    }

    #[test]
    fn juxtaposition_and_params() {
        let a = parse_expr_with_root("(1-w)beta^2", 4, "w").unwrap();
        let b = parse_expr("(1 - z)*beta^2", 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_expr("2z", 4).unwrap(), parse_expr("z+z", 4).unwrap());
    }

    #[test]
    fn errors() {
        assert_eq!(parse_expr("1/alpha", 3), Err(ArithError::NonConstantDivisor));
        assert_eq!(parse_expr("1/(z-z)", 3), Err(ArithError::DivisionByZero));
        assert!(matches!(parse_expr("1 +", 3), Err(ArithError::Parse { .. })));
        assert!(matches!(parse_expr("(1", 3), Err(ArithError::Parse { .. })));
        assert!(matches!(parse_expr("1 $ 2", 3), Err(ArithError::Parse { pos: 2, .. })));
    }

    #[test]
    fn display_round_trips() {
        for s in ["1/2 - z*alpha", "(1 - z)*beta^2 + 3/4", "-a1*a2^3 + (z + z^2)*a1", "0"] {
            let p = parse_expr(s, 5).unwrap();
            assert_eq!(parse_expr(&p.to_string(), 5).unwrap(), p, "{s}");
        }
    }
}
