//! Operator expressions: integers, `x`, `Dx`, parameter identifiers and
//! `+ - * / ^ ( )`. Products are operator compositions, so `Dx*x` is
//! `x*Dx + 1`. Division is only by expressions free of `x` and `Dx`.

use num_bigint::BigInt;

use crate::diffop::{DiffOp, XPoly};
use crate::error::{Error, Result};
use crate::scalar::{Poly, RatFunc, Var};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let b: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = b[st..i].iter().collect();
            out.push((st, Tok::Num(t.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == '_') {
                i += 1;
            }
            out.push((st, Tok::Ident(b[st..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos: i, msg: format!("unexpected character '{c}'") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<DiffOp> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<DiffOp> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let pos = self.pos();
                let d = self.unary()?;
                let c = as_scalar(&d).ok_or(Error::Parse { pos, msg: "can only divide by a constant".into() })?;
                let inv = c.inv().map_err(|_| Error::Parse { pos, msg: "division by zero".into() })?;
                acc = &acc * &DiffOp::scalar(XPoly::constant(inv));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<DiffOp> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<DiffOp> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = match self.peek() {
            Some(Tok::Num(k)) => u32::try_from(k).ok(),
            _ => None,
        };
        let Some(e) = e.filter(|&e| e <= 1000) else {
            return self.err("expected a nonnegative integer exponent");
        };
        self.i += 1;
        let mut acc = DiffOp::scalar(XPoly::one());
        for _ in 0..e {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<DiffOp> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(k)) => {
                self.i += 1;
                Ok(DiffOp::scalar(XPoly::constant(RatFunc::from_poly(Poly::constant(k)))))
            }
            Some(Tok::Ident(name)) => {
                self.i += 1;
                match name.as_str() {
                    "x" => Ok(DiffOp::x()),
                    "Dx" => Ok(DiffOp::d()),
                    "n" => Err(Error::Parse { pos, msg: "`n` is reserved for the recurrence index".into() }),
                    _ => {
                        let v = Var::param(&name).map_err(|e| Error::Parse { pos, msg: e.to_string() })?;
                        Ok(DiffOp::scalar(XPoly::constant(RatFunc::var(v))))
                    }
                }
            }
            Some(Tok::Op('(')) => {
                self.i += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(Tok::Op(c)) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

fn as_scalar(d: &DiffOp) -> Option<RatFunc> {
    if d.order() == 0 && d.coeff(0).is_constant() {
        Some(d.coeff(0).coeff(0))
    } else {
        None
    }
}

/// Parses an operator expression into right normal form.
pub fn parse_operator(s: &str) -> Result<DiffOp> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty expression".into() });
    }
    let mut p = Parser { toks, i: 0, end: s.chars().count() };
    let e = p.expr()?;
    if p.i < p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// Parses a polynomial in `x` (no `Dx`).
pub fn parse_xpoly(s: &str) -> Result<XPoly> {
    let d = parse_operator(s)?;
    if d.order() > 0 {
        return Err(Error::Parse { pos: 0, msg: "expected a polynomial in x".into() });
    }
    Ok(d.coeff(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xp(c: &[i64]) -> XPoly {
        XPoly::from_ints(c)
    }

    #[test]
    fn commutation_is_respected() {
        let a = parse_operator("Dx*x - 3").unwrap();
        assert_eq!(a, DiffOp::new(vec![xp(&[-2]), xp(&[0, 1])]));
        let b = parse_operator("(1-x^2)*Dx^2 - x*Dx").unwrap();
        assert_eq!(b, DiffOp::new(vec![xp(&[0]), xp(&[0, -1]), xp(&[1, 0, -1])]));
    }

    #[test]
    fn rationals_and_parameters() {
        let a = parse_operator("x/2 + 3/4").unwrap();
        assert_eq!(a.coeff(0).coeff(1), RatFunc::frac(1, 2));
        assert_eq!(a.coeff(0).coeff(0), RatFunc::frac(3, 4));
        assert!(parse_operator("x*Dx - m").is_ok());
        assert!(parse_operator("1/x").is_err());
        assert!(parse_operator("n*Dx").is_err());
        assert!(parse_operator("Dx*x)").is_err());
        assert!(matches!(parse_operator("2 $ x"), Err(Error::Parse { pos: 2, .. })));
    }
}
