//! Scalar literal grammar shared by every file format.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? digits)?
//! atom   := digits | 'z' | 't' | 'q' | '(' expr ')'
//! ```
//!
//! `z` is the chosen root of unity of a cyclotomic field; `t` (alias `q`)
//! generates a rational function field. Whitespace is ignored.

use super::{FieldSpec, Scalar};
use crate::scalar::rational::parse_integer;

pub(super) fn parse(field: &FieldSpec, src: &str) -> Result<Scalar, String> {
    let chars: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err("empty literal".into());
    }
    let mut p = Parser { s: &chars, pos: 0, field };
    let v = p.expr()?;
    if p.pos != chars.len() {
        return Err(format!("unexpected character {:?} at {}", chars[p.pos], p.pos));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [char],
    pos: usize,
    field: &'a FieldSpec,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Scalar, String> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, String> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                '/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.try_div(&d).map_err(|e| e.to_string())?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar, String> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        if self.peek() == Some('+') {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar, String> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let digits = self.digits();
        let e: i64 = digits.parse().map_err(|_| format!("bad exponent {digits:?}"))?;
        if neg && base.is_zero() {
            return Err("negative power of zero".into());
        }
        Ok(base.pow(if neg { -e } else { e }))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.s[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<Scalar, String> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err("missing ')'".into());
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                let q = parse_integer(&d).ok_or_else(|| format!("bad integer {d:?}"))?;
                Ok(Scalar::from_q(self.field, q))
            }
            Some('z') => {
                self.pos += 1;
                Scalar::zeta_pow(self.field, 1).map_err(|e| e.to_string())
            }
            Some('t') | Some('q') => {
                self.pos += 1;
                Scalar::t(self.field).map_err(|e| e.to_string())
            }
            Some(c) => Err(format!("unexpected character {c:?}")),
            None => Err("unexpected end of literal".into()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_forms() {
        let q = FieldSpec::Rationals;
        assert_eq!(parse(&q, " 3 / 6 ").unwrap().to_string(), "1/2");
        assert_eq!(parse(&q, "-2^3").unwrap().to_string(), "-8");
        assert_eq!(parse(&q, "2^-2").unwrap().to_string(), "1/4");
        assert!(parse(&q, "z").is_err());
        assert!(parse(&q, "1/0").is_err());
        assert!(parse(&q, "").is_err());
        assert!(parse(&q, "(1").is_err());
        let t = FieldSpec::rational_functions();
        assert_eq!(parse(&t, "q^-2 * q^2").unwrap(), Scalar::one(&t));
        let c = FieldSpec::Cyclotomic(3);
        // 1 + ζ₃ + ζ₃² = 0
        assert!(parse(&c, "1 + z + z^2").unwrap().is_zero());
    }
}
