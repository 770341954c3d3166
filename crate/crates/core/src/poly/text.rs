//! Text form `c1*X1^a1*X2^a2 + ...`.
//!
//! The parser also accepts `-`, parentheses and integer powers of
//! subexpressions, so messages such as `(X2 - 1)*(X2 - 4)` can be written
//! directly. Integer literals are reduced modulo `p`.

use std::fmt;

use super::{MultiPoly, PolyError};
use crate::ffield::PrimeField;

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = (0..self.nvars())
                .filter(|&i| m.exp(i) > 0)
                .map(|i| match m.exp(i) {
                    1 => format!("X{}", i + 1),
                    e => format!("X{}^{}", i + 1, e),
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{c}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl MultiPoly {
    /// Parses the text form in `nvars` variables `X1..X{nvars}`.
    pub fn parse(field: PrimeField, nvars: usize, s: &str) -> Result<MultiPoly, PolyError> {
        let tokens = tokenize(s)?;
        let mut p = Parser { tokens, pos: 0, field, nvars };
        let out = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(PolyError::Parse(format!("unexpected {:?}", p.tokens[p.pos])));
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(u128),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, PolyError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let number = |i: &mut usize| -> Result<u128, PolyError> {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        let text: String = chars[start..*i].iter().collect();
        text.parse().map_err(|_| PolyError::Parse(format!("bad number {text:?}")))
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            'X' | 'x' => {
                i += 1;
                if i >= chars.len() || !chars[i].is_ascii_digit() {
                    return Err(PolyError::Parse("variables are written X1, X2, ...".into()));
                }
                out.push(Tok::Var(number(&mut i)? as usize));
            }
            d if d.is_ascii_digit() => out.push(Tok::Num(number(&mut i)?)),
            other => return Err(PolyError::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
    field: PrimeField,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = MultiPoly::zero(self.field, self.nvars);
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if sign { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(Tok::Plus) => sign = false,
                Some(Tok::Minus) => sign = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some(Tok::Num(e)) if *e <= super::MAX_DEGREE as u128 => {
                    self.pos += 1;
                    return Ok(base.pow(*e as u32));
                }
                _ => return Err(PolyError::Parse("exponent must be a small integer".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, PolyError> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Tok::Num(n)) => {
                let v = (n % self.field.p() as u128) as u64;
                Ok(MultiPoly::constant(self.field.elem(v), self.nvars))
            }
            Some(Tok::Var(i)) => {
                if i == 0 || i > self.nvars {
                    return Err(PolyError::VariableOutOfRange { index: i, nvars: self.nvars });
                }
                Ok(MultiPoly::var(self.field, self.nvars, i - 1))
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                if self.tokens.get(self.pos) != Some(&Tok::RParen) {
                    return Err(PolyError::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Tok::Minus) => Ok(-&self.factor()?),
            other => Err(PolyError::Parse(format!("unexpected {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_reduction() {
        let f = PrimeField::new(7).unwrap();
        let g = MultiPoly::parse(f, 2, "3*X1^2*X2 + 9*X1 - 1").unwrap();
        assert_eq!(g.to_string(), "3*X1^2*X2 + 2*X1 + 6");
        assert_eq!(MultiPoly::parse(f, 2, &g.to_string()).unwrap(), g);
        let h = MultiPoly::parse(f, 2, "(X2 - 1)*(X2 - 4)").unwrap();
        assert_eq!(h.to_string(), "X2^2 + 2*X2 + 4");
        assert_eq!(MultiPoly::parse(f, 1, "0").unwrap().to_string(), "0");
    }

    #[test]
    fn rejects_bad_input() {
        let f = PrimeField::new(7).unwrap();
        assert!(MultiPoly::parse(f, 2, "X3").is_err());
        assert!(MultiPoly::parse(f, 2, "X1 +").is_err());
        assert!(MultiPoly::parse(f, 2, "Y").is_err());
        assert!(MultiPoly::parse(f, 2, "(X1").is_err());
    }
}
