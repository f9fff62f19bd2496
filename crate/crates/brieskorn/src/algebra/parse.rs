//! Text grammar for polynomials.
//!
//! Variables match `[a-z][a-z0-9_]*`, coefficients are integers or `a/b`
//! rationals, `^` raises to a power, `*` is optional between factors, terms
//! are separated by `+`/`-`, and whitespace is ignored.
//! Example: `x^5+x^2*y^2+y^5`.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One};

use crate::{Error, Result};

use super::{Monomial, OrderingSpec, SparsePoly};

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Block {
    S(usize),
    X(usize),
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn read_digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn read_ident(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_lowercase() {
            self.pos += 1;
            while self.pos < self.bytes.len()
                && (self.bytes[self.pos].is_ascii_lowercase()
                    || self.bytes[self.pos].is_ascii_digit()
                    || self.bytes[self.pos] == b'_')
            {
                self.pos += 1;
            }
        }
        &self.src[start..self.pos]
    }

    fn parse_number(&mut self) -> Result<BigRational> {
        let numer: BigInt = self
            .read_digits()?
            .parse()
            .map_err(|_| self.error("invalid integer"))?;
        if self.peek() == Some(b'/') {
            self.bump();
            let denom: BigInt = self
                .read_digits()?
                .parse()
                .map_err(|_| self.error("invalid denominator"))?;
            if denom == BigInt::from(0) {
                return Err(self.error("zero denominator"));
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }

    fn parse_exponent(&mut self) -> Result<u32> {
        self.read_digits()?
            .parse()
            .map_err(|_| self.error("exponent out of range"))
    }

    /// One term: optional sign handled by the caller; a product of factors.
    fn parse_term(
        &mut self,
        vars: &BTreeMap<String, Block>,
        n_s: usize,
        n_x: usize,
    ) -> Result<(Monomial, BigRational)> {
        let mut coef = BigRational::one();
        let mut s = vec![0u32; n_s];
        let mut x = vec![0u32; n_x];
        let mut saw_factor = false;
        loop {
            match self.peek() {
                Some(b'*') => {
                    if !saw_factor {
                        return Err(self.error("unexpected '*'"));
                    }
                    self.bump();
                    continue;
                }
                Some(c) if c.is_ascii_digit() => {
                    coef *= self.parse_number()?;
                    saw_factor = true;
                }
                Some(c) if c.is_ascii_lowercase() => {
                    let at = self.pos;
                    let name = self.read_ident();
                    let block = vars.get(name).copied().ok_or(Error::Parse {
                        position: at,
                        message: format!("unknown variable {name:?}"),
                    })?;
                    let exp = if self.peek() == Some(b'^') {
                        self.bump();
                        self.parse_exponent()?
                    } else {
                        1
                    };
                    match block {
                        Block::S(j) => {
                            s[j] = s[j]
                                .checked_add(exp)
                                .ok_or_else(|| self.error("exponent overflow"))?
                        }
                        Block::X(i) => {
                            x[i] = x[i]
                                .checked_add(exp)
                                .ok_or_else(|| self.error("exponent overflow"))?
                        }
                    }
                    saw_factor = true;
                }
                _ => break,
            }
        }
        if !saw_factor {
            return Err(self.error("expected a coefficient or a variable"));
        }
        Ok((Monomial::new(s, x), coef))
    }

    fn parse_poly(&mut self, vars: &BTreeMap<String, Block>, n_s: usize, n_x: usize) -> Result<SparsePoly> {
        let mut poly = SparsePoly::zero(n_s, n_x);
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.bump();
                true
            }
            Some(b'+') => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let (mono, coef) = self.parse_term(vars, n_s, n_x)?;
            poly.add_term(mono, if negative { -coef } else { coef });
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    negative = false;
                }
                Some(b'-') => {
                    self.bump();
                    negative = true;
                }
                None => break,
                Some(c) => {
                    return Err(self.error(format!("unexpected character {:?}", c as char)));
                }
            }
        }
        Ok(poly)
    }
}

fn var_table(ord: &OrderingSpec) -> BTreeMap<String, Block> {
    let mut vars = BTreeMap::new();
    for (j, name) in ord.s_vars().iter().enumerate() {
        vars.insert(name.clone(), Block::S(j));
    }
    for (i, name) in ord.x_vars().iter().enumerate() {
        vars.insert(name.clone(), Block::X(i));
    }
    vars
}

/// Parses a polynomial over the full (s, x) variable set of `ord`.
pub fn parse_poly(src: &str, ord: &OrderingSpec) -> Result<SparsePoly> {
    Parser::new(src).parse_poly(&var_table(ord), ord.n_s(), ord.n_x())
}

/// Parses an x-only polynomial (s-exponents all zero in the result layout).
pub fn parse_x_poly(src: &str, x_vars: &[String]) -> Result<SparsePoly> {
    let mut vars = BTreeMap::new();
    for (i, name) in x_vars.iter().enumerate() {
        vars.insert(name.clone(), Block::X(i));
    }
    Parser::new(src).parse_poly(&vars, 0, x_vars.len())
}

/// Lists the variable names appearing in a polynomial source string, in
/// order of first appearance.
pub fn infer_vars(src: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_lowercase() {
            let start = i;
            i += 1;
            while i < bytes.len()
                && (bytes[i].is_ascii_lowercase() || bytes[i].is_ascii_digit() || bytes[i] == b'_')
            {
                i += 1;
            }
            let name = src[start..i].to_string();
            if !out.contains(&name) {
                out.push(name);
            }
        } else {
            i += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;

    fn xy() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn parses_the_basic_grammar() {
        let p = parse_x_poly("x^5+x^2*y^2+y^5", &xy()).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(
            p.coeff(&Monomial::new(vec![], vec![2, 2])),
            BigRational::one()
        );
        // optional '*', implicit products, rational coefficients, whitespace
        let q = parse_x_poly(" 3/2 x y^2 - 2x + 1/3 ", &xy()).unwrap();
        assert_eq!(
            q.coeff(&Monomial::new(vec![], vec![1, 2])),
            BigRational::new(3.into(), 2.into())
        );
        assert_eq!(
            q.coeff(&Monomial::new(vec![], vec![1, 0])),
            BigRational::from_integer((-2).into())
        );
    }

    #[test]
    fn cancelling_terms_vanish() {
        let p = parse_x_poly("x-x", &xy()).unwrap();
        assert!(p.is_zero());
        let p = parse_x_poly("2*x*y-x*y-x*y+y", &xy()).unwrap();
        assert_eq!(p, parse_x_poly("y", &xy()).unwrap());
        assert!(BigRational::zero().is_zero());
    }

    #[test]
    fn reports_positions() {
        let err = parse_x_poly("x^5+z", &xy()).unwrap_err();
        match err {
            Error::Parse { position, .. } => assert_eq!(position, 4),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_x_poly("", &xy()).is_err());
        assert!(parse_x_poly("x^", &xy()).is_err());
        assert!(parse_x_poly("1/0", &xy()).is_err());
        assert!(parse_x_poly("x++y", &xy()).is_err());
    }

    #[test]
    fn infers_variables_in_first_appearance_order() {
        assert_eq!(infer_vars("x^5+x^2*y^2+y^5"), vec!["x", "y"]);
        assert_eq!(infer_vars("y2*z+ a_1"), vec!["y2", "z", "a_1"]);
    }
}
