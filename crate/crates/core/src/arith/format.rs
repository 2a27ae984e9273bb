//! Canonical text form of polynomials.
//!
//! Terms in descending graded-lex order, joined by ` + ` / ` - `; a term is
//! `coeff*monomial` with the coefficient omitted when it is one; variables
//! are `d`, `l`, `u`, `t`; rational coefficients are `p/q`; quadratic
//! coefficients are `(p+q*sqrt(d))`. The zero polynomial is `0`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::{parse_rational, Field, Rational};
use super::poly::{Monomial, MultiPoly, Var};
use super::ArithError;

pub fn render<C: Field>(p: &MultiPoly<C>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let neg = c.has_minus_sign();
        let mag = if neg { -c.clone() } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&mag.render());
        } else if mag.is_one() {
            out.push_str(&m.to_string());
        } else {
            out.push_str(&mag.render());
            out.push('*');
            out.push_str(&m.to_string());
        }
    }
    out
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, what: &str) -> ArithError {
        ArithError::MalformedPolynomial { input: self.src.to_string(), pos: self.pos, expected: what.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<Rational, ArithError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("number"));
        }
        if self.peek() == Some('/') {
            self.pos += 1;
            let ds = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if self.pos == ds {
                return Err(self.err("denominator"));
            }
        }
        parse_rational(&self.src[start..self.pos])
    }

    fn integer(&mut self) -> Result<BigInt, ArithError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().map_err(|_| self.err("integer"))
    }

    fn sqrt_factor(&mut self) -> Result<Option<BigInt>, ArithError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with("sqrt") {
            self.pos += 4;
            if !self.eat('(') {
                return Err(self.err("("));
            }
            let d = self.integer()?;
            if !self.eat(')') {
                return Err(self.err(")"));
            }
            Ok(Some(d))
        } else {
            Ok(None)
        }
    }

    /// `(p+q*sqrt(d))` after the opening parenthesis.
    fn quad_body<C: Field>(&mut self) -> Result<C, ArithError> {
        let mut p = Rational::zero();
        let mut sq: Option<(Rational, BigInt)> = None;
        let mut first = true;
        loop {
            self.skip_ws();
            if self.eat(')') {
                break;
            }
            let sign = if self.eat('-') {
                -Rational::one()
            } else {
                if !first && !self.eat('+') {
                    return Err(self.err("+ or -"));
                }
                Rational::one()
            };
            first = false;
            if let Some(d) = self.sqrt_factor()? {
                sq = Some((sign, d));
                continue;
            }
            let r = self.number()?;
            if self.eat('*') {
                let d = self.sqrt_factor()?.ok_or_else(|| self.err("sqrt"))?;
                sq = Some((sign * r, d));
            } else {
                p += sign * r;
            }
        }
        C::from_parts(p, sq)
    }

    fn factor(&mut self) -> Result<Option<(Var, u32)>, ArithError> {
        self.skip_ws();
        let Some(c) = self.peek() else { return Ok(None) };
        let Some(v) = Var::from_symbol(c) else { return Ok(None) };
        self.pos += 1;
        let mut e = 1u32;
        if self.eat('^') {
            self.skip_ws();
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            e = self.src[start..self.pos].parse().map_err(|_| self.err("exponent"))?;
        }
        Ok(Some((v, e)))
    }

    fn monomial(&mut self, mut m: Monomial) -> Result<Monomial, ArithError> {
        loop {
            let (v, e) = self.factor()?.ok_or_else(|| self.err("variable"))?;
            m.0[v.index()] += e;
            if !self.eat('*') {
                return Ok(m);
            }
        }
    }

    fn term<C: Field>(&mut self) -> Result<(Monomial, C), ArithError> {
        self.skip_ws();
        let coeff: Option<C> = if self.eat('(') {
            Some(self.quad_body()?)
        } else if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            Some(C::from_rational(&self.number()?))
        } else {
            None
        };
        match coeff {
            Some(c) => {
                if self.eat('*') {
                    Ok((self.monomial(Monomial::ONE)?, c))
                } else {
                    Ok((Monomial::ONE, c))
                }
            }
            None => Ok((self.monomial(Monomial::ONE)?, C::one())),
        }
    }
}

/// Parses the canonical format (and any reordering or spacing of it).
pub fn parse<C: Field>(src: &str) -> Result<MultiPoly<C>, ArithError> {
    let mut p = Parser { src, pos: 0 };
    let mut terms = Vec::new();
    let mut negate = p.eat('-');
    loop {
        let (m, c) = p.term::<C>()?;
        terms.push((m, if negate { -c } else { c }));
        p.skip_ws();
        if p.pos == src.len() {
            break;
        }
        negate = if p.eat('+') {
            false
        } else if p.eat('-') {
            true
        } else {
            return Err(p.err("+ or -"));
        };
    }
    Ok(MultiPoly::from_terms(terms))
}
