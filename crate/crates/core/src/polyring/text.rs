//! Text form of polynomials: terms `c*T1^a*T2^b` joined by `+`.
//!
//! The printer emits terms in ascending graded-lex order, omits unit
//! coefficients and exponents, writes rationals as `num/den` and renders
//! negative coefficients as ` - `. The parser accepts arbitrary whitespace,
//! any term order, repeated factors, and both `t` and `T` as the variable
//! letter.

use std::fmt;

use super::{Field, Monomial, Poly};
use crate::error::{Error, Result};

impl<K: Field> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let (negative, abs) = c.split_sign();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<K: Field> Poly<K> {
    /// Parses the text form in `nvars` variables.
    pub fn parse(input: &str, nvars: usize) -> Result<Self> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut poly = Poly::zero(nvars);
        for (negative, body) in split_terms(&s)? {
            let (m, c) = parse_term::<K>(body, nvars)?;
            poly.add_term(m, if negative { -c } else { c });
        }
        Ok(poly)
    }
}

fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut negative = false;
    let mut start = 0;
    let mut expect_term = true;
    for (i, ch) in s.char_indices() {
        if ch == '+' || ch == '-' {
            // A sign directly after `/` belongs to a denominator literal.
            if s[..i].ends_with('/') {
                continue;
            }
            if !expect_term {
                out.push((negative, &s[start..i]));
                negative = false;
            } else if i != start {
                return Err(Error::Parse(format!("misplaced sign in `{s}`")));
            }
            if ch == '-' {
                negative = !negative;
            }
            start = i + 1;
            expect_term = true;
        } else {
            expect_term = false;
        }
    }
    if expect_term {
        return Err(Error::Parse(format!("dangling sign in `{s}`")));
    }
    out.push((negative, &s[start..]));
    Ok(out)
}

fn parse_term<K: Field>(body: &str, nvars: usize) -> Result<(Monomial, K)> {
    let mut exps = vec![0u32; nvars];
    let mut coeff = K::one();
    for factor in body.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{body}`")));
        }
        if let Some(rest) = factor.strip_prefix(['T', 't']) {
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (i, e),
                None => (rest, "1"),
            };
            let idx: usize = idx
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable `{factor}`")))?;
            let exp: u32 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
            if idx == 0 || idx > nvars {
                return Err(Error::Parse(format!("variable T{idx} outside T1..T{nvars}")));
            }
            exps[idx - 1] += exp;
        } else {
            coeff = coeff * K::parse_literal(factor)?;
        }
    }
    Ok((Monomial::new(exps), coeff))
}
