use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, Monomial};
use crate::error::{Error, Result};

/// Sparse polynomial in `K[T1, ..., Tl]`.
///
/// Zero coefficients are never stored; the zero polynomial is the empty map.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<K: Field> {
    nvars: usize,
    terms: BTreeMap<Monomial, K>,
}

impl<K: Field> Poly<K> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, K::one())
    }

    pub fn constant(nvars: usize, c: K) -> Self {
        Poly::term(Monomial::one(nvars), c)
    }

    pub fn term(m: Monomial, c: K) -> Self {
        let mut p = Poly::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The variable `T_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        Poly::term(Monomial::var_power(nvars, index, 1), K::one())
    }

    /// The linear form `sum_j coeffs[j] * T_{j+1}`.
    pub fn linear(coeffs: &[K]) -> Self {
        let n = coeffs.len();
        Poly::from_terms(
            n,
            coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| (Monomial::var_power(n, j, 1), c.clone())),
        )
    }

    /// Builds a polynomial from terms, combining repeated monomials.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, K)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial has the wrong number of variables");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> K {
        self.terms.get(m).cloned().unwrap_or_else(K::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &K)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    /// Largest exponent of `T_{index+1}` among the terms (0 for zero).
    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(index)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let sum = old.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub(crate) fn into_terms(self) -> BTreeMap<Monomial, K> {
        self.terms
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Structure(format!(
                "polynomials in {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &K) -> Self {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Poly::one(self.nvars);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Product of a sequence of polynomials; `one(nvars)` when empty.
    pub fn product<'a>(nvars: usize, factors: impl IntoIterator<Item = &'a Poly<K>>) -> Self {
        factors.into_iter().fold(Poly::one(nvars), |acc, f| &acc * f)
    }
}

// Operator forms panic on mismatched variable counts; use the `try_*`
// methods when the shapes come from untrusted input.
impl<K: Field> Add for &Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: &Poly<K>) -> Poly<K> {
        self.try_add(rhs).expect("polynomial shapes must agree")
    }
}

impl<K: Field> Sub for &Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: &Poly<K>) -> Poly<K> {
        self.try_sub(rhs).expect("polynomial shapes must agree")
    }
}

impl<K: Field> Mul for &Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: &Poly<K>) -> Poly<K> {
        self.try_mul(rhs).expect("polynomial shapes must agree")
    }
}

impl<K: Field> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        self.scale(&-K::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Rational, F2};

    fn p2(s: &str) -> Poly<F2> {
        Poly::parse(s, 2).unwrap()
    }

    #[test]
    fn frobenius_over_f2() {
        let s = p2("T1 + T2");
        assert_eq!(&s * &s, p2("T1^2 + T2^2"));
    }

    #[test]
    fn multiplication_by_one_is_identity() {
        let p = p2("T1^3 + T1*T2 + 1");
        assert_eq!(&p * &Poly::one(2), p);
    }

    #[test]
    fn hand_expansion() {
        let p = p2("T1^2 + T1*T2 + T2^2");
        let t2 = Poly::var(2, 1);
        assert_eq!(&p * &t2, p2("T1^2*T2 + T1*T2^2 + T2^3"));
    }

    #[test]
    fn mismatched_shapes_are_structural_errors() {
        let a: Poly<Rational> = Poly::var(2, 0);
        let b: Poly<Rational> = Poly::var(3, 0);
        assert!(matches!(a.try_add(&b), Err(Error::Structure(_))));
        assert!(matches!(a.try_mul(&b), Err(Error::Structure(_))));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a: Poly<Rational> = Poly::parse("3/2*T1 - T2", 2).unwrap();
        let b: Poly<Rational> = Poly::parse("-3/2*T1", 2).unwrap();
        let s = &a + &b;
        assert_eq!(s.len(), 1);
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn pow_matches_repeated_product() {
        let p: Poly<Rational> = Poly::parse("2*T1 + 3*T2", 2).unwrap();
        assert_eq!(p.pow(3), &(&p * &p) * &p);
        assert_eq!(p.pow(0), Poly::one(2));
    }
}
