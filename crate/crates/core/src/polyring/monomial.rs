use std::cmp::Ordering;
use std::fmt;

/// A monomial `T1^r1 * ... * Tl^rl`, stored as its exponent vector.
///
/// Ordered graded-lexicographically with `Tl > ... > T1`: total degree
/// first, then the exponent of the highest variable, and so on downwards.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// `T_{index+1}^exp` (zero-based variable index).
    pub fn var_power(nvars: usize, index: usize, exp: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[index] = exp;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Highest zero-based variable index with a positive exponent.
    pub fn last_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub(crate) fn with_exp(&self, index: usize, exp: u32) -> Monomial {
        let mut m = self.clone();
        m.exps[index] = exp;
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.iter().rev().cmp(other.exps.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "T{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_order_prefers_high_variables() {
        let t1sq = Monomial::new(vec![2, 0]);
        let t1t2 = Monomial::new(vec![1, 1]);
        let t2sq = Monomial::new(vec![0, 2]);
        let t2 = Monomial::new(vec![0, 1]);
        assert!(t1sq < t1t2 && t1t2 < t2sq);
        assert!(t2 < t1sq);
        assert_eq!(t1t2.to_string(), "T1*T2");
        assert_eq!(Monomial::one(3).to_string(), "1");
    }
}
