//! Small dense linear algebra over `F2` (bitmask vectors) and `Q`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::polyring::Rational;

/// Echelon basis of a span of `F2` vectors, tracking how each row combines
/// the inserted vectors (bit `k` of the combination = inserted vector `k`).
#[derive(Debug, Clone, Default)]
pub(crate) struct F2Span {
    rows: Vec<(u64, u64)>,
    inserted: usize,
}

impl F2Span {
    pub fn new() -> Self {
        F2Span::default()
    }

    pub fn from_vectors(vs: impl IntoIterator<Item = u64>) -> Self {
        let mut s = F2Span::new();
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn eliminate(&self, mut v: u64, mut combo: u64) -> (u64, u64) {
        for &(r, c) in &self.rows {
            let pivot = 63 - r.leading_zeros();
            if v >> pivot & 1 == 1 {
                v ^= r;
                combo ^= c;
            }
        }
        (v, combo)
    }

    /// Adds `v`; returns whether it was independent of the span.
    pub fn insert(&mut self, v: u64) -> bool {
        let k = self.inserted;
        self.inserted += 1;
        let (r, c) = self.eliminate(v, 1u64 << k);
        if r == 0 {
            return false;
        }
        let pos = self
            .rows
            .iter()
            .position(|&(x, _)| x.leading_zeros() > r.leading_zeros())
            .unwrap_or(self.rows.len());
        self.rows.insert(pos, (r, c));
        true
    }

    /// Least element of the coset `v + span`.
    pub fn coset_min(&self, v: u64) -> u64 {
        self.eliminate(v, 0).0
    }

    pub fn contains(&self, v: u64) -> bool {
        self.eliminate(v, 0).0 == 0
    }

    /// Combination of inserted vectors equal to `v`, if `v` is in the span.
    /// Only meaningful when every inserted vector was independent.
    pub fn express(&self, v: u64) -> Option<u64> {
        let (r, c) = self.eliminate(v, 0);
        (r == 0).then_some(c)
    }
}

/// Reduced echelon basis (pivot = highest set bit), ascending. Two spans are
/// equal iff their canonical bases are equal.
pub(crate) fn canonical_basis(vs: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut rows: Vec<u64> = Vec::new();
    for v in vs {
        let mut r = v;
        for &x in &rows {
            if r >> (63 - x.leading_zeros()) & 1 == 1 {
                r ^= x;
            }
        }
        if r == 0 {
            continue;
        }
        let p = 63 - r.leading_zeros();
        for x in rows.iter_mut() {
            if *x >> p & 1 == 1 {
                *x ^= r;
            }
        }
        rows.push(r);
    }
    rows.sort_unstable();
    rows
}

/// All vectors of `F2^rank` orthogonal to every vector in `vs`, as a
/// canonical basis.
pub(crate) fn annihilator(vs: &[u64], rank: usize) -> Vec<u64> {
    let basis = canonical_basis(vs.iter().copied());
    let pivots: u64 = basis
        .iter()
        .fold(0, |acc, &r| acc | 1u64 << (63 - r.leading_zeros()));
    let mut out = Vec::new();
    for f in 0..rank {
        if pivots >> f & 1 == 1 {
            continue;
        }
        let mut x = 1u64 << f;
        for &r in &basis {
            if r >> f & 1 == 1 {
                x |= 1u64 << (63 - r.leading_zeros());
            }
        }
        out.push(x);
    }
    canonical_basis(out)
}

/// Every element of the span of `basis`.
pub(crate) fn span_elements(basis: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64];
    for &b in basis {
        let n = out.len();
        for i in 0..n {
            out.push(out[i] ^ b);
        }
    }
    out
}

pub(crate) fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

pub(crate) fn to_rational_row(v: &[i64]) -> Vec<Rational> {
    v.iter()
        .map(|&x| Rational::from_integer(BigInt::from(x)))
        .collect()
}

/// Reduced row echelon form over `Q`, zero rows dropped.
pub(crate) fn rref(rows: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    m
}

/// Inverse of a square matrix over `Q`.
pub(crate) fn inverse_q(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| Rational::from_integer(BigInt::from((i == j) as i64))));
            r
        })
        .collect();
    let red = rref(&aug);
    if red.len() < n
        || (0..n).any(|i| {
            red[i][i].is_zero()
                || red[i][..n]
                    .iter()
                    .enumerate()
                    .any(|(j, x)| j != i && !x.is_zero())
        })
    {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_membership_and_expression() {
        let mut s = F2Span::new();
        assert!(s.insert(0b011));
        assert!(s.insert(0b110));
        assert!(!s.insert(0b101));
        assert!(s.contains(0b101));
        assert!(!s.contains(0b001));
        assert_eq!(s.express(0b101), Some(0b011));
    }

    #[test]
    fn canonical_basis_is_unique() {
        assert_eq!(canonical_basis([0b011, 0b110]), canonical_basis([0b101, 0b011]));
        assert_eq!(canonical_basis([0b11, 0b11, 0]), vec![0b11]);
    }

    #[test]
    fn annihilators() {
        // ker of (1,0) in F2^2 is spanned by (0,1).
        assert_eq!(annihilator(&[0b01], 2), vec![0b10]);
        assert_eq!(annihilator(&[], 2), vec![0b01, 0b10]);
        assert!(annihilator(&[0b01, 0b10], 2).is_empty());
        let a = annihilator(&[0b011], 3);
        assert_eq!(a.len(), 2);
        for x in span_elements(&a) {
            assert_eq!((x & 0b011).count_ones() % 2, 0);
        }
    }

    #[test]
    fn rational_inverse_and_primitive() {
        let m = vec![to_rational_row(&[2, 1]), to_rational_row(&[1, 1])];
        let inv = inverse_q(&m).unwrap();
        assert_eq!(inv, vec![to_rational_row(&[1, -1]), to_rational_row(&[-1, 2])]);
        assert!(inverse_q(&[to_rational_row(&[1, 2]), to_rational_row(&[2, 4])]).is_none());
        assert_eq!(
            rref(&[to_rational_row(&[1, 2]), to_rational_row(&[2, 4])]).len(),
            1
        );
    }
}
