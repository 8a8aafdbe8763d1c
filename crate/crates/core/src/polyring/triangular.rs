use super::{Field, Monomial, Poly};
use crate::error::{Error, Result};

/// Relations `g_1, ..., g_l` where `g_j` lives in `K[T1..Tj]` and has the
/// form `c * Tj^dj + (terms of Tj-degree < dj)` with `c` a nonzero constant.
///
/// The leading monomials `Tj^dj` are pairwise coprime, so division by the
/// system yields a unique remainder whose `Tj`-degree is below `dj` for
/// every `j`. The quotient ring therefore has the monomial basis
/// `prod Tj^rj`, `0 <= rj < dj`.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangularSystem<K: Field> {
    gens: Vec<Poly<K>>,
    degrees: Vec<u32>,
    lead_inv: Vec<K>,
}

/// Outcome of an ideal-membership test.
#[derive(Debug, Clone, PartialEq)]
pub enum Membership<K: Field> {
    InIdeal,
    /// The nonzero normal form certifies non-membership.
    NotInIdeal(Poly<K>),
}

impl<K: Field> Membership<K> {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::InIdeal)
    }

    pub fn certificate(&self) -> Option<&Poly<K>> {
        match self {
            Membership::InIdeal => None,
            Membership::NotInIdeal(p) => Some(p),
        }
    }
}

impl<K: Field> TriangularSystem<K> {
    /// Validates the triangular shape of `gens`; `gens[j]` is `g_{j+1}`.
    pub fn new(gens: Vec<Poly<K>>) -> Result<Self> {
        let l = gens.len();
        if l == 0 {
            return Err(Error::Input(
                "a triangular system needs at least one relation".into(),
            ));
        }
        let mut degrees = Vec::with_capacity(l);
        let mut lead_inv = Vec::with_capacity(l);
        for (j, g) in gens.iter().enumerate() {
            if g.nvars() != l {
                return Err(Error::Structure(format!(
                    "relation {} has {} variables, expected {l}",
                    j + 1,
                    g.nvars()
                )));
            }
            if let Some((m, _)) = g.terms().find(|(m, _)| m.last_var().is_some_and(|v| v > j)) {
                return Err(Error::Input(format!(
                    "relation {} involves {m}, beyond T1..T{}",
                    j + 1,
                    j + 1
                )));
            }
            let d = g.degree_in(j);
            if d == 0 {
                return Err(Error::Input(format!(
                    "relation {} does not involve T{}",
                    j + 1,
                    j + 1
                )));
            }
            let lead_mono = Monomial::var_power(l, j, d);
            for (m, _) in g.terms() {
                if m.exp(j) == d && m != &lead_mono {
                    return Err(Error::Input(format!(
                        "relation {}: coefficient of T{}^{d} is not a constant (term {m})",
                        j + 1,
                        j + 1
                    )));
                }
            }
            let inv = g
                .coeff(&lead_mono)
                .inverse()
                .expect("leading coefficient is nonzero");
            degrees.push(d);
            lead_inv.push(inv);
        }
        Ok(TriangularSystem {
            gens,
            degrees,
            lead_inv,
        })
    }

    pub fn nvars(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[Poly<K>] {
        &self.gens
    }

    /// Leading degrees `d_1, ..., d_l`.
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// `prod_j d_j`, the dimension of the quotient as a vector space.
    pub fn quotient_dimension(&self) -> u128 {
        self.degrees.iter().map(|&d| d as u128).product()
    }

    fn check_shape(&self, p: &Poly<K>) -> Result<()> {
        if p.nvars() != self.nvars() {
            return Err(Error::Structure(format!(
                "polynomial in {} variables against a system in {}",
                p.nvars(),
                self.nvars()
            )));
        }
        Ok(())
    }

    /// Normal form of `p`: the unique `r` with `deg_{Tj} r < dj` for all `j`
    /// and `p - r` in the ideal.
    ///
    /// Variables are eliminated from the highest index down. Dividing by
    /// `g_j` only touches `T1..Tj`, so once `Tj` is reduced it stays reduced.
    pub fn reduce(&self, p: &Poly<K>) -> Result<Poly<K>> {
        self.check_shape(p)?;
        let mut current = p.clone();
        for j in (0..self.nvars()).rev() {
            if current.degree_in(j) >= self.degrees[j] {
                current = self.divide_out(current, j);
            }
        }
        Ok(current)
    }

    /// Univariate long division in `Tj` with coefficients in the other
    /// variables; returns the remainder.
    fn divide_out(&self, p: Poly<K>, j: usize) -> Poly<K> {
        let l = self.nvars();
        let d = self.degrees[j] as usize;
        let top = p.degree_in(j) as usize;
        let mut buckets: Vec<Poly<K>> = vec![Poly::zero(l); top + 1];
        for (m, c) in p.into_terms() {
            let k = m.exp(j) as usize;
            buckets[k].add_term(m.with_exp(j, 0), c);
        }
        let mut tail: Vec<(usize, Poly<K>)> = Vec::new();
        {
            let mut tb: Vec<Poly<K>> = vec![Poly::zero(l); d];
            for (m, c) in self.gens[j].terms() {
                let k = m.exp(j) as usize;
                if k < d {
                    tb[k].add_term(m.with_exp(j, 0), c.clone());
                }
            }
            for (k, b) in tb.into_iter().enumerate() {
                if !b.is_zero() {
                    tail.push((k, b));
                }
            }
        }
        let inv = &self.lead_inv[j];
        for k in (d..=top).rev() {
            let c = std::mem::replace(&mut buckets[k], Poly::zero(l));
            if c.is_zero() {
                continue;
            }
            let q = c.scale(&(-inv.clone()));
            for (kk, h) in &tail {
                let target = k - d + kk;
                let add = &q * h;
                buckets[target] = &buckets[target] + &add;
            }
        }
        let mut out = Poly::zero(l);
        for (k, b) in buckets.into_iter().enumerate().take(d) {
            for (m, c) in b.into_terms() {
                out.add_term(m.with_exp(j, k as u32), c);
            }
        }
        out
    }

    /// Decides whether `p` lies in the ideal, returning the normal form as a
    /// certificate when it does not.
    pub fn membership(&self, p: &Poly<K>) -> Result<Membership<K>> {
        let r = self.reduce(p)?;
        Ok(if r.is_zero() {
            Membership::InIdeal
        } else {
            Membership::NotInIdeal(r)
        })
    }

    /// Monomials `prod Tj^rj` with `rj < dj`, ascending graded-lex.
    pub fn quotient_basis(&self) -> Vec<Monomial> {
        let l = self.nvars();
        let mut out = vec![Monomial::one(l)];
        for j in 0..l {
            let d = self.degrees[j];
            out = out
                .iter()
                .flat_map(|m| (0..d).map(move |r| m.with_exp(j, r)))
                .collect();
        }
        out.sort();
        out
    }

    /// Number of quotient basis monomials in each total degree.
    pub fn hilbert_series(&self) -> Vec<u64> {
        let basis = self.quotient_basis();
        let top = basis.last().map_or(0, Monomial::degree) as usize;
        let mut counts = vec![0u64; top + 1];
        for m in &basis {
            counts[m.degree() as usize] += 1;
        }
        counts
    }
}
