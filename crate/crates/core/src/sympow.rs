//! Characters of symmetric powers `S^d(U*)` and the sizes `k` for which
//! `U[k] = P[1] + ... + P[k]`, `P[j] = S^{2j-1}(U*)`, dominates `V` along a
//! flag.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::F2Span;
use crate::repmod::{CharF2, FlagE, Label, RepE, Representation};
use crate::report::CheckItem;

/// Largest `k` tried by [`min_embedding_k`].
pub const MAX_K: usize = 4096;

fn overflow(what: &str) -> Error {
    Error::Resource(format!("{what} does not fit in 64 bits"))
}

/// `C(n, k)` with checked arithmetic.
fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return Err(overflow("binomial coefficient"));
        }
    }
    Ok(acc as u64)
}

/// Multiplicities of `S^d(U*)`.
///
/// Over `F2`-valued characters `U*` has the same table as `U`. A monomial
/// of degree `k` in the `m` variables labelled `alpha` carries the
/// character `k alpha`, and there are `C(m + k - 1, k)` of them; the table
/// is assembled label by label, tracking degree used and character.
pub fn sym_multiplicities(u: &RepE, d: u32) -> Result<RepE> {
    let d = d as usize;
    // layer[deg]: accumulated character -> count.
    let mut layer: Vec<BTreeMap<u64, u64>> = vec![BTreeMap::new(); d + 1];
    layer[0].insert(0, 1);
    for (alpha, m) in u.entries() {
        let mut next: Vec<BTreeMap<u64, u64>> = vec![BTreeMap::new(); d + 1];
        for (used, row) in layer.iter().enumerate() {
            for (&chi, &count) in row {
                for k in 0..=d - used {
                    let ways = binomial(m + k as u64 - 1, k as u64)?;
                    let c = if k % 2 == 1 { chi ^ alpha.bits() } else { chi };
                    let add = count.checked_mul(ways).ok_or_else(|| overflow("multiplicity"))?;
                    let slot = next[used + k].entry(c).or_insert(0);
                    *slot = slot.checked_add(add).ok_or_else(|| overflow("multiplicity"))?;
                }
            }
        }
        layer = next;
    }
    let l = u.rank();
    RepE::from_entries(
        l,
        layer[d]
            .iter()
            .map(|(&c, &m)| (CharF2::new(l, c).expect("bits stay within rank"), m)),
    )
}

/// `S^d(U*)` together with its source and degree.
#[derive(Debug, Clone, PartialEq)]
pub struct SymPowerTable {
    pub base: RepE,
    pub degree: u32,
    pub table: RepE,
}

impl SymPowerTable {
    pub fn new(base: &RepE, degree: u32) -> Result<Self> {
        Ok(SymPowerTable {
            base: base.clone(),
            degree,
            table: sym_multiplicities(base, degree)?,
        })
    }
}

/// One row of the table returned by [`min_embedding_k`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingRow {
    pub i: usize,
    pub u_i: u64,
    pub v_i: u64,
    /// `dim P[j]_i` for `j = 1..=k`.
    pub p_i: Vec<u64>,
    /// `dim U[k]_i`.
    pub uk_i: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub k: usize,
    pub d: u64,
    /// Adapted dual basis of the flag used.
    pub flag: Vec<Vec<i64>>,
    pub rows: Vec<EmbeddingRow>,
    pub dim_uk: u64,
    pub dim_v: u64,
    /// `dim P[j]_i >= dim U_i` and `dim U[k]_i >= k dim U_i`.
    pub claims: Vec<CheckItem>,
}

/// Flag whose adapted basis is the first independent characters of the
/// support of `U`, in label order.
pub fn support_flag(u: &RepE) -> Result<FlagE> {
    let l = u.rank();
    let mut span = F2Span::new();
    let mut basis = Vec::with_capacity(l);
    for a in u.labels().filter(|a| !a.is_trivial()) {
        if span.insert(a.bits()) {
            basis.push(*a);
        }
    }
    if basis.len() < l {
        return Err(Error::Hypothesis(format!(
            "the kernels of the characters of U intersect in a subgroup of dimension {}",
            l - basis.len()
        )));
    }
    FlagE::from_dual_basis(basis)
}

/// Least `k >= 1` with `dim U[k]_i > dim V_i` for all `i` and
/// `dim U[k] - dim V >= d`.
pub fn min_embedding_k(u: &RepE, v: &RepE, d: u64, flag: Option<&FlagE>) -> Result<Embedding> {
    if u.rank() != v.rank() {
        return Err(Error::Structure(format!(
            "representations of ranks {} and {}",
            u.rank(),
            v.rank()
        )));
    }
    if u.dim() == u.fixed_dim() {
        return Err(Error::Hypothesis("U has no nontrivial characters".into()));
    }
    if v.fixed_dim() > 0 {
        return Err(Error::Precondition(format!(
            "V^E must be 0, found dimension {}",
            v.fixed_dim()
        )));
    }
    let spanning = support_flag(u)?;
    let flag = flag.cloned().unwrap_or(spanning);
    let l = u.rank();
    let u_dims = u.decompose(&flag)?.dims();
    if let Some(i) = u_dims.iter().position(|&x| x == 0) {
        return Err(Error::Hypothesis(format!("U_{} = 0 for the chosen flag", i + 1)));
    }
    let v_dims = v.decompose(&flag)?.dims();

    let mut p_dims: Vec<Vec<u64>> = vec![Vec::new(); l];
    let mut uk = vec![0u64; l];
    let mut dim_uk = 0u64;
    for k in 1..=MAX_K {
        let p = sym_multiplicities(u, (2 * k - 1) as u32)?;
        for (i, x) in p.decompose(&flag)?.dims().into_iter().enumerate() {
            p_dims[i].push(x);
            uk[i] = uk[i].checked_add(x).ok_or_else(|| overflow("dim U[k]"))?;
        }
        dim_uk = dim_uk.checked_add(p.dim()).ok_or_else(|| overflow("dim U[k]"))?;
        let dominates = uk.iter().zip(&v_dims).all(|(a, b)| a > b);
        if dominates && dim_uk >= v.dim().saturating_add(d) {
            let p_ok = (0..l).all(|i| p_dims[i].iter().all(|&x| x >= u_dims[i]));
            let uk_ok = (0..l).all(|i| uk[i] >= k as u64 * u_dims[i]);
            let claims = vec![
                CheckItem::new(
                    "dim P[j]_i >= dim U_i",
                    p_ok,
                    format!("j = 1..{k}, U_i {u_dims:?}"),
                ),
                CheckItem::new(
                    "dim U[k]_i >= k dim U_i",
                    uk_ok,
                    format!("U[k]_i {uk:?}, k = {k}"),
                ),
            ];
            let rows = (0..l)
                .map(|i| EmbeddingRow {
                    i: i + 1,
                    u_i: u_dims[i],
                    v_i: v_dims[i],
                    p_i: p_dims[i].clone(),
                    uk_i: uk[i],
                })
                .collect();
            return Ok(Embedding {
                k,
                d,
                flag: flag.dual_basis().iter().map(Label::coords).collect(),
                rows,
                dim_uk,
                dim_v: v.dim(),
                claims,
            });
        }
    }
    Err(Error::Resource(format!("no k <= {MAX_K} suffices")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(l: usize, entries: &[(u64, u64)]) -> RepE {
        RepE::from_entries(l, entries.iter().map(|&(b, m)| (CharF2::from_bits(l, b), m))).unwrap()
    }

    #[test]
    fn small_tables() {
        assert_eq!(sym_multiplicities(&e(1, &[(1, 1)]), 3).unwrap(), e(1, &[(1, 1)]));
        assert_eq!(
            sym_multiplicities(&e(2, &[(0b01, 1), (0b10, 1)]), 3).unwrap(),
            e(2, &[(0b01, 2), (0b10, 2)])
        );
        let u = e(3, &[(0b001, 2), (0b110, 3)]);
        assert_eq!(sym_multiplicities(&u, 0).unwrap(), e(3, &[(0, 1)]));
        assert_eq!(
            sym_multiplicities(&RepE::new(2).unwrap(), 0).unwrap(),
            e(2, &[(0, 1)])
        );
        assert!(sym_multiplicities(&RepE::new(2).unwrap(), 2).unwrap().is_zero());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert!(binomial(200, 100).is_err());
    }

    #[test]
    fn circle_sizes() {
        for m in 0..5u64 {
            for d in 0..5u64 {
                let v = e(1, &[(1, m)]);
                let r = min_embedding_k(&e(1, &[(1, 1)]), &v, d, None).unwrap();
                let expect = (m + 1).max(m + d);
                assert_eq!(r.k as u64, expect.max(1), "m = {m}, d = {d}");
                assert!(r.claims.iter().all(CheckItem::passed));
            }
        }
        let r = min_embedding_k(&e(1, &[(1, 1)]), &e(1, &[(1, 1)]), 0, None).unwrap();
        assert_eq!(r.k, 2);
    }

    #[test]
    fn spanning_failure() {
        let err = min_embedding_k(&e(2, &[(0b01, 1)]), &e(2, &[]), 1, None).unwrap_err();
        assert!(err.is_hypothesis());
        let err = min_embedding_k(&e(2, &[(0b01, 1), (0b10, 1)]), &e(2, &[(0, 1)]), 1, None).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn rank_two_table() {
        let u = e(2, &[(0b01, 1), (0b10, 1)]);
        let v = e(2, &[(0b01, 3), (0b11, 4)]);
        let r = min_embedding_k(&u, &v, 2, None).unwrap();
        assert!(r.claims.iter().all(CheckItem::passed));
        assert!(r.rows.iter().all(|row| row.uk_i > row.v_i));
        assert!(r.dim_uk >= r.dim_v + 2);
    }
}
