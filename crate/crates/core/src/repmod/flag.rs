use std::collections::BTreeSet;

use num_traits::Zero;

use super::{CharF2, Label, Subgroup, Weight};
use crate::error::{Error, Result};
use crate::linalg::{annihilator, inverse_q, to_rational_row, F2Span};
use crate::polyring::Rational;

/// Largest rank for which all flags or all subgroups are enumerated.
pub const ENUMERATION_RANK_LIMIT: usize = 6;

/// Complete flag `0 = E^0 < E^1 < ... < E^l = E*`, carried by an adapted
/// dual basis `T_1, ..., T_l` with `E^i = span(T_1..T_i)`.
///
/// The matching flag in `E` is `E_{l-i} = (E^i)°`; see
/// [`FlagE::subgroup_chain`].
#[derive(Debug, Clone)]
pub struct FlagE {
    rank: usize,
    basis: Vec<CharF2>,
    span: F2Span,
}

impl PartialEq for FlagE {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl Eq for FlagE {}

impl FlagE {
    pub fn from_dual_basis(basis: Vec<CharF2>) -> Result<Self> {
        let rank = match basis.first() {
            Some(t) => t.rank(),
            None => return Err(Error::Input("a flag needs at least one covector".into())),
        };
        if basis.len() != rank {
            return Err(Error::Input(format!(
                "{} covectors given for rank {rank}",
                basis.len()
            )));
        }
        let mut span = F2Span::new();
        for t in &basis {
            if t.rank() != rank {
                return Err(Error::Structure(format!("covector {t} has rank {}", t.rank())));
            }
            if !span.insert(t.bits()) {
                return Err(Error::Input(format!("covector {t} is dependent on earlier ones")));
            }
        }
        Ok(FlagE { rank, basis, span })
    }

    /// The coordinate flag `T_j = e_j`.
    pub fn standard(rank: usize) -> Self {
        FlagE::from_dual_basis((0..rank).map(|j| CharF2::from_bits(rank, 1 << j)).collect())
            .expect("standard basis is independent")
    }

    /// Flag with prescribed steps: `chain[i]` spans `E^{i+1}`. The adapted
    /// basis takes the least element of each `E^j \ E^{j-1}`.
    pub fn from_chain(rank: usize, chain: &[Vec<CharF2>]) -> Result<Self> {
        if chain.len() != rank {
            return Err(Error::Input(format!(
                "a complete flag of rank {rank} has {rank} steps, got {}",
                chain.len()
            )));
        }
        let mut prev = F2Span::new();
        let mut basis = Vec::with_capacity(rank);
        for (i, step) in chain.iter().enumerate() {
            let cur = F2Span::from_vectors(step.iter().map(CharF2::bits));
            if cur.dim() != i + 1 || basis.iter().any(|t: &CharF2| !cur.contains(t.bits())) {
                return Err(Error::Input(format!("step {} is not a flag step", i + 1)));
            }
            let fresh = step
                .iter()
                .find(|a| !prev.contains(a.bits()))
                .expect("step is larger than the previous one");
            let t = CharF2::from_bits(rank, prev.coset_min(fresh.bits()));
            prev.insert(t.bits());
            basis.push(t);
        }
        FlagE::from_dual_basis(basis)
    }

    /// Same flag, adapted basis replaced by the canonical one.
    pub fn canonical(&self) -> FlagE {
        let mut prev = F2Span::new();
        let mut basis = Vec::with_capacity(self.rank);
        for t in &self.basis {
            let c = CharF2::from_bits(self.rank, prev.coset_min(t.bits()));
            prev.insert(c.bits());
            basis.push(c);
        }
        FlagE::from_dual_basis(basis).expect("canonical basis spans the same flag")
    }

    /// Every complete flag of `F2^rank`, each in canonical form, in a
    /// deterministic order.
    pub fn all(rank: usize) -> Result<Vec<FlagE>> {
        if rank == 0 || rank > ENUMERATION_RANK_LIMIT {
            return Err(Error::Resource(format!(
                "flag enumeration supports ranks 1..={ENUMERATION_RANK_LIMIT}, got {rank}"
            )));
        }
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        extend_flags(rank, &mut prefix, &mut out);
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dual_basis(&self) -> &[CharF2] {
        &self.basis
    }

    /// Coordinates of `alpha` in the adapted basis (bit `j` is `T_{j+1}`).
    pub fn coords(&self, alpha: &CharF2) -> u64 {
        self.span
            .express(alpha.bits())
            .expect("the adapted basis spans E*")
    }

    /// Least `j` with `alpha` in `E^j` (0 for the trivial character).
    pub fn level(&self, alpha: &CharF2) -> usize {
        let c = self.coords(alpha);
        (64 - c.leading_zeros()) as usize
    }

    /// Elements of `E^i`.
    pub fn step_elements(&self, i: usize) -> Vec<CharF2> {
        crate::linalg::span_elements(&self.basis[..i].iter().map(CharF2::bits).collect::<Vec<_>>())
            .into_iter()
            .map(|b| CharF2::from_bits(self.rank, b))
            .collect()
    }

    /// The flag `E_0 <= ... <= E_l` in `E` with `E_{l-i}` the annihilator of
    /// `E^i`.
    pub fn subgroup_chain(&self) -> Vec<Subgroup> {
        let l = self.rank;
        (0..=l)
            .map(|k| {
                let i = l - k;
                let dual: Vec<u64> = self.basis[..i].iter().map(CharF2::bits).collect();
                Subgroup::from_canonical(l, annihilator(&dual, l))
            })
            .collect()
    }
}

fn extend_flags(rank: usize, prefix: &mut Vec<CharF2>, out: &mut Vec<FlagE>) {
    if prefix.len() == rank {
        out.push(FlagE::from_dual_basis(prefix.clone()).expect("independent prefix"));
        return;
    }
    let span = F2Span::from_vectors(prefix.iter().map(CharF2::bits));
    let reps: BTreeSet<u64> = (1..1u64 << rank)
        .filter(|&b| !span.contains(b))
        .map(|b| span.coset_min(b))
        .collect();
    for r in reps {
        prefix.push(CharF2::from_bits(rank, r));
        extend_flags(rank, prefix, out);
        prefix.pop();
    }
}

/// Complete flag in `E* = Q^l`, carried by an adapted basis of primitive
/// integer covectors (first nonzero entry positive).
#[derive(Debug, Clone)]
pub struct RationalFlag {
    basis: Vec<Weight>,
    inverse: Vec<Vec<Rational>>,
}

impl PartialEq for RationalFlag {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl Eq for RationalFlag {}

impl RationalFlag {
    /// Normalizes each covector to its primitive representative and checks
    /// independence.
    pub fn from_dual_basis(basis: Vec<Weight>) -> Result<Self> {
        let rank = match basis.first() {
            Some(t) => t.rank(),
            None => return Err(Error::Input("a flag needs at least one covector".into())),
        };
        if basis.len() != rank || basis.iter().any(|t| t.rank() != rank) {
            return Err(Error::Input(format!(
                "a rank {rank} flag needs {rank} covectors of length {rank}"
            )));
        }
        let basis: Vec<Weight> = basis.iter().map(Weight::primitive).collect();
        let rows: Vec<Vec<Rational>> = basis.iter().map(|t| to_rational_row(t.as_slice())).collect();
        let inverse =
            inverse_q(&rows).ok_or_else(|| Error::Input("flag covectors are linearly dependent".into()))?;
        Ok(RationalFlag { basis, inverse })
    }

    pub fn standard(rank: usize) -> Self {
        RationalFlag::from_dual_basis(
            (0..rank)
                .map(|j| Weight::new((0..rank).map(|k| (k == j) as i64).collect()))
                .collect(),
        )
        .expect("standard basis is independent")
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn dual_basis(&self) -> &[Weight] {
        &self.basis
    }

    /// Rational coordinates `c` with `w = sum_j c_j T_j`.
    pub fn coords(&self, w: &Weight) -> Vec<Rational> {
        let l = self.rank();
        (0..l)
            .map(|j| {
                w.as_slice()
                    .iter()
                    .zip(&self.inverse)
                    .fold(Rational::zero(), |acc, (&x, row)| {
                        acc + Rational::from_integer(x.into()) * &row[j]
                    })
            })
            .collect()
    }

    /// Least `j` with the line of `w` inside `E^j` (0 for the zero weight).
    pub fn level(&self, w: &Weight) -> usize {
        self.coords(w)
            .iter()
            .rposition(|c| !c.is_zero())
            .map_or(0, |j| j + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flag_counts_match_gaussian_factorials() {
        // Complete flags of F2^l number prod_{i=1}^{l} (2^i - 1).
        for (l, n) in [(1, 1), (2, 3), (3, 21), (4, 315)] {
            let flags = FlagE::all(l).unwrap();
            assert_eq!(flags.len(), n);
            let distinct: BTreeSet<Vec<u64>> = flags
                .iter()
                .map(|f| f.dual_basis().iter().map(CharF2::bits).collect())
                .collect();
            assert_eq!(distinct.len(), n);
        }
        assert!(FlagE::all(7).is_err());
    }

    #[test]
    fn canonical_basis_uses_least_representatives() {
        let f = FlagE::from_dual_basis(vec![CharF2::from_bits(2, 0b11), CharF2::from_bits(2, 0b10)]).unwrap();
        let c = f.canonical();
        assert_eq!(c.dual_basis()[0].bits(), 0b11);
        assert_eq!(c.dual_basis()[1].bits(), 0b01);
        let chain = FlagE::from_chain(
            2,
            &[
                vec![CharF2::from_bits(2, 0b11)],
                vec![CharF2::from_bits(2, 0b10), CharF2::from_bits(2, 0b11)],
            ],
        )
        .unwrap();
        assert_eq!(chain, c);
    }

    #[test]
    fn levels_and_annihilators() {
        let f = FlagE::from_dual_basis(vec![CharF2::from_bits(2, 0b01), CharF2::from_bits(2, 0b10)]).unwrap();
        assert_eq!(f.level(&CharF2::from_bits(2, 0)), 0);
        assert_eq!(f.level(&CharF2::from_bits(2, 0b01)), 1);
        assert_eq!(f.level(&CharF2::from_bits(2, 0b11)), 2);
        let chain = f.subgroup_chain();
        assert_eq!(chain.iter().map(Subgroup::dim).collect::<Vec<_>>(), vec![0, 1, 2]);
        // E_1 = (E^1)° = ker alpha.
        assert!(chain[1]
            .elements()
            .iter()
            .all(|&v| CharF2::from_bits(2, 1).vanishes_on(v)));
    }

    #[test]
    fn dependent_covectors_rejected() {
        let a = CharF2::from_bits(2, 0b11);
        assert!(FlagE::from_dual_basis(vec![a, a]).is_err());
        assert!(
            RationalFlag::from_dual_basis(vec![Weight::new(vec![1, 2]), Weight::new(vec![2, 4])]).is_err()
        );
    }

    #[test]
    fn rational_coordinates() {
        let f =
            RationalFlag::from_dual_basis(vec![Weight::new(vec![2, 2]), Weight::new(vec![0, 1])]).unwrap();
        assert_eq!(f.dual_basis()[0], Weight::new(vec![1, 1]));
        let c = f.coords(&Weight::new(vec![3, 5]));
        assert_eq!(c, to_rational_row(&[3, 2]));
        assert_eq!(f.level(&Weight::new(vec![-2, -2])), 1);
        assert_eq!(f.level(&Weight::new(vec![0, 1])), 2);
    }
}
