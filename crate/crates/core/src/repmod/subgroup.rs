use std::collections::BTreeSet;

use super::flag::ENUMERATION_RANK_LIMIT;
use super::{CharF2, Label, RepE};
use crate::error::{Error, Result};
use crate::linalg::{annihilator, canonical_basis, span_elements, F2Span};

/// Subgroup `F <= E = F2^l`, held as a canonical (reduced echelon) basis of
/// group elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    rank: usize,
    basis: Vec<u64>,
}

impl Subgroup {
    /// Subgroup generated by `gens` (bitmasks of elements of `E`).
    pub fn new(rank: usize, gens: &[u64]) -> Result<Self> {
        if rank == 0 || rank > 64 {
            return Err(Error::Input(format!("unsupported rank {rank}")));
        }
        if let Some(g) = gens.iter().find(|&&g| rank < 64 && g >> rank != 0) {
            return Err(Error::Input(format!("element {g:#b} outside F2^{rank}")));
        }
        Ok(Subgroup::from_canonical(
            rank,
            canonical_basis(gens.iter().copied()),
        ))
    }

    pub(crate) fn from_canonical(rank: usize, basis: Vec<u64>) -> Self {
        Subgroup { rank, basis }
    }

    pub fn trivial(rank: usize) -> Self {
        Subgroup::from_canonical(rank, Vec::new())
    }

    pub fn whole(rank: usize) -> Self {
        Subgroup::from_canonical(rank, (0..rank).map(|i| 1u64 << i).collect())
    }

    /// Every subgroup of `F2^rank`, ordered by dimension and then basis.
    pub fn all(rank: usize) -> Result<Vec<Subgroup>> {
        if rank == 0 || rank > ENUMERATION_RANK_LIMIT {
            return Err(Error::Resource(format!(
                "subgroup enumeration supports ranks 1..={ENUMERATION_RANK_LIMIT}, got {rank}"
            )));
        }
        let mut layers: Vec<BTreeSet<Vec<u64>>> = vec![BTreeSet::from([Vec::new()])];
        for _ in 0..rank {
            let next: BTreeSet<Vec<u64>> = layers
                .last()
                .unwrap()
                .iter()
                .flat_map(|b| {
                    let span = F2Span::from_vectors(b.iter().copied());
                    (1..1u64 << rank)
                        .filter(move |&v| !span.contains(v))
                        .map(move |v| canonical_basis(b.iter().copied().chain([v])))
                })
                .collect();
            layers.push(next);
        }
        Ok(layers
            .into_iter()
            .flatten()
            .map(|b| Subgroup::from_canonical(rank, b))
            .collect())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    /// Basis rows as 0/1 coordinate vectors.
    pub fn basis_coords(&self) -> Vec<Vec<i64>> {
        self.basis
            .iter()
            .map(|&b| CharF2::from_bits(self.rank, b).coords())
            .collect()
    }

    pub fn elements(&self) -> Vec<u64> {
        span_elements(&self.basis)
    }

    pub fn contains(&self, v: u64) -> bool {
        F2Span::from_vectors(self.basis.iter().copied()).contains(v)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.basis.iter().all(|&b| other.contains(b))
    }

    /// Canonical basis of the annihilator `F°` in `E*`.
    pub fn annihilator(&self) -> Vec<CharF2> {
        annihilator(&self.basis, self.rank)
            .into_iter()
            .map(|b| CharF2::from_bits(self.rank, b))
            .collect()
    }

    /// Whether `alpha` vanishes on all of `F`.
    pub fn is_annihilated_by(&self, alpha: &CharF2) -> bool {
        self.basis.iter().all(|&v| alpha.vanishes_on(v))
    }

    /// The image of `self` in `E/F`, in the coordinates dual to the
    /// canonical basis of `F°` (the coordinates used by [`fixed_subrep`]).
    pub fn quotient_image(&self, f: &Subgroup) -> Result<Subgroup> {
        if !f.is_subgroup_of(self) {
            return Err(Error::Input(
                "quotient by a subgroup that is not contained".into(),
            ));
        }
        let dual = f.annihilator();
        let k = dual.len();
        let image: Vec<u64> = self
            .basis
            .iter()
            .map(|&v| {
                dual.iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, b)| acc | ((!b.vanishes_on(v)) as u64) << i)
            })
            .collect();
        if k == 0 {
            return Ok(Subgroup::from_canonical(0, Vec::new()));
        }
        Subgroup::new(k, &image)
    }
}

/// `dim U^F`: total multiplicity of the characters vanishing on `F`.
pub fn fixed_dim(u: &RepE, f: &Subgroup) -> u64 {
    u.entries()
        .filter(|(a, _)| f.is_annihilated_by(a))
        .map(|(_, m)| m)
        .sum()
}

/// `U^F` as a representation of `E/F`.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedSubrep {
    /// The table over `(E/F)* = F°`, in coordinates of `dual_basis`.
    pub rep: RepE,
    /// Basis of `F°` in `E*` fixing the coordinates of `rep`.
    pub dual_basis: Vec<CharF2>,
    /// Rank of `E`.
    pub ambient_rank: usize,
}

impl FixedSubrep {
    /// Maps a character of `E/F` back to `E*`.
    pub fn lift(&self, a: &CharF2) -> CharF2 {
        self.dual_basis
            .iter()
            .enumerate()
            .filter(|(i, _)| a.coord(*i))
            .fold(CharF2::trivial(self.ambient_rank), |acc, (_, b)| acc.add(b))
    }

    /// The table relabeled in `E*`.
    pub fn lifted(&self) -> RepE {
        self.rep.map_labels(self.ambient_rank, |a| self.lift(a))
    }
}

/// Restricts `U` to the characters vanishing on `F` and re-expresses them
/// over `E/F`, whose rank is `l - dim F`.
pub fn fixed_subrep(u: &RepE, f: &Subgroup) -> Result<FixedSubrep> {
    if u.rank() != f.rank() {
        return Err(Error::Structure(format!(
            "subgroup of rank {} for a representation of rank {}",
            f.rank(),
            u.rank()
        )));
    }
    let dual_basis = f.annihilator();
    let k = dual_basis.len();
    let span = F2Span::from_vectors(dual_basis.iter().map(CharF2::bits));
    let mut rep = RepE::empty(k);
    for (a, m) in u.entries() {
        if let Some(c) = span.express(a.bits()) {
            rep.add(CharF2::from_bits(k, c), m);
        }
    }
    Ok(FixedSubrep {
        rep,
        dual_basis,
        ambient_rank: u.rank(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subgroup_counts() {
        // Gaussian binomial sums: 2, 5, 16, 67 subspaces.
        for (l, n) in [(1, 2), (2, 5), (3, 16), (4, 67)] {
            assert_eq!(Subgroup::all(l).unwrap().len(), n);
        }
    }

    #[test]
    fn fixed_subrep_edge_cases() {
        let a = CharF2::from_bits(2, 0b01);
        let b = CharF2::from_bits(2, 0b10);
        let u =
            RepE::from_entries(2, [(CharF2::from_bits(2, 0), 2), (a, 3), (b, 1), (a.add(&b), 1)]).unwrap();

        let same = fixed_subrep(&u, &Subgroup::trivial(2)).unwrap();
        assert_eq!(same.lifted(), u);

        let all = fixed_subrep(&u, &Subgroup::whole(2)).unwrap();
        assert_eq!(all.rep.rank(), 0);
        assert_eq!(all.rep.dim(), 2);
        assert_eq!(all.rep.fixed_dim(), 2);

        // ker alpha is generated by the element (0,1).
        let ker_a = Subgroup::new(2, &[0b10]).unwrap();
        let r = fixed_subrep(&u.without_fixed(), &ker_a).unwrap();
        assert_eq!(r.rep.rank(), 1);
        assert_eq!(
            r.rep,
            RepE::from_entries(1, [(CharF2::from_bits(1, 1), 3)]).unwrap()
        );
        assert_eq!(r.dual_basis, vec![a]);
    }

    #[test]
    fn quotient_image_requires_containment() {
        let f = Subgroup::new(2, &[0b01]).unwrap();
        let g = Subgroup::new(2, &[0b10]).unwrap();
        assert!(g.quotient_image(&f).is_err());
        let img = Subgroup::whole(2).quotient_image(&f).unwrap();
        assert_eq!(img.dim(), 1);
    }
}
