use std::collections::BTreeMap;

use super::{CharF2, Decomposition, FlagE, Label, RationalFlag, Representation, Weight};
use crate::error::{Error, Result};
use crate::polyring::{Poly, Rational, F2};

/// Multiplicity table `alpha -> dim U^alpha` of a representation.
///
/// For tori the dimensions are complex dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RepTable<L: Label> {
    rank: usize,
    mults: BTreeMap<L, u64>,
}

/// Real representation of `E = (Z/2)^l`.
pub type RepE = RepTable<CharF2>;
/// Complex representation of a torus of rank `l`.
pub type RepT = RepTable<Weight>;

impl<L: Label> RepTable<L> {
    /// The zero representation. Rank 0 is rejected.
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Input("group rank must be at least 1".into()));
        }
        if rank > super::character::MAX_RANK {
            return Err(Error::Resource(format!("rank {rank} is not supported")));
        }
        Ok(RepTable::empty(rank))
    }

    /// Rank-unchecked constructor; quotients by the whole group have rank 0.
    pub(crate) fn empty(rank: usize) -> Self {
        RepTable {
            rank,
            mults: BTreeMap::new(),
        }
    }

    /// Builds a table from `(label, multiplicity)` pairs. Repeated labels are
    /// an input error; zero multiplicities are dropped.
    pub fn from_entries(rank: usize, entries: impl IntoIterator<Item = (L, u64)>) -> Result<Self> {
        let mut t = RepTable::new(rank)?;
        for (label, m) in entries {
            if label.rank() != rank {
                return Err(Error::Structure(format!(
                    "label {label} has rank {}, table has rank {rank}",
                    label.rank()
                )));
            }
            if t.mults.contains_key(&label) {
                return Err(Error::Input(format!("duplicate entry for {label}")));
            }
            if m > 0 {
                t.mults.insert(label, m);
            }
        }
        Ok(t)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> u64 {
        self.mults.values().sum()
    }

    /// Dimension of the fixed subspace, the multiplicity of the trivial label.
    pub fn fixed_dim(&self) -> u64 {
        self.mults.get(&L::trivial(self.rank)).copied().unwrap_or(0)
    }

    pub fn mult(&self, label: &L) -> u64 {
        self.mults.get(label).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&L, u64)> {
        self.mults.iter().map(|(l, &m)| (l, m))
    }

    pub fn labels(&self) -> impl Iterator<Item = &L> {
        self.mults.keys()
    }

    /// Adds `m` copies of `label`.
    pub(crate) fn add(&mut self, label: L, m: u64) {
        if m > 0 {
            *self.mults.entry(label).or_insert(0) += m;
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::Structure(format!(
                "direct sum of ranks {} and {}",
                self.rank, other.rank
            )));
        }
        let mut out = self.clone();
        for (l, m) in other.entries() {
            out.add(l.clone(), m);
        }
        Ok(out)
    }

    /// The table with the trivial summand removed.
    pub fn without_fixed(&self) -> Self {
        let mut out = self.clone();
        out.mults.remove(&L::trivial(self.rank));
        out
    }

    /// Relabels every entry; multiplicities of colliding labels add up.
    pub fn map_labels(&self, rank: usize, f: impl Fn(&L) -> L) -> Self {
        let mut out = RepTable::empty(rank);
        for (l, m) in self.entries() {
            out.add(f(l), m);
        }
        out
    }

    fn check_rank(&self, flag_rank: usize) -> Result<()> {
        if flag_rank != self.rank {
            return Err(Error::Structure(format!(
                "flag of rank {flag_rank} for a representation of rank {}",
                self.rank
            )));
        }
        Ok(())
    }

    fn split_by_level(&self, level: impl Fn(&L) -> usize) -> Decomposition<Self> {
        let mut parts = vec![RepTable::empty(self.rank); self.rank];
        let mut fixed_dim = 0;
        for (l, m) in self.entries() {
            match level(l) {
                0 => fixed_dim += m,
                j => parts[j - 1].add(l.clone(), m),
            }
        }
        Decomposition { fixed_dim, parts }
    }

    fn reject_trivial(&self) -> Result<()> {
        if self.fixed_dim() > 0 {
            return Err(Error::VanishingEuler(L::trivial(self.rank).to_string()));
        }
        Ok(())
    }
}

impl Representation for RepE {
    type Flag = FlagE;
    type Field = F2;

    fn dim(&self) -> u64 {
        RepTable::dim(self)
    }

    fn fixed_dim(&self) -> u64 {
        RepTable::fixed_dim(self)
    }

    fn decompose(&self, flag: &FlagE) -> Result<Decomposition<Self>> {
        self.check_rank(flag.rank())?;
        Ok(self.split_by_level(|a| flag.level(a)))
    }

    fn euler_poly(&self, flag: &FlagE) -> Result<Poly<F2>> {
        self.check_rank(flag.rank())?;
        self.reject_trivial()?;
        let l = self.rank;
        let mut e = Poly::one(l);
        for (a, m) in self.entries() {
            let c = flag.coords(a);
            let coeffs: Vec<F2> = (0..l).map(|j| F2(c >> j & 1 == 1)).collect();
            e = &e * &Poly::linear(&coeffs).pow(m as u32);
        }
        Ok(e)
    }
}

impl Representation for RepT {
    type Flag = RationalFlag;
    type Field = Rational;

    fn dim(&self) -> u64 {
        RepTable::dim(self)
    }

    fn fixed_dim(&self) -> u64 {
        RepTable::fixed_dim(self)
    }

    fn decompose(&self, flag: &RationalFlag) -> Result<Decomposition<Self>> {
        self.check_rank(flag.rank())?;
        Ok(self.split_by_level(|w| flag.level(w)))
    }

    fn euler_poly(&self, flag: &RationalFlag) -> Result<Poly<Rational>> {
        self.check_rank(flag.rank())?;
        self.reject_trivial()?;
        let mut e = Poly::<Rational>::one(self.rank);
        for (w, m) in self.entries() {
            e = &e * &Poly::linear(&flag.coords(w)).pow(m as u32);
        }
        Ok(e)
    }
}
