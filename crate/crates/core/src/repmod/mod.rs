//! Representations of `E = (Z/2)^l` and of rank-`l` tori, flags in the dual
//! space, subgroups, and the Euler-class polynomials of representation
//! tables.

mod character;
pub mod doc;
mod flag;
mod subgroup;
mod table;

pub use character::{CharF2, Label, Weight};
pub use flag::{FlagE, RationalFlag};
pub use subgroup::{fixed_dim, fixed_subrep, FixedSubrep, Subgroup};
pub use table::{RepE, RepT, RepTable};

use crate::error::Result;
use crate::polyring::{Field, Poly};

/// Splitting of a representation along a flag: `U = U^G + U_1 + ... + U_l`.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition<R> {
    pub fixed_dim: u64,
    /// `parts[i]` is `U_{i+1}`, a sub-table of the same rank.
    pub parts: Vec<R>,
}

impl<L: Label> Decomposition<RepTable<L>> {
    pub fn dims(&self) -> Vec<u64> {
        self.parts.iter().map(RepTable::dim).collect()
    }
}

/// Behaviour shared by representations of `E` and of tori.
pub trait Representation: Sized {
    type Flag;
    type Field: Field;

    fn dim(&self) -> u64;
    fn fixed_dim(&self) -> u64;
    fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Assigns each nontrivial label to the first step of the flag that
    /// contains it.
    fn decompose(&self, flag: &Self::Flag) -> Result<Decomposition<Self>>;

    /// `prod_alpha alpha^{dim U^alpha}` written in the flag's coordinates.
    fn euler_poly(&self, flag: &Self::Flag) -> Result<Poly<Self::Field>>;
}
