use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::gcd_i64;

/// Label of a one-dimensional summand: a character of `E` or a torus weight.
pub trait Label: Clone + Ord + fmt::Debug + fmt::Display + Send + Sync {
    fn rank(&self) -> usize;
    fn is_trivial(&self) -> bool;
    /// Coordinates as integers, the form used by input documents.
    fn coords(&self) -> Vec<i64>;
    fn from_coords(coords: &[i64]) -> Result<Self>;
    fn trivial(rank: usize) -> Self;
}

/// A character `alpha` in `E* = F2^l`, stored as a bitmask (bit `i` is
/// coordinate `i`).
///
/// Ordered by rank, then by the bitmask read as an integer. That compares
/// the last coordinate first, matching the monomial order `Tl > ... > T1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharF2 {
    rank: u8,
    bits: u64,
}

pub(crate) const MAX_RANK: usize = 64;

impl CharF2 {
    pub fn new(rank: usize, bits: u64) -> Result<Self> {
        if rank > MAX_RANK {
            return Err(Error::Resource(format!("rank {rank} exceeds {MAX_RANK}")));
        }
        if rank < 64 && bits >> rank != 0 {
            return Err(Error::Input(format!("bits {bits:#b} exceed rank {rank}")));
        }
        Ok(CharF2 {
            rank: rank as u8,
            bits,
        })
    }

    pub(crate) fn from_bits(rank: usize, bits: u64) -> Self {
        debug_assert!(rank == 64 || bits >> rank == 0);
        CharF2 {
            rank: rank as u8,
            bits,
        }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn coord(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    /// Sum of characters (pointwise product of the `+-1` valued functions).
    pub fn add(&self, other: &CharF2) -> CharF2 {
        debug_assert_eq!(self.rank, other.rank);
        CharF2 {
            rank: self.rank,
            bits: self.bits ^ other.bits,
        }
    }

    /// Whether `alpha(v) = 0` for the group element `v` (as a bitmask).
    pub fn vanishes_on(&self, v: u64) -> bool {
        (self.bits & v).count_ones().is_multiple_of(2)
    }
}

impl Label for CharF2 {
    fn rank(&self) -> usize {
        self.rank as usize
    }

    fn is_trivial(&self) -> bool {
        self.bits == 0
    }

    fn coords(&self) -> Vec<i64> {
        (0..self.rank()).map(|i| self.coord(i) as i64).collect()
    }

    fn from_coords(coords: &[i64]) -> Result<Self> {
        let mut bits = 0u64;
        for (i, &c) in coords.iter().enumerate() {
            match c {
                0 => {}
                1 => bits |= 1 << i,
                _ => {
                    return Err(Error::Input(format!(
                        "character coordinates must be 0 or 1, got {c}"
                    )))
                }
            }
        }
        CharF2::new(coords.len(), bits)
    }

    fn trivial(rank: usize) -> Self {
        CharF2::from_bits(rank, 0)
    }
}

impl fmt::Display for CharF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rank() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.coord(i) as u8)?;
        }
        f.write_str("]")
    }
}

/// A weight `alpha` in `L* = Z^l`.
///
/// Ordered by rank, then comparing coordinates from the last one down, like
/// [`CharF2`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Primitive representative of the rational line through `self`, first
    /// nonzero entry positive. The zero weight is returned unchanged.
    pub fn primitive(&self) -> Weight {
        let g = self.0.iter().fold(0, |acc, &x| gcd_i64(acc, x));
        if g == 0 {
            return self.clone();
        }
        let sign = self.0.iter().find(|&&x| x != 0).map_or(1, |x| x.signum());
        Weight(self.0.iter().map(|&x| x / g * sign).collect())
    }

    pub fn dot(&self, v: &[f64]) -> f64 {
        self.0.iter().zip(v).map(|(&a, &b)| a as f64 * b).sum()
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|&x| x * k).collect())
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Label for Weight {
    fn rank(&self) -> usize {
        self.0.len()
    }

    fn is_trivial(&self) -> bool {
        self.is_zero()
    }

    fn coords(&self) -> Vec<i64> {
        self.0.clone()
    }

    fn from_coords(coords: &[i64]) -> Result<Self> {
        Ok(Weight(coords.to_vec()))
    }

    fn trivial(rank: usize) -> Self {
        Weight(vec![0; rank])
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}
